#include "layoutalg/oracle.hpp"

#include <algorithm>
#include <string>

namespace layoutalg::oracle {

FunctionTable table_of(const FlatLayout& l, Int cap) {
    const Int n = l.size();
    if (n > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "layout size " + std::to_string(n) + " exceeds oracle cap " + std::to_string(cap));
    }
    FunctionTable t{n, std::vector<Int>(static_cast<std::size_t>(n))};
    // Odometer over coordinates, first axis fastest, offset kept incrementally.
    std::vector<Int> coord(l.rank(), 0);
    Int offset = 0;
    for (Int x = 0; x < n; ++x) {
        t.values[static_cast<std::size_t>(x)] = offset;
        for (std::size_t i = 0; i < l.rank(); ++i) {
            if (++coord[i] < l.shape()[i]) {
                offset += l.stride()[i];
                break;
            }
            offset -= (l.shape()[i] - 1) * l.stride()[i];
            coord[i] = 0;
        }
    }
    return t;
}

FunctionTable table_of(const Layout& l, Int cap) { return table_of(l.flatten(), cap); }

bool functions_equal(const Layout& a, const Layout& b, Int cap) {
    return a.size() == b.size() && table_of(a, cap) == table_of(b, cap);
}

namespace {

bool mode_is_coalesced(const NestedTuple& s, const NestedTuple& d) {
    if (s.is_integer()) return s.value() > 1 || d.value() == 0;
    if (s.depth() != 1 || s.len() < 2) return false;
    for (std::size_t i = 0; i < s.len(); ++i) {
        if (s.entry(i) == 1) return false;
        if (i + 1 < s.len() && s.entry(i) * d.entry(i) == d.entry(i + 1)) return false;
    }
    return true;
}

}  // namespace

bool is_coalesced_over(const Layout& l, const NestedTuple& sbar) {
    if (!refines(l.shape(), sbar)) return false;
    const auto shapes = relative_modes(l.shape(), sbar);
    const auto strides = split_relative(l.stride(), l.shape(), sbar);
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (!mode_is_coalesced(shapes[i], strides[i])) return false;
    }
    return true;
}

bool check_compose(const Layout& a, const Layout& b, const Layout& c, Int cap) {
    const FunctionTable ta = table_of(a, cap);
    const FunctionTable tb = table_of(b, cap);
    for (Int y : ta.values) {
        if (y >= tb.domain_size) {
            throw Error(ErrorKind::ImageOutOfRange,
                        "image value " + std::to_string(y) + " outside the domain of the second layout");
        }
    }
    if (c.size() != a.size()) return false;
    const FunctionTable tc = table_of(c, cap);
    for (std::size_t x = 0; x < ta.values.size(); ++x) {
        if (tc.values[x] != tb.values[static_cast<std::size_t>(ta.values[x])]) return false;
    }
    return refines(c.shape(), a.shape()) && is_coalesced_over(c, a.shape());
}

namespace {

/// Whether `values` hits every element of [0, n) exactly once.
bool is_bijection_onto(const std::vector<Int>& values, Int n) {
    if (static_cast<Int>(values.size()) != n) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Int v : values) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

}  // namespace

bool check_complement(const Layout& a, const Layout& b, Int n, Int cap) {
    if (a.size() * b.size() != n) return false;
    return is_bijection_onto(table_of(concat({a, b}), cap).values, n);
}

namespace {

struct Search {
    Int n;
    std::size_t max_rank;
    std::vector<FlatLayout>* out;

    // `hit` marks the current image set, `values` lists it.
    void extend(std::vector<char>& hit, std::vector<Int>& values, IntVec& shape, IntVec& stride,
                Int remaining) const {
        if (remaining == 1) {
            if (static_cast<Int>(values.size()) == n) out->emplace_back(shape, stride);
            return;
        }
        if (shape.size() >= max_rank) return;
        Int missing = 0;  // smallest value not yet hit
        while (missing < n && hit[static_cast<std::size_t>(missing)]) ++missing;
        const Int lo = stride.empty() ? 1 : stride.back() + 1;
        for (Int d = lo; d <= missing; ++d) {
            for (Int s = 2; s <= remaining; ++s) {
                if (remaining % s != 0) continue;
                if (!stride.empty() && shape.back() * stride.back() == d) continue;
                const std::size_t before = values.size();
                bool ok = true;
                for (std::size_t k = 0; k < before && ok; ++k) {
                    for (Int c = 1; c < s; ++c) {
                        const Int v = values[k] + c * d;
                        if (v >= n || hit[static_cast<std::size_t>(v)]) {
                            ok = false;
                            break;
                        }
                        hit[static_cast<std::size_t>(v)] = 1;
                        values.push_back(v);
                    }
                }
                if (ok) {
                    shape.push_back(s);
                    stride.push_back(d);
                    extend(hit, values, shape, stride, remaining / s);
                    shape.pop_back();
                    stride.pop_back();
                }
                for (std::size_t k = before; k < values.size(); ++k) {
                    hit[static_cast<std::size_t>(values[k])] = 0;
                }
                values.resize(before);
            }
        }
    }
};

}  // namespace

std::vector<FlatLayout> exhaustive_complement_search(const Layout& a, Int n, std::size_t max_rank,
                                                     Int cap) {
    if (n > cap) {
        throw Error(ErrorKind::CapExceeded,
                    "search size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
    std::vector<FlatLayout> out;
    if (n < 1 || n % a.size() != 0) return out;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    std::vector<Int> values;
    for (Int v : table_of(a, cap).values) {
        if (v >= n || hit[static_cast<std::size_t>(v)]) return out;
        hit[static_cast<std::size_t>(v)] = 1;
        values.push_back(v);
    }
    IntVec shape;
    IntVec stride;
    Search{n, max_rank, &out}.extend(hit, values, shape, stride, n / a.size());
    return out;
}

}  // namespace layoutalg::oracle
