#include "layoutalg/flat_layout.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace layoutalg {

FlatLayout::FlatLayout(IntVec shape, IntVec stride)
    : shape_(std::move(shape)), stride_(std::move(stride)) {
    if (shape_.size() != stride_.size()) {
        throw Error(ErrorKind::LengthMismatch, "shape and stride lengths differ");
    }
    for (Int s : shape_) {
        if (s < 1) throw Error(ErrorKind::InvalidArgument, "shape entries must be positive");
    }
    for (Int d : stride_) {
        if (d < 0) throw Error(ErrorKind::InvalidArgument, "strides must be non-negative");
    }
}

Int FlatLayout::cosize() const {
    Int c = 1;
    for (std::size_t i = 0; i < rank(); ++i) c = checked_add(c, checked_mul(shape_[i] - 1, stride_[i]));
    return c;
}

Int eval_coord(const FlatLayout& l, const Coordinate& c) {
    if (c.size() != l.rank()) throw Error(ErrorKind::OutOfRange, "coordinate rank mismatch");
    Int y = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] >= l.shape()[i]) {
            throw Error(ErrorKind::OutOfRange, "coordinate outside shape");
        }
        y = checked_add(y, checked_mul(c[i], l.stride()[i]));
    }
    return y;
}

Int eval(const FlatLayout& l, Int x) { return eval_coord(l, colex_inv(l.shape(), x)); }

FlatLayout restrict(const FlatLayout& l, const std::vector<std::size_t>& idx) {
    IntVec s;
    IntVec d;
    for (std::size_t i : idx) {
        if (i < 1 || i > l.rank()) throw Error(ErrorKind::OutOfRange, "restriction index out of range");
        s.push_back(l.shape()[i - 1]);
        d.push_back(l.stride()[i - 1]);
    }
    return {std::move(s), std::move(d)};
}

namespace {

template <class Keep>
FlatLayout keep_modes(const FlatLayout& l, Keep keep) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        if (keep(l.shape()[i], l.stride()[i])) idx.push_back(i + 1);
    }
    return restrict(l, idx);
}

}  // namespace

FlatLayout squeeze(const FlatLayout& l) {
    return keep_modes(l, [](Int s, Int) { return s != 1; });
}

FlatLayout filter_zeros(const FlatLayout& l) {
    return keep_modes(l, [](Int, Int d) { return d != 0; });
}

FlatLayout sort(const FlatLayout& l) {
    std::vector<std::size_t> idx(l.rank());
    std::iota(idx.begin(), idx.end(), std::size_t{1});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const Int da = l.stride()[a - 1];
        const Int db = l.stride()[b - 1];
        if (da != db) return da < db;
        return l.shape()[a - 1] < l.shape()[b - 1];
    });
    return restrict(l, idx);
}

FlatLayout permute(const FlatLayout& l, const std::vector<std::size_t>& sigma) {
    if (sigma.size() != l.rank()) {
        throw Error(ErrorKind::NotAPermutation, "permutation length differs from rank");
    }
    std::vector<bool> seen(l.rank(), false);
    for (std::size_t v : sigma) {
        if (v < 1 || v > l.rank() || seen[v - 1]) {
            throw Error(ErrorKind::NotAPermutation, "argument is not a permutation of the modes");
        }
        seen[v - 1] = true;
    }
    return restrict(l, sigma);
}

FlatLayout concat_flat(const std::vector<FlatLayout>& ls) {
    IntVec s;
    IntVec d;
    for (const auto& l : ls) {
        s.insert(s.end(), l.shape().begin(), l.shape().end());
        d.insert(d.end(), l.stride().begin(), l.stride().end());
    }
    return {std::move(s), std::move(d)};
}

FlatLayout coalesce_flat(const FlatLayout& l) {
    const FlatLayout sq = squeeze(l);
    IntVec s;
    IntVec d;
    for (std::size_t i = 0; i < sq.rank(); ++i) {
        const Int si = sq.shape()[i];
        const Int di = sq.stride()[i];
        if (!s.empty() && checked_mul(s.back(), d.back()) == di) {
            s.back() = checked_mul(s.back(), si);
        } else {
            s.push_back(si);
            d.push_back(di);
        }
    }
    return {std::move(s), std::move(d)};
}

bool is_coalesced_flat(const FlatLayout& l) {
    for (std::size_t i = 0; i < l.rank(); ++i) {
        if (l.shape()[i] == 1) return false;
        if (i + 1 < l.rank() && checked_mul(l.shape()[i], l.stride()[i]) == l.stride()[i + 1]) {
            return false;
        }
    }
    return true;
}

bool is_compact(const FlatLayout& l) {
    const FlatLayout ss = sort(squeeze(l));
    Int expected = 1;
    for (std::size_t i = 0; i < ss.rank(); ++i) {
        if (ss.stride()[i] != expected) return false;
        expected = checked_mul(expected, ss.shape()[i]);
    }
    return true;
}

bool is_tractable_flat(const FlatLayout& l) {
    const FlatLayout s = sort(l);
    for (std::size_t i = 0; i + 1 < s.rank(); ++i) {
        const Int di = s.stride()[i];
        if (di == 0) continue;
        if (s.stride()[i + 1] % checked_mul(s.shape()[i], di) != 0) return false;
    }
    return true;
}

bool is_complementable(const FlatLayout& l) {
    const FlatLayout s = sort(squeeze(l));
    for (std::size_t i = 0; i < s.rank(); ++i) {
        if (s.stride()[i] == 0) return false;
        if (i + 1 < s.rank() && s.stride()[i + 1] % checked_mul(s.shape()[i], s.stride()[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool is_n_complementable(const FlatLayout& l, Int n) {
    if (n < 1 || !is_complementable(l)) return false;
    const FlatLayout s = sort(squeeze(l));
    if (s.rank() == 0) return true;
    return n % checked_mul(s.shape().back(), s.stride().back()) == 0;
}

FlatLayout complement_flat(const FlatLayout& a, std::optional<Int> n) {
    if (n ? !is_n_complementable(a, *n) : !is_complementable(a)) {
        throw Error(ErrorKind::NotComplementable,
                    n ? "layout is not " + std::to_string(*n) + "-complementable"
                      : std::string("layout is not complementable"));
    }
    const FlatLayout s = sort(squeeze(a));
    IntVec shape;
    IntVec stride;
    Int reach = 1;  // s_{i-1} d_{i-1}, with 1 before the first mode
    for (std::size_t i = 0; i < s.rank(); ++i) {
        shape.push_back(s.stride()[i] / reach);
        stride.push_back(reach);
        reach = checked_mul(s.shape()[i], s.stride()[i]);
    }
    if (n) {
        shape.push_back(*n / reach);
        stride.push_back(reach);
    }
    return coalesce_flat(FlatLayout(std::move(shape), std::move(stride)));
}

}  // namespace layoutalg
