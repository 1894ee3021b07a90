#include "layoutalg/nested_tuple.hpp"

#include <algorithm>
#include <string>

namespace layoutalg {

Int checked_mul(Int a, Int b) {
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow,
                    "integer overflow computing " + std::to_string(a) + "*" + std::to_string(b));
    }
    return r;
}

Int checked_add(Int a, Int b) {
    Int r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow,
                    "integer overflow computing " + std::to_string(a) + "+" + std::to_string(b));
    }
    return r;
}

Int product(const IntVec& values) {
    Int p = 1;
    for (Int v : values) p = checked_mul(p, v);
    return p;
}

// ---------------------------------------------------------------- Profile

Profile Profile::node(std::vector<Profile> children) {
    Profile p;
    p.leaf_ = false;
    p.children_ = std::move(children);
    return p;
}

Profile Profile::flat(std::size_t length) {
    return node(std::vector<Profile>(length, leaf()));
}

std::size_t Profile::len() const noexcept {
    if (leaf_) return 1;
    std::size_t n = 0;
    for (const auto& c : children_) n += c.len();
    return n;
}

std::size_t Profile::rank() const noexcept { return leaf_ ? 1 : children_.size(); }

std::size_t Profile::depth() const noexcept {
    if (leaf_) return 0;
    std::size_t d = 0;
    for (const auto& c : children_) d = std::max(d, c.depth());
    return d + 1;
}

const Profile& Profile::mode(std::size_t i) const {
    if (leaf_) {
        if (i != 0) throw Error(ErrorKind::OutOfRange, "mode index out of range");
        return *this;
    }
    if (i >= children_.size()) throw Error(ErrorKind::OutOfRange, "mode index out of range");
    return children_[i];
}

namespace {

Profile substitute_impl(const std::vector<Profile>& parts, const Profile& q, std::size_t& next) {
    if (q.is_leaf()) return parts[next++];
    std::vector<Profile> children;
    children.reserve(q.children().size());
    for (const auto& c : q.children()) children.push_back(substitute_impl(parts, c, next));
    return Profile::node(std::move(children));
}

}  // namespace

Profile substitute(const std::vector<Profile>& parts, const Profile& q) {
    if (parts.size() != q.len()) {
        throw Error(ErrorKind::LengthMismatch,
                    "substitution needs " + std::to_string(q.len()) + " parts, got " +
                        std::to_string(parts.size()));
    }
    std::size_t next = 0;
    return substitute_impl(parts, q, next);
}

// ------------------------------------------------------------ NestedTuple

NestedTuple::NestedTuple(IntVec entries, Profile profile)
    : entries_(std::move(entries)), profile_(std::move(profile)) {
    if (entries_.size() != profile_.len()) {
        throw Error(ErrorKind::LengthMismatch, "profile length does not match entry count");
    }
    for (Int e : entries_) {
        if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative tuple entry");
    }
}

NestedTuple NestedTuple::integer(Int n) { return NestedTuple({n}, Profile::leaf()); }

NestedTuple NestedTuple::flat(IntVec entries) {
    const std::size_t n = entries.size();
    return NestedTuple(std::move(entries), Profile::flat(n));
}

NestedTuple NestedTuple::tuple(const std::vector<NestedTuple>& modes) {
    IntVec entries;
    std::vector<Profile> children;
    children.reserve(modes.size());
    for (const auto& m : modes) {
        entries.insert(entries.end(), m.entries().begin(), m.entries().end());
        children.push_back(m.profile());
    }
    return NestedTuple(std::move(entries), Profile::node(std::move(children)));
}

Int NestedTuple::value() const {
    if (!is_integer()) throw Error(ErrorKind::InvalidArgument, "tuple is not an integer");
    return entries_.front();
}

Int NestedTuple::entry(std::size_t i) const {
    if (i >= entries_.size()) throw Error(ErrorKind::OutOfRange, "entry index out of range");
    return entries_[i];
}

NestedTuple NestedTuple::mode(std::size_t i) const {
    if (is_integer()) {
        if (i != 0) throw Error(ErrorKind::OutOfRange, "mode index out of range");
        return *this;
    }
    const auto& children = profile_.children();
    if (i >= children.size()) throw Error(ErrorKind::OutOfRange, "mode index out of range");
    std::size_t offset = 0;
    for (std::size_t k = 0; k < i; ++k) offset += children[k].len();
    const std::size_t n = children[i].len();
    return NestedTuple(IntVec(entries_.begin() + static_cast<std::ptrdiff_t>(offset),
                              entries_.begin() + static_cast<std::ptrdiff_t>(offset + n)),
                       children[i]);
}

std::vector<NestedTuple> NestedTuple::modes() const {
    std::vector<NestedTuple> out;
    out.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i) out.push_back(mode(i));
    return out;
}

bool NestedTuple::all_positive() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Int e) { return e >= 1; });
}

// ---------------------------------------------------- substitution et al.

NestedTuple substitute(const std::vector<NestedTuple>& parts, const Profile& q) {
    std::vector<Profile> profiles;
    IntVec entries;
    profiles.reserve(parts.size());
    for (const auto& p : parts) {
        profiles.push_back(p.profile());
        entries.insert(entries.end(), p.entries().begin(), p.entries().end());
    }
    return NestedTuple(std::move(entries), substitute(profiles, q));
}

bool refines(const NestedTuple& xp, const NestedTuple& x) {
    if (x.is_integer()) {
        try {
            return xp.size() == x.value();
        } catch (const Error&) {
            return false;
        }
    }
    if (xp.is_integer() || xp.rank() != x.rank()) return false;
    for (std::size_t i = 0; i < x.rank(); ++i) {
        if (!refines(xp.mode(i), x.mode(i))) return false;
    }
    return true;
}

namespace {

void relative_modes_impl(const NestedTuple& xp, const NestedTuple& x,
                         std::vector<NestedTuple>& out) {
    if (x.is_integer()) {
        out.push_back(xp);
        return;
    }
    for (std::size_t i = 0; i < x.rank(); ++i) relative_modes_impl(xp.mode(i), x.mode(i), out);
}

}  // namespace

std::vector<NestedTuple> relative_modes(const NestedTuple& xp, const NestedTuple& x) {
    if (!refines(xp, x)) throw Error(ErrorKind::NotARefinement, "tuple is not a refinement");
    std::vector<NestedTuple> out;
    out.reserve(x.len());
    relative_modes_impl(xp, x, out);
    return out;
}

std::vector<NestedTuple> split_relative(const NestedTuple& t, const NestedTuple& xp,
                                        const NestedTuple& x) {
    if (t.profile() != xp.profile()) {
        throw Error(ErrorKind::LengthMismatch, "tuple is not congruent to the refinement");
    }
    std::vector<NestedTuple> out;
    std::size_t offset = 0;
    for (const auto& m : relative_modes(xp, x)) {
        const std::size_t n = m.len();
        out.emplace_back(IntVec(t.entries().begin() + static_cast<std::ptrdiff_t>(offset),
                                t.entries().begin() + static_cast<std::ptrdiff_t>(offset + n)),
                         m.profile());
        offset += n;
    }
    return out;
}

bool divides(const NestedTuple& a, const NestedTuple& b) {
    const auto& ae = a.entries();
    const auto& be = b.entries();
    return ae.size() <= be.size() && std::equal(ae.begin(), ae.end(), be.begin());
}

Int colex(const IntVec& shape, const Coordinate& coord) {
    if (shape.size() != coord.size()) {
        throw Error(ErrorKind::OutOfRange, "coordinate length does not match shape");
    }
    Int x = 0;
    Int scale = 1;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (coord[i] < 0 || coord[i] >= shape[i]) {
            throw Error(ErrorKind::OutOfRange, "coordinate outside shape");
        }
        x = checked_add(x, checked_mul(scale, coord[i]));
        if (i + 1 < shape.size()) scale = checked_mul(scale, shape[i]);
    }
    return x;
}

Coordinate colex_inv(const IntVec& shape, Int x) {
    if (x < 0 || x >= product(shape)) {
        throw Error(ErrorKind::OutOfRange, "index " + std::to_string(x) + " outside shape");
    }
    Coordinate c(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) {
        c[i] = x % shape[i];
        x /= shape[i];
    }
    return c;
}

}  // namespace layoutalg
