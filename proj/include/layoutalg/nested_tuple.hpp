#pragma once

// Nested integer tuples, their profiles (parenthesization skeletons),
// substitution, refinement, and colexicographic (un)linearization.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "layoutalg/error.hpp"

namespace layoutalg {

using Int = std::int64_t;

/// A flat list of integers: a tuple of depth 1 without its profile.
using IntVec = std::vector<Int>;

/// Per-axis coordinate (x_1, ..., x_m) against a flat reference shape.
using Coordinate = std::vector<Int>;

/// Checked 64-bit arithmetic; throws `Error{Overflow}` instead of wrapping.
Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);

/// Product of the entries (1 for an empty list), overflow-checked.
Int product(const IntVec& values);

/// The parenthesization tree of a nested tuple: a leaf `*` or an ordered list
/// of child profiles.  The empty node `()` is a valid profile.
class Profile {
public:
    /// The leaf profile `*`.
    Profile() = default;

    static Profile leaf() { return Profile{}; }
    static Profile node(std::vector<Profile> children);
    /// The depth-1 profile (*, ..., *) with `length` leaves.
    static Profile flat(std::size_t length);

    [[nodiscard]] bool is_leaf() const noexcept { return leaf_; }
    [[nodiscard]] const std::vector<Profile>& children() const noexcept { return children_; }

    /// Number of leaves.
    [[nodiscard]] std::size_t len() const noexcept;
    /// 1 for a leaf, number of children for a node.
    [[nodiscard]] std::size_t rank() const noexcept;
    /// 0 for a leaf; 1 + max child depth for a node, with depth(()) = 1.
    [[nodiscard]] std::size_t depth() const noexcept;
    /// The i-th mode (0-based); a leaf is its own unique mode.
    [[nodiscard]] const Profile& mode(std::size_t i) const;

    friend bool operator==(const Profile&, const Profile&) = default;

private:
    bool leaf_ = true;
    std::vector<Profile> children_;
};

/// Q-substitution of profiles: replaces the k-th leaf of `q` by `parts[k]`.
Profile substitute(const std::vector<Profile>& parts, const Profile& q);

/// A nested tuple of integers, stored as its flattening plus its profile.
/// Equality is structural: a bare integer `n` differs from the tuple `(n)`.
class NestedTuple {
public:
    /// The empty tuple `()`.
    NestedTuple() : profile_(Profile::node({})) {}
    NestedTuple(IntVec entries, Profile profile);

    /// The depth-0 tuple `n`.
    static NestedTuple integer(Int n);
    /// The depth-1 tuple `(e_1, ..., e_m)`.
    static NestedTuple flat(IntVec entries);
    /// The tuple whose modes are the given tuples.
    static NestedTuple tuple(const std::vector<NestedTuple>& modes);

    [[nodiscard]] const IntVec& entries() const noexcept { return entries_; }
    [[nodiscard]] const Profile& profile() const noexcept { return profile_; }

    [[nodiscard]] bool is_integer() const noexcept { return profile_.is_leaf(); }
    /// The value of a depth-0 tuple.
    [[nodiscard]] Int value() const;

    [[nodiscard]] std::size_t len() const noexcept { return entries_.size(); }
    [[nodiscard]] std::size_t rank() const noexcept { return profile_.rank(); }
    [[nodiscard]] std::size_t depth() const noexcept { return profile_.depth(); }
    /// Product of all entries; 1 for an empty tuple.
    [[nodiscard]] Int size() const { return product(entries_); }

    /// The i-th entry of the flattening (0-based).
    [[nodiscard]] Int entry(std::size_t i) const;
    /// The i-th mode (0-based).
    [[nodiscard]] NestedTuple mode(std::size_t i) const;
    /// All modes in order.
    [[nodiscard]] std::vector<NestedTuple> modes() const;
    /// The flattening as a depth-1 tuple.
    [[nodiscard]] NestedTuple flattened() const { return flat(entries_); }

    /// Every entry >= 1 (valid as a shape).
    [[nodiscard]] bool all_positive() const noexcept;

    friend bool operator==(const NestedTuple&, const NestedTuple&) = default;

private:
    IntVec entries_;
    Profile profile_;
};

/// size(t): the product of all entries.
inline Int size(const NestedTuple& t) { return t.size(); }

/// Q-substitution of nested tuples: flattening is the concatenation of the
/// part flattenings, profile is the Q-substitution of the part profiles.
NestedTuple substitute(const std::vector<NestedTuple>& parts, const Profile& q);

/// Whether `xp` refines `x`.
bool refines(const NestedTuple& xp, const NestedTuple& x);

/// The modes of `xp` relative to `x`, one per entry of `x`.
/// Throws `Error{NotARefinement}` when `xp` does not refine `x`.
std::vector<NestedTuple> relative_modes(const NestedTuple& xp, const NestedTuple& x);

/// Splits `t` into the parts determined by the refinement `xp` -> `x`, where
/// `t` is congruent to `xp`.  Used to carry strides along relative modes.
std::vector<NestedTuple> split_relative(const NestedTuple& t, const NestedTuple& xp,
                                        const NestedTuple& x);

/// Whether the flattening of `a` is a prefix of the flattening of `b`.
bool divides(const NestedTuple& a, const NestedTuple& b);

/// colex(S, x) = sum_i s_1 ... s_{i-1} x_i.
Int colex(const IntVec& shape, const Coordinate& coord);
/// Inverse of colex: x_i = floor(x / (s_1 ... s_{i-1})) mod s_i.
Coordinate colex_inv(const IntVec& shape, Int x);

}  // namespace layoutalg
