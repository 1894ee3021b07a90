#pragma once

// Nested layouts and the user-facing layout algebra.

#include <cstddef>
#include <vector>

#include "layoutalg/flat_layout.hpp"
#include "layoutalg/nested_tuple.hpp"

namespace layoutalg {

/// A layout `S:D` of congruent nested tuples; S has positive entries and D
/// non-negative ones.  Evaluation goes through the flattening.
class Layout {
public:
    /// The empty layout `():()`.
    Layout() = default;
    Layout(NestedTuple shape, NestedTuple stride);
    /// The depth-1 layout with the same shape and stride lists.
    explicit Layout(const FlatLayout& flat);

    [[nodiscard]] const NestedTuple& shape() const noexcept { return shape_; }
    [[nodiscard]] const NestedTuple& stride() const noexcept { return stride_; }

    [[nodiscard]] std::size_t rank() const noexcept { return shape_.rank(); }
    [[nodiscard]] std::size_t len() const noexcept { return shape_.len(); }
    [[nodiscard]] std::size_t depth() const noexcept { return shape_.depth(); }
    [[nodiscard]] Int size() const { return shape_.size(); }
    [[nodiscard]] Int cosize() const { return flatten().cosize(); }
    /// len + depth.
    [[nodiscard]] std::size_t complexity() const noexcept { return len() + depth(); }

    /// The i-th mode (0-based) as a layout.
    [[nodiscard]] Layout mode(std::size_t i) const;
    /// S♭:D♭.
    [[nodiscard]] FlatLayout flatten() const;

    friend bool operator==(const Layout&, const Layout&) = default;

private:
    NestedTuple shape_;
    NestedTuple stride_;
};

/// Layout function: Φ_L(x).
Int eval(const Layout& l, Int x);

/// The layout whose modes are the given layouts.
Layout concat(const std::vector<Layout>& ls);
/// L_P: Q-substitution of the modes of `l` by the profile `p`.
Layout substitute_profile(const Layout& l, const Profile& p);
/// S♭:D♭.
inline FlatLayout flatten(const Layout& l) { return l.flatten(); }

/// The flattening is tractable.
bool is_tractable(const Layout& l);
/// Unit shape entries carry zero stride.
bool is_non_degenerate(const Layout& l);
/// Replaces the stride of every unit shape entry by 0 (same layout function).
Layout make_non_degenerate(const Layout& l);

/// The unique depth <= 1 layout of minimal complexity with the same function:
/// coal♭ of the flattening if its rank m > 1, `s:d` if m = 1, `1:0` if m = 0.
Layout coalesce(const Layout& l);
/// Coalesces each mode of `l` relative to `sbar` and reassembles with the
/// profile of `sbar`.  Throws `Error{NotARefinement}`.
Layout coalesce_relative(const Layout& l, const NestedTuple& sbar);
/// coal(comp♭(A♭, n)).  Throws `Error{NotComplementable}`.
Layout complement(const Layout& a, Int n);

/// B ∘ A: the layout with Φ = Φ_B ∘ Φ_A, shape refining shape(A), coalesced
/// over shape(A).  A is first stripped of strides over unit modes and B is
/// coalesced; both must then be tractable, except that any A composes with a
/// B whose coalescing has rank <= 1.  Throws `Error{NotTractable}` or
/// `Error{NotComposable}`.
Layout compose(const Layout& a, const Layout& b);
/// A ⊘ B = A ∘ (B, comp(B, size(A))).
Layout logical_divide(const Layout& a, const Layout& b);
/// A ⊗ B = (A, comp(A, size(A)·cosize(B)) ∘ B).
Layout logical_product(const Layout& a, const Layout& b);

/// B ∘ A as a flat layout of shape shape(A).  Throws `Error{NotComposable}`
/// when the composite exists only as a nested layout.
FlatLayout compose_flat(const FlatLayout& a, const FlatLayout& b);
/// A ⊘♭ B = A ∘ (B ⋆ comp♭(B, size(A))), flattened.
FlatLayout flat_divide(const FlatLayout& a, const FlatLayout& b);
/// A ⊗♭ B = A ⋆ (comp♭(A, size(A)·cosize(B)) ∘ B), flattened.
FlatLayout flat_product(const FlatLayout& a, const FlatLayout& b);

}  // namespace layoutalg
