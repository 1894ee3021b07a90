#pragma once

// The category of flat tuples and tractable pointed maps between their index
// sets, and its dictionary with tractable flat layouts.

#include <cstddef>
#include <vector>

#include "layoutalg/flat_layout.hpp"
#include "layoutalg/nested_tuple.hpp"

namespace layoutalg {

/// Image of a pointed map: 1-based codomain index, or `kStar` for the base point.
using MapEntry = std::size_t;
inline constexpr MapEntry kStar = 0;

/// A list of images α(1..m); tractable when no codomain index repeats.
using PointedMap = std::vector<MapEntry>;

/// A morphism (s_1..s_m) -> (t_1..t_n) lying over a tractable pointed map α
/// with s_i = t_{α(i)} whenever α(i) ≠ ⋆.
class TupleMorphism {
public:
    /// The identity on the empty tuple.
    TupleMorphism() = default;
    TupleMorphism(IntVec domain, IntVec codomain, PointedMap map);

    static TupleMorphism identity(const IntVec& t);

    [[nodiscard]] const IntVec& domain() const noexcept { return domain_; }
    [[nodiscard]] const IntVec& codomain() const noexcept { return codomain_; }
    [[nodiscard]] const PointedMap& map() const noexcept { return map_; }

    friend bool operator==(const TupleMorphism&, const TupleMorphism&) = default;

private:
    IntVec domain_;
    IntVec codomain_;
    PointedMap map_;
};

/// s_i = 1 implies α(i) = ⋆.
bool is_non_degenerate(const TupleMorphism& f);
/// No ⋆ in the map (tractability already excludes repeats).
bool is_injective(const TupleMorphism& f);
/// n ∈ Image when n ≥ 1, and every j < n outside the image has t_j ≠ 1 and
/// j+1 in the image.
bool has_standard_form(const TupleMorphism& f);

/// g ∘ f.  Throws `Error{DomainMismatch}` unless codomain(f) = domain(g).
TupleMorphism compose_morphisms(const TupleMorphism& f, const TupleMorphism& g);

/// L_f: shape domain(f), stride t_1 ... t_{α(i)-1} (0 for ⋆).
FlatLayout layout_of(const TupleMorphism& f);
/// f_L: the standard representation of a tractable flat layout.
/// Throws `Error{NotTractable}`.
TupleMorphism standard_representation(const FlatLayout& l);

/// |f| as a table over [0, size(domain)), computed by colex transport.
std::vector<Int> realize(const TupleMorphism& f);

/// f ⊕ g: concatenated domains and codomains.
TupleMorphism sum(const TupleMorphism& f, const TupleMorphism& g);
/// Concatenation of morphisms into a shared codomain with disjoint images.
/// Throws `Error{DomainMismatch}` or `Error{ImagesNotDisjoint}`.
TupleMorphism concat_morphisms(const std::vector<TupleMorphism>& fs);
/// Drops unit entries on both sides.
TupleMorphism squeeze_m(const TupleMorphism& f);
/// Reorders the domain: ⋆-entries first (by size, stably), then by image.
TupleMorphism sort_m(const TupleMorphism& f);
/// Squeezes, then merges runs of domain and codomain entries.
TupleMorphism coalesce_m(const TupleMorphism& f);
/// f^c: the inclusion of the codomain entries outside the image of f.
/// Throws `Error{NotInjective}`.
TupleMorphism complement_m(const TupleMorphism& f);
/// f ∘ (g ⋆ g^c).
TupleMorphism flat_divide_m(const TupleMorphism& f, const TupleMorphism& g);
/// f ⋆ (f^c ∘ g).
TupleMorphism flat_product_m(const TupleMorphism& f, const TupleMorphism& g);

}  // namespace layoutalg
