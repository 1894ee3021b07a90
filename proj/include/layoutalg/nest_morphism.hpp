#pragma once

// The category of nested tuples, refinements, mutual refinements, and the
// tractable layout composition algorithm built on them.

#include <optional>
#include <utility>
#include <vector>

#include "layoutalg/layout.hpp"
#include "layoutalg/nested_tuple.hpp"
#include "layoutalg/tuple_morphism.hpp"

namespace layoutalg {

/// A morphism S -> T of nested tuples: a tuple morphism S♭ -> T♭.
class NestMorphism {
public:
    NestMorphism() = default;
    NestMorphism(NestedTuple domain, NestedTuple codomain, PointedMap map);

    [[nodiscard]] const NestedTuple& domain() const noexcept { return domain_; }
    [[nodiscard]] const NestedTuple& codomain() const noexcept { return codomain_; }
    [[nodiscard]] const TupleMorphism& flat() const noexcept { return flat_; }
    [[nodiscard]] const PointedMap& map() const noexcept { return flat_.map(); }

    friend bool operator==(const NestMorphism&, const NestMorphism&) = default;

private:
    NestedTuple domain_;
    NestedTuple codomain_;
    TupleMorphism flat_;
};

/// The flattening has standard form and the codomain is a flat tuple.
bool has_standard_form(const NestMorphism& f);
bool is_non_degenerate(const NestMorphism& f);

/// g ∘ f.  Throws `Error{DomainMismatch}` unless codomain(f) == domain(g).
NestMorphism compose_nested(const NestMorphism& f, const NestMorphism& g);
/// L_f: the layout L_{f♭} reparenthesized by the profile of the domain.
Layout layout_of_nested(const NestMorphism& f);
/// f_L: domain shape(L), codomain and map of the standard representation of
/// L♭.  Throws `Error{NotTractable}`.
NestMorphism standard_representation_nested(const Layout& l);

/// (f_1, ..., f_k): domain (S_1, ..., S_k) into the shared codomain.
NestMorphism concat_nm(const std::vector<NestMorphism>& fs);
/// coal(f♭) with a bare-integer domain when one entry remains, `1` when none.
NestMorphism coalesce_nm(const NestMorphism& f);
/// (f♭)^c with its codomain reparenthesized to the codomain of f.
NestMorphism complement_nm(const NestMorphism& f);
/// f ⊘ g = f ∘ (g, g^c).
NestMorphism logical_divide_m(const NestMorphism& f, const NestMorphism& g);
/// f ⊗ g = (f, f^c ∘ g).
NestMorphism logical_product_m(const NestMorphism& f, const NestMorphism& g);

/// `fine` refines `coarse`.
struct Refinement {
    NestedTuple fine;
    NestedTuple coarse;
    friend bool operator==(const Refinement&, const Refinement&) = default;
};

/// Refinements T' -> T and U' -> U with T'♭ a prefix of U'♭.
struct MutualRefinement {
    Refinement t_ref;
    Refinement u_ref;
    friend bool operator==(const MutualRefinement&, const MutualRefinement&) = default;
};

/// Greedy two-pointer mutual refinement of (t, u); nullopt when the greedy
/// entry splitting fails.
std::optional<MutualRefinement> mutual_refinement(const NestedTuple& t, const NestedTuple& u);

/// A morphism transported across a refinement, with the induced refinement
/// on the other side.
struct Transported {
    NestMorphism morphism;
    Refinement induced;
};

/// Pullback of a refinement `tprime` of codomain(f): f' : S' -> T'.
/// Throws `Error{NotARefinement}`.
Transported pullback(const NestMorphism& f, const NestedTuple& tprime);
/// Pushforward of a refinement `sprime` of domain(f): f' : S' -> T'.
/// Throws `Error{NotARefinement}`.
Transported pushforward(const NestMorphism& f, const NestedTuple& sprime);

/// Composable replacements (f', g') of f : S -> T and g : U -> V built from a
/// mutual refinement of (T, U).  Throws `Error{InvalidArgument}` when `mr`
/// does not refine (codomain(f), domain(g)).
std::pair<NestMorphism, NestMorphism> make_composable(const NestMorphism& f, const NestMorphism& g,
                                                      const MutualRefinement& mr);

/// Weak composite C of tractable layouts: Φ_C = Φ_B ∘ Φ_A with shape(C)
/// refining shape(A).  nullopt when no mutual refinement is found.
std::optional<Layout> compose_tractable(const Layout& a, const Layout& b);

/// Division-index admissibility of flat layouts `a` (no unit shapes, no zero
/// strides) and `b`, checked directly from its definition.
bool is_admissible_for_composition(const FlatLayout& a, const FlatLayout& b);

}  // namespace layoutalg
