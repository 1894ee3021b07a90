#include "layoutalg/nest_morphism.hpp"

#include <algorithm>
#include <string>

namespace layoutalg {

NestMorphism::NestMorphism(NestedTuple domain, NestedTuple codomain, PointedMap map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      flat_(domain_.entries(), codomain_.entries(), std::move(map)) {}

bool has_standard_form(const NestMorphism& f) {
    return has_standard_form(f.flat()) && f.codomain().profile() == Profile::flat(f.codomain().len());
}

bool is_non_degenerate(const NestMorphism& f) { return is_non_degenerate(f.flat()); }

NestMorphism compose_nested(const NestMorphism& f, const NestMorphism& g) {
    if (f.codomain() != g.domain()) {
        throw Error(ErrorKind::DomainMismatch, "codomain of the first morphism is not the domain of the second");
    }
    return {f.domain(), g.codomain(), compose_morphisms(f.flat(), g.flat()).map()};
}

Layout layout_of_nested(const NestMorphism& f) {
    const FlatLayout l = layout_of(f.flat());
    return {f.domain(), NestedTuple(l.stride(), f.domain().profile())};
}

NestMorphism standard_representation_nested(const Layout& l) {
    const TupleMorphism f = standard_representation(l.flatten());
    return {l.shape(), NestedTuple::flat(f.codomain()), f.map()};
}

NestMorphism concat_nm(const std::vector<NestMorphism>& fs) {
    if (fs.empty()) throw Error(ErrorKind::InvalidArgument, "concatenation of no morphisms");
    std::vector<NestedTuple> domains;
    std::vector<TupleMorphism> flats;
    for (const auto& f : fs) {
        if (f.codomain() != fs.front().codomain()) {
            throw Error(ErrorKind::DomainMismatch, "concatenated morphisms must share a codomain");
        }
        domains.push_back(f.domain());
        flats.push_back(f.flat());
    }
    return {NestedTuple::tuple(domains), fs.front().codomain(), concat_morphisms(flats).map()};
}

NestMorphism coalesce_nm(const NestMorphism& f) {
    const TupleMorphism c = coalesce_m(f.flat());
    const NestedTuple cod = NestedTuple::flat(c.codomain());
    switch (c.domain().size()) {
        case 0: return {NestedTuple::integer(1), cod, {kStar}};
        case 1: return {NestedTuple::integer(c.domain()[0]), cod, c.map()};
        default: return {NestedTuple::flat(c.domain()), cod, c.map()};
    }
}

NestMorphism complement_nm(const NestMorphism& f) {
    const TupleMorphism c = complement_m(f.flat());
    return {NestedTuple::flat(c.domain()), f.codomain(), c.map()};
}

NestMorphism logical_divide_m(const NestMorphism& f, const NestMorphism& g) {
    const NestMorphism gc = complement_nm(g);
    return compose_nested(concat_nm({g, gc}), f);
}

NestMorphism logical_product_m(const NestMorphism& f, const NestMorphism& g) {
    const NestMorphism tail = compose_nested(g, complement_nm(f));
    return concat_nm({f, tail});
}

// ------------------------------------------------------ mutual refinement

namespace {

NestedTuple as_part(const IntVec& mode) {
    return mode.size() == 1 ? NestedTuple::integer(mode.front()) : NestedTuple::flat(mode);
}

/// Offsets of consecutive parts within their concatenated flattening.
std::vector<std::size_t> part_offsets(const std::vector<NestedTuple>& parts) {
    std::vector<std::size_t> offsets;
    std::size_t o = 0;
    for (const auto& p : parts) {
        offsets.push_back(o);
        o += p.len();
    }
    return offsets;
}

}  // namespace

std::optional<MutualRefinement> mutual_refinement(const NestedTuple& t, const NestedTuple& u) {
    IntVec x = t.entries();
    IntVec y = u.entries();
    std::vector<NestedTuple> xp;
    std::vector<NestedTuple> yp;
    IntVec xmode;
    IntVec ymode;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
            xmode.push_back(x[i]);
            xp.push_back(as_part(xmode));
            xmode.clear();
            ymode.push_back(y[j]);
            yp.push_back(as_part(ymode));
            ymode.clear();
            ++i;
            ++j;
        } else if (y[j] % x[i] == 0) {
            xmode.push_back(x[i]);
            xp.push_back(as_part(xmode));
            xmode.clear();
            ymode.push_back(x[i]);
            y[j] /= x[i];
            ++i;
        } else if (x[i] % y[j] == 0) {
            xmode.push_back(y[j]);
            ymode.push_back(y[j]);
            yp.push_back(as_part(ymode));
            ymode.clear();
            x[i] /= y[j];
            ++j;
        } else {
            return std::nullopt;
        }
    }
    if (i < x.size()) return std::nullopt;
    if (!ymode.empty()) {
        ymode.push_back(y[j]);
        yp.push_back(as_part(ymode));
        ++j;
    }
    for (; j < y.size(); ++j) yp.push_back(NestedTuple::integer(y[j]));
    return MutualRefinement{{substitute(xp, t.profile()), t}, {substitute(yp, u.profile()), u}};
}

// -------------------------------------------------- pullback / pushforward

Transported pullback(const NestMorphism& f, const NestedTuple& tprime) {
    const auto rel = relative_modes(tprime, f.codomain());
    const auto offsets = part_offsets(rel);
    std::vector<NestedTuple> parts;
    PointedMap map;
    for (std::size_t i = 0; i < f.domain().len(); ++i) {
        const MapEntry a = f.map()[i];
        if (a == kStar) {
            parts.push_back(NestedTuple::integer(f.domain().entry(i)));
            map.push_back(kStar);
            continue;
        }
        parts.push_back(rel[a - 1]);
        for (std::size_t k = 0; k < rel[a - 1].len(); ++k) map.push_back(offsets[a - 1] + k + 1);
    }
    NestedTuple sprime = substitute(parts, f.domain().profile());
    return {NestMorphism(sprime, tprime, std::move(map)), {sprime, f.domain()}};
}

Transported pushforward(const NestMorphism& f, const NestedTuple& sprime) {
    const auto rel = relative_modes(sprime, f.domain());
    std::vector<std::size_t> preimage(f.codomain().len(), f.domain().len());  // len = none
    for (std::size_t i = 0; i < f.domain().len(); ++i) {
        if (f.map()[i] != kStar) preimage[f.map()[i] - 1] = i;
    }
    std::vector<NestedTuple> parts;
    for (std::size_t j = 0; j < f.codomain().len(); ++j) {
        parts.push_back(preimage[j] < rel.size() ? rel[preimage[j]]
                                                 : NestedTuple::integer(f.codomain().entry(j)));
    }
    const auto offsets = part_offsets(parts);
    PointedMap map;
    for (std::size_t i = 0; i < f.domain().len(); ++i) {
        const MapEntry b = f.map()[i];
        for (std::size_t k = 0; k < rel[i].len(); ++k) {
            map.push_back(b == kStar ? kStar : offsets[b - 1] + k + 1);
        }
    }
    NestedTuple tprime = substitute(parts, f.codomain().profile());
    return {NestMorphism(sprime, tprime, std::move(map)), {tprime, f.codomain()}};
}

std::pair<NestMorphism, NestMorphism> make_composable(const NestMorphism& f, const NestMorphism& g,
                                                      const MutualRefinement& mr) {
    if (mr.t_ref.coarse != f.codomain() || mr.u_ref.coarse != g.domain() ||
        !divides(mr.t_ref.fine, mr.u_ref.fine)) {
        throw Error(ErrorKind::InvalidArgument, "not a mutual refinement of the composable pair");
    }
    const Transported fp = pullback(f, mr.t_ref.fine);
    // Post-compose with the prefix inclusion T'♭ -> U'♭, which keeps positions.
    NestMorphism f2(fp.morphism.domain(), mr.u_ref.fine, fp.morphism.map());
    return {std::move(f2), pushforward(g, mr.u_ref.fine).morphism};
}

std::optional<Layout> compose_tractable(const Layout& a, const Layout& b) {
    const NestMorphism f = standard_representation_nested(a);
    const NestMorphism g = standard_representation_nested(coalesce(b));
    const auto mr = mutual_refinement(f.codomain(), g.domain());
    if (!mr) return std::nullopt;
    const auto [fp, gp] = make_composable(f, g, *mr);
    return layout_of_nested(compose_nested(fp, gp));
}

// ------------------------------------------------------------ admissibility

namespace {

bool divides_int(Int a, Int b) { return a != 0 && b % a == 0; }

}  // namespace

bool is_admissible_for_composition(const FlatLayout& a, const FlatLayout& b) {
    const std::size_t m = a.rank();
    const std::size_t p = b.rank();
    IntVec prefix(p + 1, 1);  // prefix[k] = u_1 ... u_k
    for (std::size_t k = 0; k < p; ++k) prefix[k + 1] = checked_mul(prefix[k], b.shape()[k]);

    for (std::size_t i = 0; i < m; ++i) {
        const Int d = a.stride()[i];
        const Int sd = checked_mul(a.shape()[i], d);
        bool found = false;
        for (std::size_t k = 1; k <= p && !found; ++k) {
            if (!divides_int(prefix[k - 1], d) || !divides_int(d, prefix[k])) continue;
            if (k < p && d == prefix[k]) continue;
            for (std::size_t l = k; l <= p && !found; ++l) {
                if (!divides_int(prefix[l - 1], sd) || !divides_int(sd, prefix[l])) continue;
                if (l < p && sd == prefix[l]) continue;
                found = true;
            }
        }
        if (!found) return false;
    }

    // Intervals [d_i, d_i (s_i - 1)] clipped to [1, s_1 ... s_{m-1} - 1].
    Int bound = 1;
    for (std::size_t i = 0; i + 1 < m; ++i) bound = checked_mul(bound, a.shape()[i]);
    std::vector<std::pair<Int, Int>> intervals;
    for (std::size_t i = 0; i < m; ++i) {
        const Int lo = std::max<Int>(a.stride()[i], 1);
        const Int hi = std::min<Int>(checked_mul(a.stride()[i], a.shape()[i] - 1), bound - 1);
        if (lo <= hi) intervals.emplace_back(lo, hi);
    }
    for (std::size_t x = 0; x < intervals.size(); ++x) {
        for (std::size_t y = x + 1; y < intervals.size(); ++y) {
            if (std::max(intervals[x].first, intervals[y].first) <=
                std::min(intervals[x].second, intervals[y].second)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace layoutalg
