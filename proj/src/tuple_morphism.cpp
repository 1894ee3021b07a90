#include "layoutalg/tuple_morphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace layoutalg {

TupleMorphism::TupleMorphism(IntVec domain, IntVec codomain, PointedMap map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
    if (map_.size() != domain_.size()) {
        throw Error(ErrorKind::LengthMismatch, "map length differs from domain length");
    }
    for (Int e : domain_) {
        if (e < 1) throw Error(ErrorKind::InvalidArgument, "tuple entries must be positive");
    }
    for (Int e : codomain_) {
        if (e < 1) throw Error(ErrorKind::InvalidArgument, "tuple entries must be positive");
    }
    std::vector<bool> hit(codomain_.size(), false);
    for (std::size_t i = 0; i < map_.size(); ++i) {
        const MapEntry a = map_[i];
        if (a == kStar) continue;
        if (a > codomain_.size()) {
            throw Error(ErrorKind::InvalidArgument,
                        "map value " + std::to_string(a) + " exceeds codomain length");
        }
        if (hit[a - 1]) {
            throw Error(ErrorKind::InvalidArgument,
                        "map value " + std::to_string(a) + " repeats (map is not tractable)");
        }
        hit[a - 1] = true;
        if (domain_[i] != codomain_[a - 1]) {
            throw Error(ErrorKind::InvalidArgument,
                        "entry " + std::to_string(i + 1) + " does not match its image");
        }
    }
}

TupleMorphism TupleMorphism::identity(const IntVec& t) {
    PointedMap m(t.size());
    std::iota(m.begin(), m.end(), MapEntry{1});
    return {t, t, std::move(m)};
}

bool is_non_degenerate(const TupleMorphism& f) {
    for (std::size_t i = 0; i < f.domain().size(); ++i) {
        if (f.domain()[i] == 1 && f.map()[i] != kStar) return false;
    }
    return true;
}

bool is_injective(const TupleMorphism& f) {
    return std::none_of(f.map().begin(), f.map().end(), [](MapEntry a) { return a == kStar; });
}

namespace {

std::vector<bool> image_mask(const TupleMorphism& f) {
    std::vector<bool> hit(f.codomain().size(), false);
    for (MapEntry a : f.map()) {
        if (a != kStar) hit[a - 1] = true;
    }
    return hit;
}

}  // namespace

bool has_standard_form(const TupleMorphism& f) {
    const std::size_t n = f.codomain().size();
    if (n == 0) return true;
    const auto hit = image_mask(f);
    if (!hit[n - 1]) return false;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (!hit[j] && (f.codomain()[j] == 1 || !hit[j + 1])) return false;
    }
    return true;
}

TupleMorphism compose_morphisms(const TupleMorphism& f, const TupleMorphism& g) {
    if (f.codomain() != g.domain()) {
        throw Error(ErrorKind::DomainMismatch, "codomain of the first morphism is not the domain of the second");
    }
    PointedMap m(f.map().size(), kStar);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (f.map()[i] != kStar) m[i] = g.map()[f.map()[i] - 1];
    }
    return {f.domain(), g.codomain(), std::move(m)};
}

FlatLayout layout_of(const TupleMorphism& f) {
    IntVec prefix(f.codomain().size() + 1, 1);
    for (std::size_t j = 0; j < f.codomain().size(); ++j) {
        prefix[j + 1] = checked_mul(prefix[j], f.codomain()[j]);
    }
    IntVec d(f.domain().size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (f.map()[i] != kStar) d[i] = prefix[f.map()[i] - 1];
    }
    return {f.domain(), std::move(d)};
}

TupleMorphism standard_representation(const FlatLayout& l) {
    if (!is_tractable_flat(l)) throw Error(ErrorKind::NotTractable, "layout is not tractable");
    const std::size_t m = l.rank();
    // order[p] = original mode index at sorted position p (stable by stride, then shape)
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (l.stride()[a] != l.stride()[b]) return l.stride()[a] < l.stride()[b];
        return l.shape()[a] < l.shape()[b];
    });
    std::size_t k = 0;
    while (k < m && l.stride()[order[k]] == 0) ++k;

    // t' = (gap_{k+1}, s'_{k+1}, gap_{k+2}, s'_{k+2}, ...), indexed from 1
    IntVec tp;
    for (std::size_t p = k; p < m; ++p) {
        const Int d = l.stride()[order[p]];
        if (p == k) {
            tp.push_back(d);
        } else {
            tp.push_back(d / checked_mul(l.shape()[order[p - 1]], l.stride()[order[p - 1]]));
        }
        tp.push_back(l.shape()[order[p]]);
    }
    std::vector<MapEntry> alpha_prime(m, kStar);
    for (std::size_t p = k; p < m; ++p) alpha_prime[order[p]] = 2 * (p - k + 1);

    // Keep positions that are even or carry an entry other than 1.
    std::vector<MapEntry> reindex(tp.size() + 1, kStar);
    IntVec codomain;
    for (std::size_t j = 1; j <= tp.size(); ++j) {
        if (j % 2 == 0 || tp[j - 1] != 1) {
            codomain.push_back(tp[j - 1]);
            reindex[j] = codomain.size();
        }
    }
    PointedMap map(m, kStar);
    for (std::size_t i = 0; i < m; ++i) {
        if (alpha_prime[i] != kStar) map[i] = reindex[alpha_prime[i]];
    }
    return {l.shape(), std::move(codomain), std::move(map)};
}

std::vector<Int> realize(const TupleMorphism& f) {
    const Int n = product(f.domain());
    std::vector<Int> table(static_cast<std::size_t>(n));
    Coordinate y(f.codomain().size());
    for (Int x = 0; x < n; ++x) {
        const Coordinate c = colex_inv(f.domain(), x);
        std::fill(y.begin(), y.end(), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (f.map()[i] != kStar) y[f.map()[i] - 1] = c[i];
        }
        table[static_cast<std::size_t>(x)] = colex(f.codomain(), y);
    }
    return table;
}

TupleMorphism sum(const TupleMorphism& f, const TupleMorphism& g) {
    IntVec dom = f.domain();
    dom.insert(dom.end(), g.domain().begin(), g.domain().end());
    IntVec cod = f.codomain();
    cod.insert(cod.end(), g.codomain().begin(), g.codomain().end());
    PointedMap m = f.map();
    const std::size_t n = f.codomain().size();
    for (MapEntry b : g.map()) m.push_back(b == kStar ? kStar : b + n);
    return {std::move(dom), std::move(cod), std::move(m)};
}

TupleMorphism concat_morphisms(const std::vector<TupleMorphism>& fs) {
    if (fs.empty()) throw Error(ErrorKind::InvalidArgument, "concatenation of no morphisms");
    IntVec dom;
    PointedMap m;
    std::vector<bool> hit(fs.front().codomain().size(), false);
    for (const auto& f : fs) {
        if (f.codomain() != fs.front().codomain()) {
            throw Error(ErrorKind::DomainMismatch, "concatenated morphisms must share a codomain");
        }
        dom.insert(dom.end(), f.domain().begin(), f.domain().end());
        for (MapEntry a : f.map()) {
            if (a != kStar) {
                if (hit[a - 1]) {
                    throw Error(ErrorKind::ImagesNotDisjoint, "images of concatenated morphisms overlap");
                }
                hit[a - 1] = true;
            }
            m.push_back(a);
        }
    }
    return {std::move(dom), fs.front().codomain(), std::move(m)};
}

TupleMorphism squeeze_m(const TupleMorphism& f) {
    std::vector<MapEntry> reindex(f.codomain().size() + 1, kStar);
    IntVec cod;
    for (std::size_t j = 0; j < f.codomain().size(); ++j) {
        if (f.codomain()[j] != 1) {
            cod.push_back(f.codomain()[j]);
            reindex[j + 1] = cod.size();
        }
    }
    IntVec dom;
    PointedMap m;
    for (std::size_t i = 0; i < f.domain().size(); ++i) {
        if (f.domain()[i] == 1) continue;
        dom.push_back(f.domain()[i]);
        m.push_back(f.map()[i] == kStar ? kStar : reindex[f.map()[i]]);
    }
    return {std::move(dom), std::move(cod), std::move(m)};
}

TupleMorphism sort_m(const TupleMorphism& f) {
    std::vector<std::size_t> order(f.domain().size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const MapEntry fa = f.map()[a];
        const MapEntry fb = f.map()[b];
        if ((fa == kStar) != (fb == kStar)) return fa == kStar;
        if (fa == kStar) return f.domain()[a] < f.domain()[b];
        return fa < fb;
    });
    IntVec dom;
    PointedMap m;
    for (std::size_t i : order) {
        dom.push_back(f.domain()[i]);
        m.push_back(f.map()[i]);
    }
    return {std::move(dom), f.codomain(), std::move(m)};
}

TupleMorphism coalesce_m(const TupleMorphism& f) {
    const TupleMorphism sq = squeeze_m(f);
    const auto& s = sq.domain();
    const auto& t = sq.codomain();
    const auto& a = sq.map();

    // Codomain j ~ j+1 when some adjacent domain pair maps onto (j, j+1).
    std::vector<bool> join_cod(t.size(), false);  // join_cod[j]: j and j+1 merge (0-based)
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (a[i] != kStar && a[i + 1] != kStar && a[i + 1] == a[i] + 1) join_cod[a[i] - 1] = true;
    }
    std::vector<MapEntry> cod_class(t.size() + 1, kStar);
    IntVec cod;
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (j > 0 && join_cod[j - 1]) {
            cod.back() = checked_mul(cod.back(), t[j]);
        } else {
            cod.push_back(t[j]);
        }
        cod_class[j + 1] = cod.size();
    }

    IntVec dom;
    PointedMap m;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const bool joins = i > 0 && ((a[i - 1] == kStar && a[i] == kStar) ||
                                     (a[i - 1] != kStar && a[i] != kStar && a[i] == a[i - 1] + 1));
        if (joins) {
            dom.back() = checked_mul(dom.back(), s[i]);
        } else {
            dom.push_back(s[i]);
            m.push_back(a[i] == kStar ? kStar : cod_class[a[i]]);
        }
    }
    return {std::move(dom), std::move(cod), std::move(m)};
}

TupleMorphism complement_m(const TupleMorphism& f) {
    if (!is_injective(f)) throw Error(ErrorKind::NotInjective, "morphism is not injective");
    const auto hit = image_mask(f);
    IntVec dom;
    PointedMap m;
    for (std::size_t j = 0; j < hit.size(); ++j) {
        if (!hit[j]) {
            dom.push_back(f.codomain()[j]);
            m.push_back(j + 1);
        }
    }
    return {std::move(dom), f.codomain(), std::move(m)};
}

TupleMorphism flat_divide_m(const TupleMorphism& f, const TupleMorphism& g) {
    const TupleMorphism gc = complement_m(g);
    return compose_morphisms(concat_morphisms({g, gc}), f);
}

TupleMorphism flat_product_m(const TupleMorphism& f, const TupleMorphism& g) {
    const TupleMorphism fc = complement_m(f);
    const TupleMorphism tail = compose_morphisms(g, fc);
    return concat_morphisms({f, tail});
}

}  // namespace layoutalg
