#include "layoutalg/layout.hpp"

#include <string>

#include "layoutalg/nest_morphism.hpp"

namespace layoutalg {

Layout::Layout(NestedTuple shape, NestedTuple stride)
    : shape_(std::move(shape)), stride_(std::move(stride)) {
    if (shape_.profile() != stride_.profile()) {
        throw Error(ErrorKind::LengthMismatch, "shape and stride are not congruent");
    }
    if (!shape_.all_positive()) {
        throw Error(ErrorKind::InvalidArgument, "shape entries must be positive");
    }
}

Layout::Layout(const FlatLayout& flat)
    : Layout(NestedTuple::flat(flat.shape()), NestedTuple::flat(flat.stride())) {}

Layout Layout::mode(std::size_t i) const { return {shape_.mode(i), stride_.mode(i)}; }

FlatLayout Layout::flatten() const { return {shape_.entries(), stride_.entries()}; }

Int eval(const Layout& l, Int x) { return eval(l.flatten(), x); }

Layout concat(const std::vector<Layout>& ls) {
    std::vector<NestedTuple> shapes;
    std::vector<NestedTuple> strides;
    for (const auto& l : ls) {
        shapes.push_back(l.shape());
        strides.push_back(l.stride());
    }
    return {NestedTuple::tuple(shapes), NestedTuple::tuple(strides)};
}

Layout substitute_profile(const Layout& l, const Profile& p) {
    return {substitute(l.shape().modes(), p), substitute(l.stride().modes(), p)};
}

bool is_tractable(const Layout& l) { return is_tractable_flat(l.flatten()); }

bool is_non_degenerate(const Layout& l) {
    for (std::size_t i = 0; i < l.len(); ++i) {
        if (l.shape().entry(i) == 1 && l.stride().entry(i) != 0) return false;
    }
    return true;
}

Layout make_non_degenerate(const Layout& l) {
    IntVec d = l.stride().entries();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (l.shape().entry(i) == 1) d[i] = 0;
    }
    return {l.shape(), NestedTuple(std::move(d), l.stride().profile())};
}

Layout coalesce(const Layout& l) {
    const FlatLayout c = coalesce_flat(l.flatten());
    if (c.rank() > 1) return Layout(c);
    if (c.rank() == 1) {
        return {NestedTuple::integer(c.shape()[0]), NestedTuple::integer(c.stride()[0])};
    }
    return {NestedTuple::integer(1), NestedTuple::integer(0)};
}

Layout coalesce_relative(const Layout& l, const NestedTuple& sbar) {
    const auto shapes = relative_modes(l.shape(), sbar);
    const auto strides = split_relative(l.stride(), l.shape(), sbar);
    std::vector<NestedTuple> s_parts;
    std::vector<NestedTuple> d_parts;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        const Layout c = coalesce(Layout(shapes[i], strides[i]));
        s_parts.push_back(c.shape());
        d_parts.push_back(c.stride());
    }
    return {substitute(s_parts, sbar.profile()), substitute(d_parts, sbar.profile())};
}

Layout complement(const Layout& a, Int n) {
    return coalesce(Layout(complement_flat(a.flatten(), n)));
}

Layout compose(const Layout& a, const Layout& b) {
    // Unit modes contribute nothing to Φ_A, and Φ_B = Φ_coal(B); normalizing
    // both first lets more inputs through the tractability checks.
    const Layout an = make_non_degenerate(a);
    const Layout bc = coalesce(b);
    if (an.cosize() > b.size()) {
        throw Error(ErrorKind::NotComposable,
                    "cosize " + std::to_string(an.cosize()) + " exceeds size " +
                        std::to_string(b.size()));
    }
    if (bc.shape().is_integer()) {
        // Φ_B(y) = y·e on [0, size(B)): scale every stride of A by e.
        const Int e = bc.stride().value();
        IntVec strides = an.stride().entries();
        for (Int& d : strides) d = checked_mul(d, e);
        return coalesce_relative(Layout(an.shape(), NestedTuple(strides, an.shape().profile())), a.shape());
    }
    if (!is_tractable(an)) throw Error(ErrorKind::NotTractable, "first layout is not tractable");
    if (!is_tractable(bc)) throw Error(ErrorKind::NotTractable, "second layout is not tractable");
    const auto c = compose_tractable(an, bc);
    if (!c) throw Error(ErrorKind::NotComposable, "no mutual refinement exists");
    return coalesce_relative(*c, a.shape());
}

Layout logical_divide(const Layout& a, const Layout& b) {
    const Layout bc = complement(b, a.size());
    return compose(concat({b, bc}), a);
}

Layout logical_product(const Layout& a, const Layout& b) {
    const Layout ac = complement(a, checked_mul(a.size(), b.cosize()));
    const Layout tail = compose(b, ac);
    return concat({a, tail});
}

FlatLayout compose_flat(const FlatLayout& a, const FlatLayout& b) {
    const Layout c = compose(Layout(a), Layout(b));
    if (c.shape() != NestedTuple::flat(a.shape())) {
        throw Error(ErrorKind::NotComposable, "the composite has no flat form with the shape of A");
    }
    return c.flatten();
}

FlatLayout flat_divide(const FlatLayout& a, const FlatLayout& b) {
    const FlatLayout bc = complement_flat(b, a.size());
    return compose(Layout(concat_flat({b, bc})), Layout(a)).flatten();
}

FlatLayout flat_product(const FlatLayout& a, const FlatLayout& b) {
    const FlatLayout ac = complement_flat(a, checked_mul(a.size(), b.cosize()));
    const FlatLayout tail = compose(Layout(b), Layout(ac)).flatten();
    return concat_flat({a, tail});
}

}  // namespace layoutalg
