#include <gtest/gtest.h>

#include "layoutalg/layoutalg.hpp"
#include "support/generators.hpp"

using namespace layoutalg;
using layoutalg::testing::Gen;

namespace {

TupleMorphism M(const char* s) {
    const NestMorphism f = parse_morphism(s);
    return f.flat();
}
FlatLayout F(const char* s) { return parse_layout(s).flatten(); }

ErrorKind kind_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorKind::InvalidArgument;
}

std::vector<Int> compose_tables(const std::vector<Int>& f, const std::vector<Int>& g) {
    std::vector<Int> out;
    for (Int y : f) out.push_back(g[static_cast<std::size_t>(y)]);
    return out;
}

}  // namespace

TEST(TupleMorphism, Validation) {
    EXPECT_NO_THROW(TupleMorphism({4, 4}, {4, 2, 4}, {1, 3}));
    EXPECT_THROW(TupleMorphism({4, 4}, {4, 2, 4}, {1, 2}), Error);     // entry mismatch
    EXPECT_THROW(TupleMorphism({4, 4}, {4, 2, 4}, {1, 1}), Error);     // not tractable
    EXPECT_THROW(TupleMorphism({4, 4}, {4, 2, 4}, {1, 4}), Error);     // out of range
    EXPECT_THROW(TupleMorphism({4, 4}, {4, 2, 4}, {1}), Error);        // length
}

TEST(TupleMorphism, ComposeExamples) {
    const TupleMorphism f = M("((2,2),(2,2))--(3,2,6,5)-->((2,2,2),(2,2,2))");
    const TupleMorphism g = M("((2,2,2),(2,2,2))--(1,0,2,0,3,4)-->(2,2,2,2)");
    EXPECT_EQ(compose_morphisms(f, g).map(), (PointedMap{2, 0, 4, 3}));
    EXPECT_EQ(compose_morphisms(f, TupleMorphism::identity(f.codomain())), f);
    EXPECT_EQ(compose_morphisms(TupleMorphism::identity(f.domain()), f), f);
    EXPECT_EQ(kind_of([&] { (void)compose_morphisms(f, f); }), ErrorKind::DomainMismatch);
}

TEST(TupleMorphism, PastedDiagramMatchesRealizations) {
    const TupleMorphism f({3, 2}, {2, 3}, {2, 1});
    const TupleMorphism g({2, 3}, {2, 3, 5}, {1, 2});
    const TupleMorphism gf = compose_morphisms(f, g);
    EXPECT_EQ(gf.map(), (PointedMap{2, 1}));
    EXPECT_EQ(realize(gf), compose_tables(realize(f), realize(g)));
}

TEST(TupleMorphism, LayoutOfExamples) {
    EXPECT_EQ(layout_of(M("((5,5),8)--(1,3,2)-->(5,8,5)")), F("(5,5,8):(1,40,5)"));
    EXPECT_EQ(layout_of(TupleMorphism({3, 128, 128}, {3, 2, 128, 2, 128}, {1, 3, 5})),
              F("(3,128,128):(1,6,1536)"));
    EXPECT_EQ(layout_of(TupleMorphism({4, 7}, {3}, {0, 0})), F("(4,7):(0,0)"));
}

TEST(TupleMorphism, StandardRepresentationExamples) {
    EXPECT_EQ(standard_representation(F("(2,2,2):(1,2,4)")), TupleMorphism({2, 2, 2}, {2, 2, 2}, {1, 2, 3}));
    EXPECT_EQ(standard_representation(F("(2,2):(3,30)")), TupleMorphism({2, 2}, {3, 2, 5, 2}, {2, 4}));
    // Strides 24 = 3*2*4 and 480 = 3*2*4*2*10 sit at codomain positions 4 and 6.
    EXPECT_EQ(standard_representation(F("(2,2,2,2):(24,0,3,480)")),
              TupleMorphism({2, 2, 2, 2}, {3, 2, 4, 2, 10, 2}, {4, 0, 2, 6}));
    EXPECT_EQ(kind_of([] { (void)standard_representation(F("(2,2,2):(1,7,4)")); }), ErrorKind::NotTractable);
}

TEST(TupleMorphism, StandardRepresentationOfDegenerateLayoutIsFlagged) {
    const TupleMorphism f = standard_representation(F("(2,1):(1,2)"));
    EXPECT_EQ(layout_of(f), F("(2,1):(1,2)"));
    EXPECT_FALSE(is_non_degenerate(f));
}

TEST(TupleMorphism, RealizeExamples) {
    const auto id = realize(TupleMorphism::identity({4, 4}));
    for (Int x = 0; x < 16; ++x) EXPECT_EQ(id[static_cast<std::size_t>(x)], x);
    // x = 5 has coordinates (1,1), sent to (1,0,1) in (4,4,4), which is 1 + 16.
    EXPECT_EQ(realize(TupleMorphism({4, 4}, {4, 4, 4}, {1, 3}))[5], 17);
    for (Int v : realize(TupleMorphism({3, 3}, {2}, {0, 0}))) EXPECT_EQ(v, 0);
}

TEST(TupleMorphism, RealizeMatchesLayoutFunction) {
    Gen g(51);
    for (int i = 0; i < 1000; ++i) {
        const TupleMorphism f = g.into(g.smooth_tuple(0, 4, {1, 2, 3}, 2), false);
        if (product(f.domain()) > 1000) continue;
        ASSERT_EQ(realize(f), oracle::table_of(layout_of(f)).values);
    }
}

TEST(TupleMorphism, RoundTrips) {
    Gen g(52);
    for (int i = 0; i < 1000; ++i) {
        const TupleMorphism f = g.standard_form();
        ASSERT_TRUE(has_standard_form(f));
        ASSERT_TRUE(is_non_degenerate(f));
        ASSERT_EQ(standard_representation(layout_of(f)), f) << to_string(f);

        const FlatLayout l = g.tractable_flat({.max_rank = 5, .non_degenerate = true});
        const TupleMorphism fl = standard_representation(l);
        ASSERT_EQ(layout_of(fl), l) << to_string(l);
        ASSERT_TRUE(has_standard_form(fl)) << to_string(l);
        ASSERT_TRUE(is_non_degenerate(fl));
    }
}

TEST(TupleMorphism, SumAndConcat) {
    const TupleMorphism f({2}, {2, 3}, {1});
    const TupleMorphism g({5}, {5}, {1});
    EXPECT_EQ(sum(f, g), TupleMorphism({2, 5}, {2, 3, 5}, {1, 3}));
    EXPECT_EQ(layout_of(sum(f, g)), F("(2,5):(1,6)"));

    const TupleMorphism a({2}, {2, 3}, {1});
    const TupleMorphism b({3}, {2, 3}, {2});
    EXPECT_EQ(concat_morphisms({a, b}), TupleMorphism({2, 3}, {2, 3}, {1, 2}));
    EXPECT_EQ(kind_of([&] { (void)concat_morphisms({a, a}); }), ErrorKind::ImagesNotDisjoint);
}

TEST(TupleMorphism, ConcatMatchesLayoutConcat) {
    Gen g(53);
    for (int i = 0; i < 500; ++i) {
        const IntVec t = g.smooth_tuple(1, 5, {2, 3}, 2);
        const TupleMorphism f = g.into(t, false);
        // Complement-like second part: codomain entries not hit by f.
        const TupleMorphism h = complement_m(TupleMorphism(
            [&] {
                IntVec d;
                for (MapEntry a : f.map()) if (a != kStar) d.push_back(t[a - 1]);
                return d;
            }(),
            t,
            [&] {
                PointedMap m;
                for (MapEntry a : f.map()) if (a != kStar) m.push_back(a);
                return m;
            }()));
        ASSERT_EQ(layout_of(concat_morphisms({f, h})), concat_flat({layout_of(f), layout_of(h)}));
    }
}

TEST(TupleMorphism, CoalesceExample) {
    EXPECT_EQ(coalesce_m(TupleMorphism({2, 2, 10, 10}, {2, 2, 2, 10, 10}, {1, 2, 4, 5})),
              TupleMorphism({4, 100}, {4, 2, 100}, {1, 3}));
}

TEST(TupleMorphism, SqueezeSortCoalesceCompatibility) {
    Gen g(54);
    for (int i = 0; i < 2000; ++i) {
        const TupleMorphism f = g.into(g.smooth_tuple(0, 5, {1, 2, 3}, 2), false, 3, 3);
        ASSERT_EQ(layout_of(squeeze_m(f)), squeeze(layout_of(f))) << to_string(f);
        ASSERT_EQ(layout_of(coalesce_m(f)), coalesce_flat(layout_of(f))) << to_string(f);
        ASSERT_TRUE(is_coalesced_flat(layout_of(coalesce_m(f))));
        const TupleMorphism s = sort_m(f);
        ASSERT_EQ(layout_of(s), sort(layout_of(f))) << to_string(f);
        // Sorted: ⋆-entries first, then increasing images.
        bool seen_image = false;
        MapEntry last = 0;
        for (MapEntry a : s.map()) {
            if (a == kStar) {
                ASSERT_FALSE(seen_image);
            } else {
                ASSERT_GT(a, last);
                last = a;
                seen_image = true;
            }
        }
    }
}

TEST(TupleMorphism, ComplementExamples) {
    EXPECT_EQ(complement_m(TupleMorphism({2, 2}, {2, 5, 2, 5}, {1, 3})),
              TupleMorphism({5, 5}, {2, 5, 2, 5}, {2, 4}));
    EXPECT_EQ(complement_m(TupleMorphism({512, 256}, {10, 256, 512, 512}, {3, 2})),
              TupleMorphism({10, 512}, {10, 256, 512, 512}, {1, 4}));
    EXPECT_TRUE(complement_m(TupleMorphism::identity({3, 4})).domain().empty());
    EXPECT_EQ(kind_of([] { (void)complement_m(TupleMorphism({2, 3}, {2}, {1, 0})); }), ErrorKind::NotInjective);
}

TEST(TupleMorphism, ComplementProperties) {
    Gen g(55);
    for (int i = 0; i < 1000; ++i) {
        const IntVec t = g.smooth_tuple(0, 5, {2, 3, 5}, 2);
        const TupleMorphism f = g.into(t, false, 3, 0);
        const TupleMorphism fc = complement_m(f);
        const TupleMorphism both = concat_morphisms({f, fc});
        // The concatenation is an isomorphism: a permutation of the codomain.
        ASSERT_EQ(both.domain().size(), t.size());
        ASSERT_TRUE(is_injective(both));
        const Int n = product(t);
        const FlatLayout lc = layout_of(fc);
        ASSERT_TRUE(oracle::check_complement(Layout(layout_of(f)), Layout(lc), n));
        if (is_n_complementable(layout_of(f), n)) {
            ASSERT_EQ(coalesce_flat(lc), complement_flat(layout_of(f), n)) << to_string(f);
        }
    }
}

TEST(TupleMorphism, FlatDivideAndProductExamples) {
    // g picks the 128 entry; g ⋆ g^c followed by the identity swaps the entries.
    EXPECT_EQ(flat_divide_m(TupleMorphism::identity({2, 128}), TupleMorphism({128}, {2, 128}, {2})),
              TupleMorphism({128, 2}, {2, 128}, {2, 1}));
    EXPECT_EQ(flat_divide_m(TupleMorphism::identity({2, 2, 5, 5}), TupleMorphism({5, 5}, {2, 2, 5, 5}, {3, 4})),
              TupleMorphism({5, 5, 2, 2}, {2, 2, 5, 5}, {3, 4, 1, 2}));

    EXPECT_EQ(flat_product_m(TupleMorphism({8, 8}, {8, 8, 16, 16}, {1, 2}), TupleMorphism::identity({16, 16})),
              TupleMorphism::identity({8, 8, 16, 16}));
    EXPECT_EQ(flat_product_m(TupleMorphism({128, 128}, {32, 32, 128, 128}, {3, 4}),
                             TupleMorphism({32}, {32, 32}, {2})),
              TupleMorphism({128, 128, 32}, {32, 32, 128, 128}, {3, 4, 2}));
}

TEST(TupleMorphism, FlatDivideMatchesLayoutFormula) {
    Gen g(56);
    for (int i = 0; i < 500; ++i) {
        const IntVec t = g.smooth_tuple(1, 4, {2, 3}, 2);
        const TupleMorphism gm = g.into(t, false, 3, 0);  // injective
        const TupleMorphism fm = g.out_of(t);
        const TupleMorphism q = flat_divide_m(fm, gm);
        // L_{f ⊘ g} computes L_f ∘ (L_g ⋆ L_{g^c}).
        const FlatLayout lgc = concat_flat({layout_of(gm), layout_of(complement_m(gm))});
        const auto tf = oracle::table_of(layout_of(fm)).values;
        const auto tg = oracle::table_of(lgc).values;
        ASSERT_EQ(oracle::table_of(layout_of(q)).values, compose_tables(tg, tf));
    }
}

TEST(TupleMorphism, ProductAssociativityAndComplementDistribution) {
    Gen g(57);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        // f : S -> T injective; g : cod(g) = dom(f^c); h : cod(h) = dom((f ⊗ g)^c).
        const IntVec t = g.smooth_tuple(1, 4, {2, 3}, 2);
        const TupleMorphism f = g.into(t, false, 3, 0);
        const TupleMorphism fc = complement_m(f);
        const TupleMorphism gg = g.into(fc.domain(), false, 3, 0);
        const TupleMorphism fg = flat_product_m(f, gg);
        ASSERT_EQ(complement_m(fg), compose_morphisms(complement_m(gg), fc));
        const TupleMorphism gc = complement_m(gg);
        const TupleMorphism h = g.into(gc.domain(), false, 3, 0);
        ASSERT_EQ(flat_product_m(fg, h), flat_product_m(f, flat_product_m(gg, h)));
        ++checked;
    }
    EXPECT_EQ(checked, 2000);
}

TEST(TupleMorphism, CompositionDistributesOverConcat) {
    Gen g(58);
    for (int i = 0; i < 1000; ++i) {
        const IntVec t = g.smooth_tuple(1, 5, {2, 3}, 2);
        const TupleMorphism f1 = g.into(t, false, 3, 1);
        PointedMap rest;
        IntVec rest_dom;
        std::vector<bool> used(t.size(), false);
        for (MapEntry a : f1.map()) if (a != kStar) used[a - 1] = true;
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (!used[j] && g.coin(0.5)) {
                rest_dom.push_back(t[j]);
                rest.push_back(j + 1);
            }
        }
        const TupleMorphism f2(rest_dom, t, rest);
        const TupleMorphism gm = g.out_of(t);
        ASSERT_EQ(compose_morphisms(concat_morphisms({f1, f2}), gm),
                  concat_morphisms({compose_morphisms(f1, gm), compose_morphisms(f2, gm)}));
    }
}

TEST(TupleMorphism, Functoriality) {
    Gen g(59);
    for (int i = 0; i < 1000; ++i) {
        const IntVec t = g.smooth_tuple(0, 4, {1, 2, 3}, 2);
        const TupleMorphism f = g.into(t, false);
        const TupleMorphism gm = g.out_of(t);
        if (product(f.domain()) > 1000 || product(t) > 1000) continue;
        ASSERT_EQ(realize(compose_morphisms(f, gm)), compose_tables(realize(f), realize(gm)));
        const auto id = realize(TupleMorphism::identity(t));
        for (std::size_t x = 0; x < id.size(); ++x) ASSERT_EQ(id[x], static_cast<Int>(x));
    }
}
