#include <gtest/gtest.h>

#include "freefusion/acceptance.hpp"
#include "freefusion/embedding.hpp"
#include "freefusion/models.hpp"
#include "freefusion/rep_ring.hpp"
#include "support.hpp"

using namespace freefusion;

namespace {

LabelMultiset one(const Label& label) {
    return {{label, 1}};
}

BigInt multiplicity(const LabelMultiset& ms, const Label& label) {
    const auto it = ms.find(label);
    return it == ms.end() ? BigInt(0) : it->second;
}

// Irreducibles of a free product built from short factor labels.
std::vector<Label> sample_labels(const FreeProductRing& ring, const std::vector<Label>& left,
                                 const std::vector<Label>& right) {
    std::vector<Label> out = {ring.trivial()};
    for (const auto& a : left) {
        out.push_back(ring.embed(0, a));
        for (const auto& b : right) {
            out.push_back(ring.make_label({{0, a}, {1, b}}));
            out.push_back(ring.make_label({{1, b}, {0, a}}));
            out.push_back(ring.make_label({{0, a}, {1, b}, {0, a}}));
        }
    }
    for (const auto& b : right) {
        out.push_back(ring.embed(1, b));
    }
    return out;
}

void expect_ring_axioms(const RepRing& ring, const std::vector<Label>& labels, bool reciprocity) {
    for (const auto& a : labels) {
        EXPECT_EQ(ring.dual(ring.dual(a)), a);
        EXPECT_EQ(ring.decompose_pair(ring.trivial(), a), one(a));
        EXPECT_EQ(ring.decompose_pair(a, ring.trivial()), one(a));
        for (const auto& b : labels) {
            const auto ab = ring.decompose_pair(a, b);
            EXPECT_EQ(multiplicity(ab, ring.trivial()), b == ring.dual(a) ? 1 : 0);
            // Frobenius reciprocity: <c, a(x)b> = <a, c(x)b*>.
            if (reciprocity) {
                for (const auto& [c, m] : ab) {
                    EXPECT_EQ(multiplicity(ring.decompose_pair(c, ring.dual(b)), a), m);
                }
            }
            for (const auto& c : labels) {
                EXPECT_EQ(tensor(ring, tensor(ring, one(a), one(b)), one(c)),
                          tensor(ring, one(a), tensor(ring, one(b), one(c))));
            }
        }
    }
}

}  // namespace

TEST(FusionRepRing, Examples) {
    const auto ao = ring_from_fusion_set(ao_fusion_set());
    const Label s = Label::word(ao->set().parse_word("s"));
    EXPECT_EQ(ao->decompose_pair(s, s),
              (LabelMultiset{{Label::word(ao->set().parse_word("s.s")), 1}, {ao->trivial(), 1}}));
    const auto ah = ring_from_fusion_set(ah_fusion_set());
    const Label u = Label::word(ah->set().parse_word("u"));
    EXPECT_EQ(ah->decompose_pair(u, u).size(), 3u);
    EXPECT_EQ(ah->render(ah->trivial()), "[1]");
    EXPECT_EQ(ah->render(Label::word(ah->set().parse_word("u.p"))), "[u.p]");
    EXPECT_THROW(ring_from_fusion_set(acceptance::incompatible_fusion_set()), ValidationError);
}

TEST(SmallRings, CircleAndCyclic) {
    const auto circle = circle_ring();
    EXPECT_EQ(circle->decompose_pair(Label::integer(1), Label::integer(-1)),
              one(Label::integer(0)));
    EXPECT_EQ(circle->dual(Label::integer(3)), Label::integer(-3));
    EXPECT_EQ(circle->render(Label::integer(-2)), "[z^-2]");
    const auto c2 = cyclic2_ring();
    EXPECT_EQ(c2->decompose_pair(Label::integer(1), Label::integer(1)), one(Label::integer(0)));
    EXPECT_EQ(c2->trivial(), Label::integer(0));
}

TEST(DirectProduct, Componentwise) {
    const auto as = ring_from_fusion_set(as_fusion_set());
    const auto ring = direct_product(as, cyclic2_ring());
    const Label g = Label::pair(as->trivial(), Label::integer(1));
    EXPECT_EQ(ring->decompose_pair(g, g), one(ring->trivial()));
    const Label p = Label::word(as->set().parse_word("p"));
    const Label pg = Label::pair(p, Label::integer(1));
    EXPECT_EQ(ring->dual(pg), pg);
    const auto pp = ring->decompose_pair(pg, pg);
    EXPECT_EQ(pp.size(), 3u);
    for (const auto& [label, m] : pp) {
        EXPECT_EQ(label.second(), Label::integer(0));
    }
}

TEST(FreeProduct, DifferentFactorsConcatenate) {
    const auto ao = ring_from_fusion_set(ao_fusion_set());
    const auto ring = free_product(ao, circle_ring());
    const Label s = Label::word(ao->set().parse_word("s"));
    const Label a = ring->embed(0, s);
    const Label z = ring->embed(1, Label::integer(1));
    EXPECT_EQ(ring->decompose_pair(a, z), one(ring->make_label({{0, s}, {1, Label::integer(1)}})));
    EXPECT_EQ(ring->embed(0, ao->trivial()), ring->trivial());
    EXPECT_EQ(ring->render(ring->trivial()), "[1]");
}

TEST(FreeProduct, BoundaryRecursion) {
    const auto ao = ring_from_fusion_set(ao_fusion_set());
    const auto ring = free_product(ao, circle_ring());
    const Label s = Label::word(ao->set().parse_word("s"));
    const Label ss = Label::word(ao->set().parse_word("s.s"));
    const Label x = ring->make_label({{0, s}, {1, Label::integer(1)}});
    const Label y = ring->make_label({{1, Label::integer(-1)}, {0, s}});
    EXPECT_EQ(ring->decompose_pair(x, y),
              (LabelMultiset{{ring->embed(0, ss), 1}, {ring->trivial(), 1}}));
    const Label a = ring->embed(0, s);
    EXPECT_EQ(ring->decompose_pair(a, ring->dual(a)),
              (LabelMultiset{{ring->embed(0, ss), 1}, {ring->trivial(), 1}}));
}

TEST(FreeProduct, MakeLabelMergesAndDropsTrivialParts) {
    const auto ao = ring_from_fusion_set(ao_fusion_set());
    const auto ring = free_product(ao, circle_ring());
    const Label s = Label::word(ao->set().parse_word("s"));
    const Label merged = ring->make_label(
        {{1, Label::integer(0)}, {0, s}, {1, Label::integer(1)}, {1, Label::integer(1)}});
    EXPECT_EQ(merged, ring->make_label({{0, s}, {1, Label::integer(2)}}));
    EXPECT_EQ(ring->render(merged), "[s | z^2]");
}

TEST(FreeProduct, RingAxiomsOnFactorRings) {
    const auto ah = ring_from_fusion_set(ah_fusion_set());
    const auto ring = free_product(ah, cyclic2_ring());
    const std::vector<Label> left = {Label::word(ah->set().parse_word("u")),
                                     Label::word(ah->set().parse_word("p"))};
    expect_ring_axioms(*ring, sample_labels(*ring, left, {Label::integer(1)}), true);

    for (const auto& set : acceptance::random_fusion_sets(12, 3, 3)) {
        const auto factor = ring_from_fusion_set(set);
        const auto fp = free_product(factor, circle_ring());
        std::vector<Label> letters;
        for (LetterId x = 0; x < set.size(); ++x) {
            letters.push_back(Label::word(Word{x}));
        }
        // Reciprocity needs conj to reverse fusion, which the axioms allow to fail.
        expect_ring_axioms(*fp, sample_labels(*fp, letters, {Label::integer(1), Label::integer(-1)}),
                           freefusion::testing::conj_reverses_fusion(set));
    }
}

TEST(FreeProduct, DimensionsMultiply) {
    const Polynomial n = Polynomial::variable();
    const auto set = ah_fusion_set();
    const auto ah = ring_from_fusion_set(set, DimensionAssignment(set, {n, n - Polynomial(1)}));
    const auto ring = free_product(ah, circle_ring());
    const Label u = Label::word(set.parse_word("u"));
    const Label x = ring->make_label({{0, u}, {1, Label::integer(1)}, {0, u}});
    EXPECT_EQ(ring->dim(x), n * n);
    const auto xx = ring->decompose_pair(x, ring->dual(x));
    EXPECT_EQ(total_dimension(*ring, xx), pow(n, 4));
}

TEST(Embedding, Examples) {
    const ComplexifiedEmbedding e(complexify(ah_fusion_set()));
    const FusionSet& t = e.complexified().set();
    const auto& ring = e.product_ring();
    EXPECT_EQ(ring.render(e.embed_word(t.parse_word("u_odd1"))), "[u | z^1]");
    EXPECT_EQ(ring.render(e.embed_word(t.parse_word("u_odd1.u_odd1"))), "[u | z^1 | u | z^1]");
    EXPECT_EQ(ring.render(e.embed_word(t.parse_word("u_odd1.u_odd2"))), "[u.u]");
    EXPECT_EQ(ring.render(e.embed_word(t.parse_word("u_odd2.u_odd1"))), "[z^-1 | u.u | z^1]");
    EXPECT_EQ(e.embed_word(Word{}), ring.trivial());
}

TEST(Embedding, InjectiveOnShortWords) {
    const ComplexifiedEmbedding e(complexify(ah_fusion_set()));
    std::set<Label> seen;
    const auto words = words_up_to(e.complexified().set(), 4);
    for (const Word& w : words) {
        EXPECT_TRUE(seen.insert(e.embed_word(w)).second) << e.complexified().set().render(w);
    }
}

TEST(Embedding, CrosscheckExamples) {
    const ComplexifiedEmbedding e(complexify(ah_fusion_set()));
    const FusionSet& t = e.complexified().set();
    const auto report =
        crosscheck_complexified_product(e, t.parse_word("u_odd1"), t.parse_word("u_odd2"));
    EXPECT_TRUE(report.agree());
    EXPECT_EQ(report.via_fusion_formula.size(), 3u);
    EXPECT_EQ(crosscheck_complexified_product(e, Word{}, t.parse_word("u_odd2")).via_free_product,
              one(e.embed_word(t.parse_word("u_odd2"))));

    const auto ao = complexify(ao_fusion_set());
    const Word s1 = ao.set().parse_word("s_odd1");
    const auto single = crosscheck_complexified_product(ao, s1, s1);
    EXPECT_TRUE(single.agree());
    EXPECT_EQ(single.via_free_product.size(), 1u);
}

TEST(Embedding, CrosscheckOnSingleEvenLetter) {
    const auto cs = complexify(parse_fusion_set("letters: p\nconj: p=p\nfusion: p.p=p\nparity: p=even\n"));
    const ComplexifiedEmbedding e(cs);
    for (const Word& x : words_up_to(cs.set(), 3)) {
        for (const Word& y : words_up_to(cs.set(), 3)) {
            EXPECT_TRUE(crosscheck_complexified_product(e, x, y).agree());
        }
    }
}
