#include <gtest/gtest.h>

#include "freefusion/complexification.hpp"
#include "freefusion/fusion_ring.hpp"
#include "freefusion/models.hpp"

using namespace freefusion;

TEST(Blocks, ExponentsAndConjugation) {
    for (Block b : kAllBlocks) {
        const auto e = exponents(b);
        EXPECT_EQ(block_from_exponents(e), b);
        const auto conj = block_from_exponents({-e.suffix, -e.prefix});
        ASSERT_TRUE(conj.has_value());
        EXPECT_EQ(block_parity(*conj), block_parity(b));
    }
    EXPECT_FALSE(block_from_exponents({1, 1}).has_value());
    EXPECT_TRUE(blocks_connect(Block::kOdd1, Block::kOdd2));
    EXPECT_FALSE(blocks_connect(Block::kOdd1, Block::kOdd1));
    EXPECT_TRUE(blocks_connect(Block::kEven1, Block::kOdd1));
    EXPECT_EQ(block_name(Block::kEven2), "even2");
}

TEST(Complexify, AhTable) {
    const auto cs = complexify(ah_fusion_set());
    const FusionSet& t = cs.set();
    ASSERT_EQ(t.size(), 4u);
    auto id = [&](const char* name) { return *t.find(name); };
    const LetterId u = id("u_odd1");
    const LetterId v = id("u_odd2");
    const LetterId q = id("p_even1");
    const LetterId p = id("p_even2");
    EXPECT_EQ(t.fuse(u, v), q);
    EXPECT_EQ(t.fuse(v, u), p);
    EXPECT_EQ(t.fuse(u, p), u);
    EXPECT_EQ(t.fuse(q, u), u);
    EXPECT_EQ(t.fuse(v, q), v);
    EXPECT_EQ(t.fuse(p, v), v);
    EXPECT_EQ(t.fuse(p, p), p);
    EXPECT_EQ(t.fuse(q, q), q);
    EXPECT_FALSE(t.fuse(u, u).has_value());
    EXPECT_FALSE(t.fuse(p, q).has_value());
    EXPECT_EQ(t.conj(u), v);
    EXPECT_EQ(t.conj(p), p);
    EXPECT_EQ(t.conj(q), q);
    EXPECT_TRUE(validate_fusion_set(t).valid());
    EXPECT_EQ(t.render(word_conj(t, t.parse_word("u_odd1.p_even1"))), "p_even1.u_odd2");
}

TEST(Complexify, AoHasNoFusion) {
    const auto cs = complexify(ao_fusion_set());
    const FusionSet& t = cs.set();
    ASSERT_EQ(t.size(), 2u);
    const LetterId a = *t.find("s_odd1");
    const LetterId b = *t.find("s_odd2");
    EXPECT_EQ(t.conj(a), b);
    for (LetterId x = 0; x < 2; ++x) {
        for (LetterId y = 0; y < 2; ++y) {
            EXPECT_FALSE(t.fuse(x, y).has_value());
        }
    }
}

TEST(Complexify, SingleEvenLetter) {
    const auto cs = complexify(parse_fusion_set("letters: p\nconj: p=p\nfusion: p.p=p\nparity: p=even\n"));
    const FusionSet& t = cs.set();
    ASSERT_EQ(t.size(), 2u);
    const LetterId e1 = *t.find("p_even1");
    const LetterId e2 = *t.find("p_even2");
    EXPECT_EQ(t.fuse(e1, e1), e1);
    EXPECT_EQ(t.fuse(e2, e2), e2);
    EXPECT_FALSE(t.fuse(e1, e2).has_value());
    EXPECT_FALSE(t.fuse(e2, e1).has_value());
}

TEST(Complexify, BaseProjectionIsCompatibleWithFusion) {
    const auto cs = complexify(ah_fusion_set());
    const FusionSet& t = cs.set();
    for (LetterId x = 0; x < t.size(); ++x) {
        EXPECT_EQ(cs.find(cs.annotation(x).base, cs.annotation(x).block), x);
        for (LetterId y = 0; y < t.size(); ++y) {
            if (const auto f = t.fuse(x, y)) {
                EXPECT_EQ(cs.source().fuse(cs.annotation(x).base, cs.annotation(y).base),
                          cs.annotation(*f).base);
            }
        }
    }
    EXPECT_EQ(cs.base_word(t.parse_word("u_odd1.p_even2.u_odd2")),
              cs.source().parse_word("u.p.u"));
}

TEST(Complexify, RequiresParity) {
    EXPECT_THROW(complexify(as_fusion_set()), std::invalid_argument);
    const auto bad = parse_fusion_set("letters: p\nconj: p=p\nfusion: p.p=p\nparity: p=odd\n");
    EXPECT_THROW(complexify(bad), ValidationError);
}

TEST(Complexify, TextRoundTrips) {
    const auto cs = complexify(ah_fusion_set());
    EXPECT_EQ(parse_fusion_set(cs.set().to_text()), cs.set());
}
