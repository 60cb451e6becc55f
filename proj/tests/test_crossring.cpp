#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "xprod/crossring.hpp"

using namespace xprod;

TEST(CrossedRing, TwistedMultiplicationExample) {
    // F_4 * C_2 under Frobenius: u_sigma x0 = x0^2 u_sigma
    const auto ring = cyclic_crossed_ring(2, 2, 2, 1, 0);
    const auto lhs = ring.multiply(ring.basis(1), ring.monomial(ring.tower().x0(), 0));
    EXPECT_EQ(lhs, ring.monomial(ring.tower().unit(2), 1));
    const auto rhs = ring.multiply(ring.monomial(ring.tower().x0(), 0), ring.basis(1));
    EXPECT_EQ(rhs, ring.monomial(ring.tower().x0(), 1));
}

TEST(CrossedRing, PowerOfGeneratorIsBeta) {
    for (i64 beta : {0, 4}) {
        const auto ring = cyclic_crossed_ring(3, 2, 4, 1, beta);
        auto acc = ring.one();
        for (int i = 0; i < 4; ++i) acc = ring.multiply(acc, ring.basis(1));
        EXPECT_EQ(acc, ring.monomial(ring.tower().unit(beta), 0));
    }
    const auto f5 = cyclic_crossed_ring(5, 1, 4, 1, 3);
    auto acc = f5.one();
    for (int i = 0; i < 4; ++i) acc = f5.multiply(acc, f5.basis(1));
    EXPECT_EQ(acc, f5.monomial(f5.tower().unit(3), 0));
}

TEST(CrossedRing, ConstructionErrors) {
    const auto t = make_tower(3, 2);
    const auto g = GroupSpec::cyclic(3);
    EXPECT_THROW(CrossedRing(t, CocycleTable(g, CoeffModule::trivial(g, 2))), Error);
    // multiplier 5 is a unit mod 8 but not a Frobenius power of F_9
    const auto g2 = GroupSpec::cyclic(2);
    EXPECT_THROW(CrossedRing(t, CocycleTable(g2, CoeffModule(g2, 8, {5}))), Error);
    CocycleTable bad(g, CoeffModule::trivial(g, 8));
    bad.at(1, 1) = 1;
    EXPECT_THROW(CrossedRing(t, bad), Error);
    EXPECT_NO_THROW(CrossedRing(t, bad, false));
    EXPECT_THROW(cyclic_crossed_ring(3, 2, 3, 1, 0), Error);
}

TEST(CrossedRing, HammingWeight) {
    const auto ring = cyclic_crossed_ring(2, 2, 3, 2, 0);
    EXPECT_EQ(hamming_weight(ring.zero()), 0u);
    EXPECT_EQ(hamming_weight(ring.one()), 1u);
    auto e = ring.add(ring.basis(0), ring.monomial(ring.tower().x0(), 2));
    EXPECT_EQ(hamming_weight(e), 2u);
    EXPECT_EQ(hamming_weight(ring.add(e, e)), 0u);
}

TEST(CrossedRing, EncodeDecodeRoundTrip) {
    const auto ring = cyclic_crossed_ring(3, 1, 3, 1, 1);
    ASSERT_EQ(ring.cardinality(), std::optional<std::size_t>(27));
    for (std::size_t c = 0; c < 27; ++c) EXPECT_EQ(ring.encode(ring.decode(c)), c);
}

TEST(CrossedRing, AssociativeExactlyForCocycles) {
    std::mt19937_64 rng(17);
    const auto t = make_tower(2, 2);
    const auto g = GroupSpec::cyclic(3);
    const auto m = CoeffModule::trivial(g, 3);
    for (int trial = 0; trial < 200; ++trial) {
        CocycleTable f(g, m);
        for (std::size_t a = 1; a < 3; ++a)
            for (std::size_t b = 1; b < 3; ++b) f.at(a, b) = static_cast<i64>(rng() % 3);
        const CrossedRing ring(t, f, false);
        EXPECT_EQ(!associativity_failure(ring).has_value(), is_cocycle(f));
    }
}

TEST(CrossedRing, ConjugationRealisesTheAction) {
    for (auto [q, r, n, k, beta] : std::vector<std::array<i64, 5>>{{2, 2, 2, 1, 0}, {3, 2, 4, 1, 4}, {2, 3, 3, 1, 0}, {5, 1, 4, 1, 2}}) {
        const auto ring = cyclic_crossed_ring(q, r, n, k, beta);
        EXPECT_TRUE(conjugation_matches_action(ring));
        EXPECT_FALSE(associativity_failure(ring).has_value());
    }
}

TEST(SkewPoly, ViewMatchesRingMultiplication) {
    std::mt19937_64 rng(23);
    for (auto [q, r, n, k, beta] : std::vector<std::array<i64, 5>>{{3, 2, 2, 1, 4}, {2, 2, 4, 1, 0}, {3, 1, 3, 1, 1}, {2, 3, 3, 1, 0}}) {
        const auto ring = cyclic_crossed_ring(q, r, n, k, beta);
        const auto view = skew_poly_view(ring);
        EXPECT_EQ(view.n, n);
        EXPECT_EQ(view.frobenius_k, k);
        EXPECT_EQ(view.beta_exp, beta);
        for (int trial = 0; trial < 30; ++trial) {
            const auto a = ring.random_element(rng);
            const auto b = ring.random_element(rng);
            EXPECT_EQ(to_skew_coords(ring, ring.multiply(a, b)),
                      skew_multiply(ring.tower(), view, to_skew_coords(ring, a), to_skew_coords(ring, b)));
        }
    }
    const auto e = GroupSpec::elab(2, 2);
    const CrossedRing elab(make_tower(3, 1), CocycleTable(e, CoeffModule::trivial(e, 2)));
    EXPECT_THROW(skew_poly_view(elab), Error);
}

TEST(SkewPoly, CohomologousTableGivesSameView) {
    // a non-standard table on C_3 over F_4: standard beta plus a coboundary, still y^3 = beta
    const auto t = make_tower(2, 2);
    const auto g = GroupSpec::cyclic(3);
    const auto m = CoeffModule::trivial(g, 3);
    const auto f = add(standard_cocycle(3, m, 1), coboundary(g, m, {0, 2, 1}));
    const CrossedRing ring(t, f);
    const auto view = skew_poly_view(ring);
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = ring.random_element(rng);
        const auto b = ring.random_element(rng);
        EXPECT_EQ(to_skew_coords(ring, ring.multiply(a, b)), skew_multiply(t, view, to_skew_coords(ring, a), to_skew_coords(ring, b)));
    }
}
