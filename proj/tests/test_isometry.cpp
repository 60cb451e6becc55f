#include <gtest/gtest.h>

#include "oracles.hpp"
#include "xprod/cohomology.hpp"
#include "xprod/isometry.hpp"

using namespace xprod;

TEST(FindIsometry, Examples) {
    const auto r1 = cyclic_crossed_ring(5, 1, 4, 1, 1);
    const auto r2 = cyclic_crossed_ring(5, 1, 4, 1, 2);
    const auto r3 = cyclic_crossed_ring(5, 1, 4, 1, 3);
    const auto w = find_isometry(r1, r3);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(std::get<CyclicAut>(w->psi).j, 3);
    EXPECT_TRUE(verify_isometry(*w, r1, r3));
    EXPECT_FALSE(find_isometry(r1, r2).has_value());
    const auto self = find_isometry(r2, r2);
    ASSERT_TRUE(self.has_value());
    EXPECT_EQ(std::get<CyclicAut>(self->psi).j, 1);
    EXPECT_TRUE(verify_isometry(*self, r2, r2));
}

TEST(FindIsometry, ActionMismatch) {
    const auto a = cyclic_crossed_ring(2, 2, 2, 1, 0);
    const auto b = cyclic_crossed_ring(2, 2, 2, 2, 0);
    try {
        (void)find_isometry(a, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ActionMismatch);
    }
    EXPECT_THROW((void)find_isometry(a, cyclic_crossed_ring(3, 2, 2, 1, 0)), Error);
}

TEST(VerifyIsometry, RejectsBrokenWitnesses) {
    const auto r1 = cyclic_crossed_ring(5, 1, 4, 1, 1);
    const auto r3 = cyclic_crossed_ring(5, 1, 4, 1, 3);
    const auto w = *find_isometry(r1, r3);
    auto bad = w;
    bad.scalars[1] = r1.tower().mul(bad.scalars[1], r1.tower().x0());
    EXPECT_FALSE(verify_isometry(bad, r1, r3));
    auto zero = w;
    zero.scalars[2] = FieldElem::zero();
    EXPECT_FALSE(verify_isometry(zero, r1, r3));
    auto not_aut = w;
    not_aut.psi = CyclicAut{4, 2};
    EXPECT_FALSE(verify_isometry(not_aut, r1, r3));
    auto wrong_psi = w;
    wrong_psi.psi = CyclicAut{4, 1};
    EXPECT_FALSE(verify_isometry(wrong_psi, r1, r3));
}

TEST(FindIsometry, AgreesWithMonomialSearch) {
    struct Params {
        i64 q, r, n, k;
    };
    for (auto [q, r, n, k] : std::vector<Params>{{5, 1, 4, 1}, {3, 1, 2, 1}, {2, 2, 2, 1}, {3, 2, 2, 1}, {2, 2, 4, 2}, {7, 1, 3, 1}}) {
        const auto t = make_tower(q, r);
        const auto step = t.fixed_subgroup(FrobAction{n, k, r}).generator_exponent;
        for (i64 b1 = 0; b1 < t.N(); b1 += step)
            for (i64 b2 = 0; b2 < t.N(); b2 += step) {
                const auto a = cyclic_crossed_ring(q, r, n, k, b1);
                const auto b = cyclic_crossed_ring(q, r, n, k, b2);
                const auto w = find_isometry(a, b);
                EXPECT_EQ(w.has_value(), oracle::brute_monomial_isometry(a, b)) << q << "^" << r << " n=" << n << " " << b1 << " " << b2;
                if (w) EXPECT_TRUE(verify_isometry(*w, a, b));
            }
    }
}

TEST(FindIsometry, ElementaryAbelianTwist) {
    const auto g = GroupSpec::elab(2, 2);
    const auto m = CoeffModule::trivial(g, 2);
    const auto t = make_tower(3, 1);
    const auto h = compute_h2(g, m);
    const auto part = orbits(h, aut_eta(g, m));
    for (std::size_t o1 = 0; o1 < part.count(); ++o1)
        for (std::size_t o2 = 0; o2 < part.count(); ++o2) {
            const CrossedRing a(t, h.representative(part.orbits[o1].back()));
            const CrossedRing b(t, h.representative(part.orbits[o2].front()));
            const auto w = find_isometry(a, b);
            EXPECT_EQ(w.has_value(), o1 == o2);
            if (w) EXPECT_TRUE(verify_isometry(*w, a, b));
        }
}

TEST(IsometryCount, MonomialGroupOrder) {
    for (auto [q, r, n, k, beta] : std::vector<std::array<i64, 5>>{{3, 1, 2, 1, 1}, {2, 2, 2, 1, 0}, {5, 1, 2, 1, 0}, {3, 1, 3, 1, 0}}) {
        const auto ring = cyclic_crossed_ring(q, r, n, k, beta);
        const auto auts = aut_eta(ring.group(), ring.cocycle().coeff);
        const i64 expect = oracle::ipow(ring.tower().N(), n) * static_cast<i64>(auts.size());
        EXPECT_EQ(count_crossed_product_isometries(ring), expect);
    }
    EXPECT_THROW(count_crossed_product_isometries(cyclic_crossed_ring(5, 2, 8, 1, 0)), Error);
}
