#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "xprod/codes.hpp"
#include "xprod/isometry.hpp"

using namespace xprod;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> profile(const std::vector<Code>& codes) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& c : codes) out.emplace_back(c.rank, c.min_distance.value_or(0));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Codes, GroupAlgebraF2C3) {
    const auto ring = cyclic_crossed_ring(2, 1, 3, 1, 0);
    const auto codes = enumerate_codes(ring);
    ASSERT_EQ(codes.size(), 4u);
    EXPECT_EQ(codes.front().rank, 0u);
    EXPECT_FALSE(codes.front().min_distance.has_value());
    EXPECT_EQ(codes.back().rank, 3u);
    EXPECT_EQ(codes.back().min_distance, std::optional<std::size_t>(1));
    // repetition code and the even-weight code
    EXPECT_EQ(codes[1].rank, 1u);
    EXPECT_EQ(codes[1].min_distance, std::optional<std::size_t>(3));
    EXPECT_EQ(codes[2].rank, 2u);
    EXPECT_EQ(codes[2].min_distance, std::optional<std::size_t>(2));
}

TEST(Codes, IdealClosure) {
    const auto ring = cyclic_crossed_ring(2, 1, 3, 1, 0);
    const auto t = ring.tower();
    const auto s = ideal_closure(ring, {ring.add(ring.basis(0), ring.basis(1))}, Sidedness::Left);
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_TRUE(s.contains(ring.add(ring.basis(1), ring.basis(2)).coeffs));
    EXPECT_FALSE(s.contains(ring.one().coeffs));
    EXPECT_EQ(ideal_closure(ring, {ring.one()}, Sidedness::Left).dim(), 3u);
    EXPECT_EQ(ideal_closure(ring, {ring.zero()}, Sidedness::Left).dim(), 0u);
}

TEST(Codes, ClosedUnderRingMultiplication) {
    for (auto [q, r, n, k, beta] : std::vector<std::array<i64, 5>>{{2, 2, 2, 1, 0}, {3, 1, 3, 1, 1}, {2, 2, 4, 2, 1}}) {
        const auto ring = cyclic_crossed_ring(q, r, n, k, beta);
        for (auto side : {Sidedness::Left, Sidedness::TwoSided}) {
            for (const auto& c : enumerate_codes(ring, side)) {
                Subspace s(&ring.tower(), ring.dim());
                for (const auto& b : c.basis) s.insert(b.coeffs);
                EXPECT_EQ(s.dim(), c.rank);
                for (const auto& b : c.basis)
                    for (std::size_t g = 0; g < ring.dim(); ++g)
                        for (i64 e = 0; e < ring.tower().N(); ++e) {
                            const auto x = ring.monomial(ring.tower().unit(e), g);
                            EXPECT_TRUE(s.contains(ring.multiply(x, b).coeffs));
                            if (side == Sidedness::TwoSided) EXPECT_TRUE(s.contains(ring.multiply(b, x).coeffs));
                        }
            }
        }
    }
}

TEST(Codes, ClassicalRingsAreSimple) {
    for (auto [q, r, n, k] : std::vector<std::array<i64, 4>>{{2, 2, 2, 1}, {3, 2, 2, 1}, {2, 3, 3, 1}, {2, 4, 2, 2}}) {
        const auto ring = cyclic_crossed_ring(q, r, n, k, 0);
        EXPECT_EQ(enumerate_codes(ring, Sidedness::TwoSided).size(), 2u) << q << "^" << r << " n=" << n;
    }
}

TEST(Codes, TooLarge) {
    const auto ring = cyclic_crossed_ring(5, 2, 4, 1, 0);
    EXPECT_THROW(enumerate_codes(ring), Error);
}

TEST(Semisimple, EmpiricalMatchesRadicalOracle) {
    for (auto [q, r, n, k, beta] : std::vector<std::array<i64, 5>>{{2, 1, 2, 1, 0},
                                                                   {3, 1, 2, 1, 0},
                                                                   {3, 1, 2, 1, 1},
                                                                   {2, 2, 2, 1, 0},
                                                                   {2, 1, 4, 1, 0},
                                                                   {3, 1, 3, 1, 0},
                                                                   {2, 2, 2, 2, 1},
                                                                   {2, 2, 4, 1, 0},
                                                                   {2, 1, 3, 1, 0}}) {
        const auto ring = cyclic_crossed_ring(q, r, n, k, beta);
        const auto rep = is_semisimple(ring);
        ASSERT_TRUE(rep.empirical.has_value());
        const bool radical_free = oracle::radical_size(ring) == 1;
        EXPECT_EQ(*rep.empirical, radical_free) << q << "^" << r << " n=" << n << " k=" << k;
        EXPECT_EQ(rep.semisimple, radical_free) << q << "^" << r << " n=" << n << " k=" << k;
    }
}

TEST(Semisimple, ReportFields) {
    const auto ring = cyclic_crossed_ring(2, 2, 4, 1, 0);
    const auto rep = is_semisimple(ring);
    EXPECT_EQ(rep.kernel_order, 2);
    EXPECT_FALSE(rep.semisimple);
    EXPECT_FALSE(rep.classical);
    EXPECT_FALSE(rep.diagnosis.empty());
    const auto big = is_semisimple(cyclic_crossed_ring(5, 2, 4, 1, 0));
    EXPECT_FALSE(big.empirical.has_value());
    EXPECT_EQ(big.kernel_order, 2);
    EXPECT_TRUE(big.semisimple);
}

TEST(Codes, IsometricRingsShareCodeProfiles) {
    const auto r1 = cyclic_crossed_ring(5, 1, 4, 1, 1);
    const auto r3 = cyclic_crossed_ring(5, 1, 4, 1, 3);
    const auto w = find_isometry(r1, r3);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(profile(enumerate_codes(r1)), profile(enumerate_codes(r3)));
    // the witness carries each code of r1 onto a code of r3
    const auto codes3 = enumerate_codes(r3);
    for (const auto& c : enumerate_codes(r1)) {
        Subspace image(&r3.tower(), r3.dim());
        for (const auto& b : c.basis) image.insert(apply_isometry(*w, r1, r3, b).coeffs);
        EXPECT_TRUE(std::any_of(codes3.begin(), codes3.end(), [&](const Code& d) { return d.key == image.key(); }));
    }
}
