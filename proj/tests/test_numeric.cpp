#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "xprod/modlin.hpp"
#include "xprod/numeric.hpp"

using namespace xprod;

TEST(Numeric, GcdAndInverse) {
    EXPECT_EQ(num::gcd(12, 18), 6);
    EXPECT_EQ(num::gcd(0, 7), 7);
    EXPECT_EQ(num::gcd(-4, 6), 2);
    for (i64 m = 2; m <= 40; ++m)
        for (i64 a = 1; a < m; ++a) {
            if (oracle::gcd(a, m) != 1) {
                EXPECT_THROW(num::invmod(a, m), Error);
                continue;
            }
            EXPECT_EQ(num::mod(a * num::invmod(a, m), m), 1);
        }
}

TEST(Numeric, PowAndMod) {
    EXPECT_EQ(num::mod(-3, 5), 2);
    EXPECT_EQ(num::powmod(3, 4, 7), 81 % 7);
    EXPECT_EQ(num::powmod(5, 0, 1), 0);
    EXPECT_EQ(num::ipow(5, 4), 625);
}

TEST(Numeric, DivisorsMatchOracle) {
    for (i64 n = 1; n <= 200; ++n) {
        EXPECT_EQ(static_cast<i64>(num::divisors(n).size()), oracle::divisor_count(n)) << n;
        EXPECT_EQ(num::is_prime(n), oracle::is_prime(n)) << n;
    }
}

TEST(Numeric, PrimePowerAndFactorize) {
    EXPECT_EQ(num::prime_power(9), (std::pair<i64, int>{3, 2}));
    EXPECT_EQ(num::prime_power(8), (std::pair<i64, int>{2, 3}));
    EXPECT_EQ(num::prime_power(12).first, 0);
    i64 prod = 1;
    for (auto [p, e] : num::factorize(360)) prod *= num::ipow(p, e);
    EXPECT_EQ(prod, 360);
    EXPECT_EQ(num::totient(36), 12);
}

TEST(Numeric, InvariantFactorsCanonical) {
    EXPECT_EQ(num::invariant_factors({2, 3}), (std::vector<i64>{6}));
    EXPECT_EQ(num::invariant_factors({2, 2, 4}), (std::vector<i64>{2, 2, 4}));
    EXPECT_EQ(num::invariant_factors({4, 6}), (std::vector<i64>{2, 12}));
    EXPECT_TRUE(num::invariant_factors({1, 1}).empty());
}

namespace {

modlin::ModMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, i64 N) {
    modlin::ModMatrix m(rows, cols, N);
    std::uniform_int_distribution<i64> d(0, N - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    return m;
}

modlin::ModMatrix product(const modlin::ModMatrix& a, const modlin::ModMatrix& b) {
    modlin::ModMatrix out(a.rows(), b.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) out.add(i, j, num::mulmod(a.at(i, k), b.at(k, j), a.modulus()));
    return out;
}

}  // namespace

TEST(ModLin, DiagonalizationIdentity) {
    std::mt19937_64 rng(7);
    for (i64 N : {2, 4, 6, 8, 12, 30, 36}) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
            const auto a = random_matrix(rng, rows, cols, N);
            const auto d = modlin::diagonalize(a, true, true);
            const auto rac = product(product(*d.left, a), *d.right);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    const i64 expect = (i == j && i < d.diag.size()) ? num::mod(d.diag[i], N) : 0;
                    ASSERT_EQ(rac.at(i, j), expect) << "N=" << N;
                }
            const auto rr = product(*d.left, *d.left_inv);
            const auto cc = product(*d.right, *d.right_inv);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < rows; ++j) ASSERT_EQ(rr.at(i, j), i == j ? 1 : 0);
            for (std::size_t i = 0; i < cols; ++i)
                for (std::size_t j = 0; j < cols; ++j) ASSERT_EQ(cc.at(i, j), i == j ? 1 : 0);
        }
    }
}

TEST(ModLin, KernelSizeMatchesEnumeration) {
    std::mt19937_64 rng(11);
    for (i64 N : {4, 6, 9, 12}) {
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
            const auto a = random_matrix(rng, rows, cols, N);
            const auto k = modlin::kernel(a);
            i64 size = 1;
            for (i64 o : k.orders) size *= o;
            i64 brute = 0;
            std::vector<i64> x(cols, 0);
            for (i64 idx = 0; idx < oracle::ipow(N, static_cast<i64>(cols)); ++idx) {
                bool zero = true;
                for (std::size_t i = 0; i < rows && zero; ++i) {
                    i64 acc = 0;
                    for (std::size_t j = 0; j < cols; ++j) acc += a.at(i, j) * x[j];
                    zero = acc % N == 0;
                }
                if (zero) {
                    ++brute;
                    const auto c = k.coordinates(x);
                    std::vector<i64> back(cols, 0);
                    for (std::size_t g = 0; g < c.size(); ++g)
                        for (std::size_t j = 0; j < cols; ++j) back[j] = num::mod(back[j] + c[g] * k.generators[g][j], N);
                    EXPECT_EQ(back, x);
                }
                for (std::size_t j = 0; j < cols; ++j) {
                    if (++x[j] < N) break;
                    x[j] = 0;
                }
            }
            EXPECT_EQ(size, brute) << "N=" << N;
        }
    }
}

TEST(ModLin, SolverAgreesWithImageEnumeration) {
    std::mt19937_64 rng(13);
    for (i64 N : {4, 6, 8}) {
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
            const auto a = random_matrix(rng, rows, cols, N);
            std::set<std::vector<i64>> image;
            std::vector<i64> x(cols, 0);
            for (i64 idx = 0; idx < oracle::ipow(N, static_cast<i64>(cols)); ++idx) {
                image.insert(a.apply(x));
                for (std::size_t j = 0; j < cols; ++j) {
                    if (++x[j] < N) break;
                    x[j] = 0;
                }
            }
            const modlin::LinearSolver solver(a);
            std::vector<i64> b(rows, 0);
            for (i64 idx = 0; idx < oracle::ipow(N, static_cast<i64>(rows)); ++idx) {
                const auto sol = solver.solve(b);
                EXPECT_EQ(sol.has_value(), image.contains(b));
                if (sol) EXPECT_EQ(a.apply(*sol), b);
                for (std::size_t j = 0; j < rows; ++j) {
                    if (++b[j] < N) break;
                    b[j] = 0;
                }
            }
        }
    }
}
