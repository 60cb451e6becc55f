// Randomised invariant checks across the library.
#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "xprod/xprod.hpp"

using namespace xprod;

namespace {

struct Setting {
    i64 q, r, n, k;
};

std::vector<Setting> grid(i64 max_r, i64 max_n) {
    std::vector<Setting> out;
    for (i64 q : {2, 3, 5})
        for (i64 r = 1; r <= max_r; ++r)
            for (i64 n = 1; n <= max_n; ++n)
                for (i64 k : valid_frobenius_exponents(n, r)) out.push_back({q, r, n, k});
    return out;
}

CocycleTable random_table(std::mt19937_64& rng, const GroupSpec& g, const CoeffModule& m) {
    CocycleTable f(g, m);
    std::uniform_int_distribution<i64> d(0, m.N() - 1);
    for (std::size_t a = 1; a < g.order(); ++a)
        for (std::size_t b = 1; b < g.order(); ++b) f.at(a, b) = d(rng);
    return f;
}

// A random cocycle: a random class representative plus a random coboundary.
CocycleTable random_cocycle(std::mt19937_64& rng, const CohGroup& h) {
    const auto classes = h.classes();
    const auto base = h.representative(classes[rng() % classes.size()]);
    std::vector<i64> r(h.group().order(), 0);
    for (std::size_t i = 1; i < r.size(); ++i) r[i] = static_cast<i64>(rng() % static_cast<std::uint64_t>(h.coeff().N()));
    return add(base, coboundary(h.group(), h.coeff(), r));
}

}  // namespace

TEST(Properties, CocycleConditionIffAssociative) {
    std::mt19937_64 rng(101);
    const std::vector<std::pair<FieldTower, CocycleTable>> shapes = [] {
        std::vector<std::pair<FieldTower, CocycleTable>> v;
        const auto c2 = GroupSpec::cyclic(2);
        const auto v4 = GroupSpec::elab(2, 2);
        v.emplace_back(make_tower(2, 2), CocycleTable(c2, CoeffModule(c2, 3, {2})));
        v.emplace_back(make_tower(3, 1), CocycleTable(v4, CoeffModule::trivial(v4, 2)));
        v.emplace_back(make_tower(2, 2), CocycleTable(v4, CoeffModule(v4, 3, {2, 1})));
        v.emplace_back(make_tower(3, 1), CocycleTable(GroupSpec::cyclic(4), CoeffModule::trivial(GroupSpec::cyclic(4), 2)));
        return v;
    }();
    int cocycles = 0, others = 0;
    for (const auto& [tower, shape] : shapes) {
        for (int trial = 0; trial < 150; ++trial) {
            auto f = random_table(rng, shape.group, shape.coeff);
            // bias half the samples towards genuine cocycles
            if (trial % 2 == 0) {
                const auto h = compute_h2(shape.group, shape.coeff);
                f = random_cocycle(rng, h);
            }
            const CrossedRing ring(tower, f, false);
            const bool assoc = !associativity_failure(ring).has_value();
            EXPECT_EQ(assoc, is_cocycle(f));
            (assoc ? cocycles : others)++;
        }
    }
    EXPECT_GT(cocycles, 100);
    EXPECT_GT(others, 100);
}

TEST(Properties, CohomologousIsAnEquivalence) {
    std::mt19937_64 rng(202);
    for (const auto& s : grid(2, 6)) {
        const auto t = make_tower(s.q, s.r);
        const auto g = GroupSpec::cyclic(s.n);
        const auto m = CoeffModule::field_units(g, t, FrobAction{s.n, s.k, s.r});
        const auto h = compute_h2(g, m);
        for (int trial = 0; trial < 5; ++trial) {
            const auto a = random_cocycle(rng, h);
            const auto b = random_cocycle(rng, h);
            const auto c = random_cocycle(rng, h);
            EXPECT_TRUE(cohomologous(a, a).has_value());
            const bool ab = cohomologous(a, b).has_value();
            const bool bc = cohomologous(b, c).has_value();
            EXPECT_EQ(ab, cohomologous(b, a).has_value());
            if (ab && bc) EXPECT_TRUE(cohomologous(a, c).has_value());
            EXPECT_EQ(ab, h.coordinates(a) == h.coordinates(b));
        }
    }
}

TEST(Properties, PullbackScalesBeta) {
    std::mt19937_64 rng(303);
    for (const auto& s : grid(4, 8)) {
        const auto t = make_tower(s.q, s.r);
        const FrobAction act{s.n, s.k, s.r};
        const auto g = GroupSpec::cyclic(s.n);
        const auto m = CoeffModule::field_units(g, t, act);
        const i64 step = t.fixed_subgroup(act).generator_exponent;
        const i64 choices = t.N() / step;
        const i64 beta = s.n == 1 ? 0 : step * static_cast<i64>(rng() % static_cast<std::uint64_t>(choices));
        const auto f = standard_cocycle(s.n, m, beta);
        for (const auto& psi : aut_eta_cyclic(s.n, act)) {
            const i64 j = std::get<CyclicAut>(psi).j;
            const auto pf = pullback(psi, f);
            EXPECT_EQ(beta_of(pf), num::mulmod(j, beta, t.N()));
            EXPECT_TRUE(cohomologous(pf, standard_cocycle(s.n, m, num::mulmod(j, beta, t.N()))).has_value());
        }
    }
}

TEST(Properties, NormImageInsideFixedSubgroup) {
    for (const auto& s : grid(4, 8)) {
        const auto t = make_tower(s.q, s.r);
        const FrobAction act{s.n, s.k, s.r};
        const auto fixed = t.fixed_subgroup(act);
        std::set<i64> image;
        for (i64 e = 0; e < t.N(); ++e) {
            const auto nm = t.norm_map(act, t.unit(e));
            EXPECT_EQ(t.frobenius(nm, s.k), nm);
            EXPECT_EQ(nm.log() % fixed.generator_exponent, 0);
            image.insert(nm.log());
        }
        // |fixed / norms| is the order of H^2
        EXPECT_EQ(fixed.order / static_cast<i64>(image.size()), num::gcd(oracle::ipow(s.q, s.k) - 1, s.n * s.k / s.r));
    }
}

TEST(Properties, IsometryWitnessesAlwaysVerify) {
    std::mt19937_64 rng(404);
    for (const auto& s : grid(2, 4)) {
        if (oracle::ipow(s.q, s.r) > 9) continue;
        const auto t = make_tower(s.q, s.r);
        const auto g = GroupSpec::cyclic(s.n);
        const auto m = CoeffModule::field_units(g, t, FrobAction{s.n, s.k, s.r});
        const auto h = compute_h2(g, m);
        for (int trial = 0; trial < 4; ++trial) {
            const CrossedRing a(t, random_cocycle(rng, h));
            const CrossedRing b(t, random_cocycle(rng, h));
            if (const auto w = find_isometry(a, b)) EXPECT_TRUE(verify_isometry(*w, a, b));
        }
    }
}

TEST(Properties, SemisimpleClosedFormMatchesComplements) {
    for (const auto& s : grid(2, 4)) {
        const auto ring = cyclic_crossed_ring(s.q, s.r, s.n, s.k, 0);
        const auto card = ring.cardinality();
        if (!card || *card > 4096) continue;
        const auto rep = is_semisimple(ring);
        ASSERT_TRUE(rep.empirical.has_value());
        EXPECT_EQ(*rep.empirical, rep.semisimple) << s.q << "^" << s.r << " n=" << s.n << " k=" << s.k;
        EXPECT_EQ(rep.semisimple, is_semisimple_cyclic({s.n, s.q, s.r, s.k}));
    }
}

TEST(Properties, RandomAlternatingNormalForms) {
    std::mt19937_64 rng(505);
    for (i64 p : {2, 3, 5, 7})
        for (i64 s = 1; s <= 6; ++s)
            for (int trial = 0; trial < 30; ++trial) {
                const auto n = static_cast<std::size_t>(s);
                std::vector<i64> mat(n * n, 0);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = a + 1; b < n; ++b) {
                        mat[a * n + b] = static_cast<i64>(rng() % static_cast<std::uint64_t>(p));
                        mat[b * n + a] = num::mod(-mat[a * n + b], p);
                    }
                const auto nf = normal_form(Bicharacter{p, s, mat});
                EXPECT_EQ(2 * nf.i, oracle::rank_mod_p(mat, n, n, p));
                EXPECT_EQ(congruent_transform(mat, nf.change_of_basis, s, p), alpha_matrix(p, s, nf.i).matrix);
            }
}
