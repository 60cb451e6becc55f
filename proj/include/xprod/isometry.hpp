#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "xprod/cocycles.hpp"
#include "xprod/cohomology.hpp"
#include "xprod/crossring.hpp"
#include "xprod/error.hpp"
#include "xprod/groups.hpp"

namespace xprod {

/// rho(sum beta_g u_g) = sum beta_g r_g v_{psi(g)}.
struct IsometryWitness {
    CompatAut psi;
    std::vector<FieldElem> scalars;  // r_g, indexed by g
};

inline RingElem apply_isometry(const IsometryWitness& w, const CrossedRing& from, const CrossedRing& to, const RingElem& a) {
    const auto& t = from.tower();
    RingElem out = to.zero();
    for (std::size_t g = 0; g < from.dim(); ++g) {
        const std::size_t pg = apply_aut(w.psi, from.group(), g);
        out.coeffs[pg] = t.add(out.coeffs[pg], t.mul(a.coeffs[g], w.scalars[g]));
    }
    return out;
}

namespace detail {

inline void require_same_action(const CrossedRing& a, const CrossedRing& b) {
    if (a.tower().q() != b.tower().q() || a.tower().r() != b.tower().r())
        throw Error(ErrorKind::ActionMismatch, "rings are over different fields");
    if (!(a.group() == b.group()) || !(a.cocycle().coeff == b.cocycle().coeff))
        throw Error(ErrorKind::ActionMismatch, "rings carry different groups or actions");
}

}  // namespace detail

/// Searches Aut_eta(G) for psi with f1 ~ psi(f2); the coboundary witness supplies the r_g.
inline std::optional<IsometryWitness> find_isometry(const CrossedRing& ring1, const CrossedRing& ring2) {
    detail::require_same_action(ring1, ring2);
    const auto& f1 = ring1.cocycle();
    const auto& f2 = ring2.cocycle();
    const CoboundarySolver solver(f1.group, f1.coeff);
    for (const auto& psi : aut_eta(f1.group, f1.coeff)) {
        if (auto w = solver.solve(f1, pullback(psi, f2))) {
            IsometryWitness out{psi, {}};
            for (i64 e : w->r) out.scalars.push_back(ring1.tower().unit(e));
            return out;
        }
    }
    return std::nullopt;
}

/// Checks bijectivity, multiplicativity on all (x0^a u_g)(x0^b u_h) with a, b in {0, 1},
/// and weight preservation on monomials, the all-ones element and random samples.
inline bool verify_isometry(const IsometryWitness& w, const CrossedRing& ring1, const CrossedRing& ring2) {
    if (ring1.dim() != ring2.dim() || w.scalars.size() != ring1.dim()) return false;
    const auto& t = ring1.tower();
    std::vector<bool> hit(ring1.dim(), false);
    for (std::size_t g = 0; g < ring1.dim(); ++g) {
        std::size_t pg = 0;
        try {
            pg = apply_aut(w.psi, ring1.group(), g);
        } catch (const Error&) {
            return false;
        }
        if (pg >= ring1.dim() || hit[pg] || w.scalars[g].is_zero()) return false;
        hit[pg] = true;
    }
    auto rho = [&](const RingElem& a) { return apply_isometry(w, ring1, ring2, a); };
    const FieldElem scalars[2] = {t.one(), t.x0()};
    for (std::size_t g = 0; g < ring1.dim(); ++g)
        for (std::size_t h = 0; h < ring1.dim(); ++h)
            for (const auto& a : scalars)
                for (const auto& b : scalars) {
                    const auto x = ring1.monomial(a, g);
                    const auto y = ring1.monomial(b, h);
                    if (!(rho(ring1.multiply(x, y)) == ring2.multiply(rho(x), rho(y)))) return false;
                }
    RingElem all = ring1.zero();
    for (std::size_t g = 0; g < ring1.dim(); ++g) {
        if (hamming_weight(rho(ring1.basis(g))) != 1) return false;
        all.coeffs[g] = t.one();
    }
    if (hamming_weight(rho(all)) != ring1.dim()) return false;
    std::mt19937_64 rng(0x5eed);
    for (int i = 0; i < 32; ++i) {
        const auto a = ring1.random_element(rng);
        if (hamming_weight(rho(a)) != hamming_weight(a)) return false;
    }
    return true;
}

/// Exhaustive count of monomial maps u_g -> r_g v_{pi(g)} that carry R^f_eta * G onto some
/// crossed product R^{f'}_eta * G of the same group and action (f' possibly unnormalised).
/// Scans all |G|! permutations and all (q^r - 1)^|G| scalar tuples.
inline i64 count_crossed_product_isometries(const CrossedRing& ring, i64 max_candidates = i64{1} << 20) {
    const std::size_t n = ring.dim();
    const auto& grp = ring.group();
    const auto& t = ring.tower();
    const i64 units = t.N();
    i64 candidates = 1;
    for (std::size_t i = 1; i <= n; ++i) candidates *= static_cast<i64>(i);
    for (std::size_t i = 0; i < n; ++i) {
        candidates *= units;
        if (candidates > max_candidates) throw Error(ErrorKind::TooLarge, "monomial group too large for exhaustive search");
    }
    const auto& f = ring.cocycle();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    i64 count = 0;
    do {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g)
            for (std::size_t h = 0; h < n && ok; ++h) ok = perm[grp.op(g, h)] == grp.op(perm[g], perm[h]);
        for (std::size_t g = 0; g < n && ok; ++g) ok = f.coeff.multiplier(perm[g]) == f.coeff.multiplier(g);
        if (!ok) continue;
        std::vector<i64> r(n, 0);
        for (i64 idx = 0;; ++idx) {
            // f'(pi g, pi h) = f(g, h) + r_gh - r_g - g.r_h
            CocycleTable fp(grp, f.coeff);
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t h = 0; h < n; ++h)
                    fp.at(perm[g], perm[h]) = num::mod(f(g, h) + r[grp.op(g, h)] - r[g] - f.coeff.act(g, r[h]), units);
            bool cocycle = true;
            for (std::size_t a = 0; a < n && cocycle; ++a)
                for (std::size_t b = 0; b < n && cocycle; ++b)
                    for (std::size_t c = 0; c < n && cocycle; ++c) {
                        const i64 v = f.coeff.act(a, fp(b, c)) - fp(grp.op(a, b), c) + fp(a, grp.op(b, c)) - fp(a, b);
                        cocycle = num::mod(v, units) == 0;
                    }
            if (cocycle) ++count;
            std::size_t pos = 0;
            while (pos < n && ++r[pos] == units) r[pos++] = 0;
            if (pos == n) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace xprod
