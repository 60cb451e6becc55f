#pragma once

// The crossed product F_{q^r} * G = (+)_g F_{q^r} u_g with
//   u_g c = g(c) u_g   and   u_g u_h = f(g, h) u_{gh}.
// The action and the cocycle both come from one CocycleTable whose
// coefficient module is F_{q^r}^* in discrete-log form.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "xprod/cocycles.hpp"
#include "xprod/error.hpp"
#include "xprod/ffield.hpp"
#include "xprod/groups.hpp"

namespace xprod {

struct RingElem {
    std::vector<FieldElem> coeffs;  // indexed by group element

    bool operator==(const RingElem&) const = default;
};

class CrossedRing {
public:
    /// Checks that the cocycle's module is F_{q^r}^* under Frobenius powers; the cocycle
    /// condition itself is checked only when `require_cocycle` is set.
    CrossedRing(FieldTower tower, CocycleTable cocycle, bool require_cocycle = true)
        : tower_(std::move(tower)), cocycle_(std::move(cocycle)) {
        if (cocycle_.N() != tower_.N())
            throw Error(ErrorKind::InvalidParams, "cocycle coefficients are not the unit group of the field");
        if (cocycle_.group.order() > kMaxRingGroupOrder)
            throw Error(ErrorKind::TooLarge, "ring construction needs |G| <= " + std::to_string(kMaxRingGroupOrder));
        for (i64 m : cocycle_.coeff.multipliers()) {
            std::optional<i64> k;
            for (i64 t = 1; t <= tower_.r() && !k; ++t)
                if (tower_.frob_multiplier(t) == m) k = t;
            if (!k) throw Error(ErrorKind::InvalidAction, "action multiplier is not a Frobenius power");
            frob_.push_back(*k);
        }
        if (require_cocycle && !is_cocycle(cocycle_)) throw Error(ErrorKind::InvalidCocycle, "table is not a normalized 2-cocycle");
    }

    [[nodiscard]] const FieldTower& tower() const noexcept { return tower_; }
    [[nodiscard]] const GroupSpec& group() const noexcept { return cocycle_.group; }
    [[nodiscard]] const CocycleTable& cocycle() const noexcept { return cocycle_; }
    [[nodiscard]] std::size_t dim() const noexcept { return cocycle_.group.order(); }
    /// Frobenius exponent k_i (1..r) by which the i-th generator acts.
    [[nodiscard]] const std::vector<i64>& frobenius_exponents() const noexcept { return frob_; }

    /// g(c).
    [[nodiscard]] FieldElem act(std::size_t g, FieldElem c) const noexcept {
        if (c.is_zero()) return c;
        return tower_.unit(num::mulmod(cocycle_.coeff.multiplier(g), c.log(), tower_.N()));
    }
    /// Number of group elements acting trivially on the field.
    [[nodiscard]] std::size_t kernel_order() const noexcept {
        std::size_t k = 0;
        for (std::size_t g = 0; g < dim(); ++g) k += act(g, tower_.x0()) == tower_.x0() ? 1 : 0;
        return k;
    }

    [[nodiscard]] RingElem zero() const { return RingElem{std::vector<FieldElem>(dim())}; }
    [[nodiscard]] RingElem monomial(FieldElem c, std::size_t g) const {
        auto e = zero();
        e.coeffs[g] = c;
        return e;
    }
    [[nodiscard]] RingElem basis(std::size_t g) const { return monomial(tower_.one(), g); }
    [[nodiscard]] RingElem one() const { return basis(0); }

    [[nodiscard]] RingElem add(const RingElem& a, const RingElem& b) const {
        RingElem out = zero();
        for (std::size_t g = 0; g < dim(); ++g) out.coeffs[g] = tower_.add(a.coeffs[g], b.coeffs[g]);
        return out;
    }
    [[nodiscard]] RingElem scale(FieldElem c, const RingElem& a) const {
        RingElem out = zero();
        for (std::size_t g = 0; g < dim(); ++g) out.coeffs[g] = tower_.mul(c, a.coeffs[g]);
        return out;
    }

    /// beta_g u_g * beta_h u_h = beta_g g(beta_h) f(g,h) u_{gh}, extended bilinearly.
    [[nodiscard]] RingElem multiply(const RingElem& a, const RingElem& b) const {
        RingElem out = zero();
        const auto& grp = group();
        for (std::size_t g = 0; g < dim(); ++g) {
            if (a.coeffs[g].is_zero()) continue;
            for (std::size_t h = 0; h < dim(); ++h) {
                if (b.coeffs[h].is_zero()) continue;
                const i64 e = a.coeffs[g].log() + act(g, b.coeffs[h]).log() + cocycle_(g, h);
                const std::size_t gh = grp.op(g, h);
                out.coeffs[gh] = tower_.add(out.coeffs[gh], tower_.unit(e));
            }
        }
        return out;
    }

    /// u_g^{-1} = u_{g^-1} f(g, g^-1)^{-1}.
    [[nodiscard]] RingElem basis_inverse(std::size_t g) const {
        const std::size_t gi = group().inverse(g);
        return multiply(basis(gi), monomial(tower_.unit(-cocycle_(g, gi)), 0));
    }

    /// Encodes an element as an integer in base q^r (coefficient codes, group element 0 least significant).
    [[nodiscard]] std::size_t encode(const RingElem& a) const {
        std::size_t code = 0;
        for (std::size_t g = dim(); g-- > 0;) code = code * static_cast<std::size_t>(tower_.size()) + static_cast<std::size_t>(tower_.code_of(a.coeffs[g]));
        return code;
    }
    [[nodiscard]] RingElem decode(std::size_t code) const {
        RingElem e = zero();
        const auto Q = static_cast<std::size_t>(tower_.size());
        for (std::size_t g = 0; g < dim(); ++g) {
            e.coeffs[g] = tower_.from_code(static_cast<i64>(code % Q));
            code /= Q;
        }
        return e;
    }
    /// (q^r)^|G|, or nullopt when that overflows 2^62.
    [[nodiscard]] std::optional<std::size_t> cardinality() const {
        std::size_t c = 1;
        for (std::size_t g = 0; g < dim(); ++g) {
            if (c > (std::size_t{1} << 62) / static_cast<std::size_t>(tower_.size())) return std::nullopt;
            c *= static_cast<std::size_t>(tower_.size());
        }
        return c;
    }

    [[nodiscard]] RingElem random_element(std::mt19937_64& rng) const {
        std::uniform_int_distribution<i64> dist(0, tower_.size() - 1);
        RingElem e = zero();
        for (auto& c : e.coeffs) c = tower_.from_code(dist(rng));
        return e;
    }

private:
    FieldTower tower_;
    CocycleTable cocycle_;
    std::vector<i64> frob_;
};

/// Count of nonzero coefficients over the graded basis.
inline std::size_t hamming_weight(const RingElem& a) {
    std::size_t w = 0;
    for (const auto& c : a.coeffs) w += c.is_zero() ? 0 : 1;
    return w;
}

/// F_{q^r} * C_n with sigma -> phi^k and the standard cocycle of beta = x0^beta_exp.
inline CrossedRing cyclic_crossed_ring(i64 q, i64 r, i64 n, i64 k, i64 beta_exp, i64 field_bound = kDefaultFieldBound) {
    auto tower = make_tower(q, r, field_bound);
    const FrobAction act{n, k, r};
    act.require_valid();
    const auto group = GroupSpec::cyclic(n);
    auto coeff = CoeffModule::field_units(group, tower, act);
    auto f = standard_cocycle(n, coeff, beta_exp);
    return CrossedRing(std::move(tower), std::move(f));
}

/// First basis triple (g, h, l) where (u_g u_h) u_l != u_g (u_h u_l), if any.
inline std::optional<std::array<std::size_t, 3>> associativity_failure(const CrossedRing& ring) {
    const std::size_t n = ring.dim();
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            const auto gh = ring.multiply(ring.basis(g), ring.basis(h));
            for (std::size_t l = 0; l < n; ++l) {
                const auto left = ring.multiply(gh, ring.basis(l));
                const auto right = ring.multiply(ring.basis(g), ring.multiply(ring.basis(h), ring.basis(l)));
                if (!(left == right)) return std::array<std::size_t, 3>{g, h, l};
            }
        }
    return std::nullopt;
}

/// u_g c u_g^{-1} == g(c) for every basis element and every nonzero scalar.
inline bool conjugation_matches_action(const CrossedRing& ring) {
    const auto& t = ring.tower();
    for (std::size_t g = 0; g < ring.dim(); ++g) {
        const auto inv = ring.basis_inverse(g);
        for (i64 e = 0; e < t.N(); ++e) {
            const auto c = t.unit(e);
            const auto lhs = ring.multiply(ring.multiply(ring.basis(g), ring.monomial(c, 0)), inv);
            if (!(lhs == ring.monomial(ring.act(g, c), 0))) return false;
        }
    }
    return true;
}

/// F[y; eta] / (y^n - beta) for a cyclic crossed product, with y = u_sigma.
struct SkewPolyView {
    i64 n = 1;
    i64 frobenius_k = 1;  // y c = c^(q^k) y
    i64 beta_exp = 0;     // y^n = x0^beta_exp
};

inline SkewPolyView skew_poly_view(const CrossedRing& ring) {
    if (!ring.group().is_cyclic()) throw Error(ErrorKind::NotCyclic, "skew polynomial view needs a cyclic group");
    return {ring.group().n(), ring.frobenius_exponents().front(), beta_of(ring.cocycle())};
}

/// Coefficients of y^0..y^{n-1} for a ring element, using u_{sigma^i} = c_i^{-1} y^i with
/// c_i = f(sigma, sigma) ... f(sigma^{i-1}, sigma).
inline std::vector<FieldElem> to_skew_coords(const CrossedRing& ring, const RingElem& a) {
    const auto& t = ring.tower();
    const std::size_t n = ring.dim();
    std::vector<FieldElem> out(n);
    i64 c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 2) c += ring.cocycle()(i - 1, 1);
        out[i] = a.coeffs[i].is_zero() ? a.coeffs[i] : t.mul(a.coeffs[i], t.unit(-c));
    }
    return out;
}

/// Product in F[y; eta]/(y^n - beta): (a y^i)(b y^j) = a sigma^i(b) y^{i+j}, y^n = beta.
inline std::vector<FieldElem> skew_multiply(const FieldTower& t, const SkewPolyView& v, const std::vector<FieldElem>& a,
                                            const std::vector<FieldElem>& b) {
    const auto n = static_cast<std::size_t>(v.n);
    std::vector<FieldElem> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            auto term = t.mul(a[i], t.frobenius(b[j], v.frobenius_k * static_cast<i64>(i)));
            std::size_t deg = i + j;
            if (deg >= n) {
                deg -= n;
                term = t.mul(term, t.unit(v.beta_exp));
            }
            out[deg] = t.add(out[deg], term);
        }
    }
    return out;
}

}  // namespace xprod
