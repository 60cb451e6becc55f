#pragma once

// Brute-force second cohomology H^2(G, Z/N) with explicit class coordinates.
//
// Z^2 = ker(delta^2) is read off a diagonalisation of delta^2; the image of
// delta^1 is expressed in the kernel's generators, and the quotient is the
// cokernel of [ B-coordinates | diag(kernel orders) ], diagonalised once more.
// Class coordinates live in that second diagonal basis.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "xprod/cocycles.hpp"
#include "xprod/error.hpp"
#include "xprod/groups.hpp"
#include "xprod/modlin.hpp"
#include "xprod/numeric.hpp"

namespace xprod {

inline constexpr std::size_t kMaxGenericH2GroupOrder = 12;
inline constexpr i64 kMaxExplicitClasses = i64{1} << 16;

using ClassCoords = std::vector<i64>;

class CohGroup {
public:
    [[nodiscard]] const GroupSpec& group() const noexcept { return group_; }
    [[nodiscard]] const CoeffModule& coeff() const noexcept { return coeff_; }
    /// Canonical invariant factors d_1 | d_2 | ... (empty for the trivial group).
    [[nodiscard]] const std::vector<i64>& invariant_factors() const noexcept { return invariant_factors_; }
    /// Orders of the coordinate axes used by coordinates()/representative().
    [[nodiscard]] const std::vector<i64>& coordinate_orders() const noexcept { return axes_; }
    [[nodiscard]] i64 order() const noexcept {
        i64 o = 1;
        for (i64 a : axes_) o *= a;
        return o;
    }
    [[nodiscard]] bool has_explicit_classes() const noexcept { return order() <= kMaxExplicitClasses; }
    [[nodiscard]] bool closed_form() const noexcept { return std::holds_alternative<ClosedForm>(data_); }

    /// Class coordinates of a normalized cocycle.
    [[nodiscard]] ClassCoords coordinates(const CocycleTable& f) const {
        if (!(f.group == group_) || !(f.coeff == coeff_)) throw Error(ErrorKind::InvalidParams, "cocycle from another module");
        if (auto v = validate(f)) throw Error(ErrorKind::InvalidCocycle, "not a normalized cocycle");
        if (const auto* cf = std::get_if<ClosedForm>(&data_)) {
            if (axes_.empty()) return {};
            const i64 beta = beta_of(f);
            return {(beta / cf->fixed_step) % axes_.front()};
        }
        const auto& s = std::get<Snf>(data_);
        if (axes_.empty()) return {};
        const auto a = s.z2.coordinates(detail::c2_vector(f));
        const auto z = s.left.apply(a);
        ClassCoords out;
        for (std::size_t t = 0; t < s.kept.size(); ++t) out.push_back(num::mod(z[s.kept[t]], axes_[t]));
        return out;
    }

    /// A normalized cocycle in the class with the given coordinates.
    [[nodiscard]] CocycleTable representative(const ClassCoords& c) const {
        if (c.size() != axes_.size()) throw Error(ErrorKind::InvalidParams, "coordinate length mismatch");
        if (const auto* cf = std::get_if<ClosedForm>(&data_)) {
            const i64 beta = axes_.empty() ? 0 : num::mulmod(c.front(), cf->fixed_step, coeff_.N());
            return standard_cocycle(group_.n(), coeff_, beta);
        }
        const auto& s = std::get<Snf>(data_);
        if (axes_.empty()) return CocycleTable(group_, coeff_);
        std::vector<i64> e(s.z2.generators.size(), 0);
        for (std::size_t t = 0; t < s.kept.size(); ++t) e[s.kept[t]] = num::mod(c[t], axes_[t]);
        const auto a = s.left_inv.apply(e);
        const i64 N = coeff_.N();
        std::vector<i64> x((group_.order() - 1) * (group_.order() - 1), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t k = 0; k < x.size(); ++k) x[k] = num::mod(x[k] + num::mulmod(a[i], s.z2.generators[i][k], N), N);
        return detail::from_c2_vector(group_, coeff_, x);
    }

    /// Every class coordinate tuple in lexicographic order.
    [[nodiscard]] std::vector<ClassCoords> classes() const {
        if (!has_explicit_classes()) throw Error(ErrorKind::TooLarge, "too many cohomology classes to enumerate");
        std::vector<ClassCoords> out;
        ClassCoords c(axes_.size(), 0);
        for (i64 idx = 0; idx < order(); ++idx) {
            out.push_back(c);
            for (std::size_t t = c.size(); t-- > 0;) {
                if (++c[t] < axes_[t]) break;
                c[t] = 0;
            }
        }
        return out;
    }

    friend CohGroup compute_h2(const GroupSpec&, const CoeffModule&);
    friend CohGroup compute_h2_cyclic_closed_form(const GroupSpec&, const CoeffModule&);

private:
    struct Snf {
        modlin::Kernel z2;
        modlin::ModMatrix left, left_inv;
        std::vector<std::size_t> kept;
    };
    struct ClosedForm {
        i64 fixed_step = 1;  // generator exponent of the invariant subgroup
    };

    CohGroup(GroupSpec g, CoeffModule c) : group_(std::move(g)), coeff_(std::move(c)) {}

    GroupSpec group_;
    CoeffModule coeff_;
    std::vector<i64> axes_;
    std::vector<i64> invariant_factors_;
    std::variant<Snf, ClosedForm> data_;
};

/// Cyclic group: H^2 = (Z/N)^G / norm image, parametrised by beta_f.
inline CohGroup compute_h2_cyclic_closed_form(const GroupSpec& group, const CoeffModule& coeff) {
    if (!group.is_cyclic()) throw Error(ErrorKind::NotCyclic, "closed form needs a cyclic group");
    const i64 N = coeff.N();
    const i64 mu = coeff.multipliers().front();
    const i64 fixed_order = num::gcd(num::mod(mu - 1, N), N);
    i64 norm_sum = 0;  // 1 + mu + ... + mu^{n-1}
    for (i64 i = 0, term = num::mod(1, N); i < group.n(); ++i, term = num::mulmod(term, mu, N)) norm_sum = num::mod(norm_sum + term, N);
    const i64 norm_step = num::gcd(norm_sum, N);
    CohGroup h(group, coeff);
    const i64 step = N / fixed_order;
    const i64 m = norm_step / step;  // |invariants| / |norms|
    h.data_ = CohGroup::ClosedForm{step};
    if (m > 1) h.axes_ = {m};
    h.invariant_factors_ = num::invariant_factors(h.axes_);
    return h;
}

/// Z^2 / B^2 for |G| <= 12; cyclic groups beyond that use the closed form.
inline CohGroup compute_h2(const GroupSpec& group, const CoeffModule& coeff) {
    const std::size_t n = group.order();
    if (n > kMaxGenericH2GroupOrder) {
        if (group.is_cyclic()) return compute_h2_cyclic_closed_form(group, coeff);
        throw Error(ErrorKind::TooLarge, "generic H^2 needs |G| <= " + std::to_string(kMaxGenericH2GroupOrder));
    }
    CohGroup h(group, coeff);
    CohGroup::Snf snf;
    const i64 N = coeff.N();
    if (n == 1 || N == 1) {
        h.data_ = std::move(snf);
        return h;
    }
    snf.z2 = modlin::kernel(delta2_matrix(group, coeff));
    const std::size_t kdim = snf.z2.generators.size();
    const auto d1 = delta1_matrix(group, coeff);

    modlin::ModMatrix rel(kdim, (n - 1) + kdim, N);
    for (std::size_t j = 0; j < n - 1; ++j) {
        const auto a = snf.z2.coordinates(d1.column(j));
        for (std::size_t i = 0; i < kdim; ++i) rel.at(i, j) = a[i];
    }
    for (std::size_t i = 0; i < kdim; ++i) rel.at(i, (n - 1) + i) = num::mod(snf.z2.orders[i], N);

    auto d = modlin::diagonalize(std::move(rel), true, false);
    for (std::size_t i = 0; i < kdim; ++i) {
        const i64 hi = num::gcd(d.diag[i], N);
        if (hi > 1) {
            snf.kept.push_back(i);
            h.axes_.push_back(hi);
        }
    }
    snf.left = std::move(*d.left);
    snf.left_inv = std::move(*d.left_inv);
    h.data_ = std::move(snf);
    h.invariant_factors_ = num::invariant_factors(h.axes_);
    return h;
}

/// Trivial-action roots of unity mu_N used for complex twisted (C_p)^s algebras.
inline CoeffModule complex_coefficients(const GroupSpec& group) {
    if (!group.is_elab()) throw Error(ErrorKind::Unsupported, "complex coefficients are set up for (C_p)^s");
    return CoeffModule::trivial(group, group.p() == 2 ? 4 : group.p());
}

/// Aut_eta(G) for the action encoded in a coefficient module.
inline std::vector<CompatAut> aut_eta(const GroupSpec& group, const CoeffModule& coeff) {
    std::vector<CompatAut> out;
    if (group.is_cyclic()) {
        const i64 n = group.n();
        for (i64 j = 1; j <= std::max<i64>(n - 1, 1); ++j) {
            if (num::gcd(j, n) != 1) continue;
            if (coeff.multiplier(static_cast<std::size_t>(j % n)) == coeff.multiplier(n > 1 ? 1 : 0)) out.emplace_back(CyclicAut{n, j});
        }
        return out;
    }
    if (group.is_elab()) {
        if (!coeff.is_trivial()) throw Error(ErrorKind::Unsupported, "Aut_eta for (C_p)^s with a nontrivial action");
        for (auto& m : general_linear_group(group.p(), group.s())) out.emplace_back(std::move(m));
        return out;
    }
    throw Error(ErrorKind::Unsupported, "automorphisms of general abelian groups");
}

struct OrbitPartition {
    /// Orbits sorted by least member; members sorted; the first member is the representative.
    std::vector<std::vector<ClassCoords>> orbits;
    /// witnesses[o][i] maps the class of orbits[o][0] to orbits[o][i] by pullback.
    std::vector<std::vector<CompatAut>> witnesses;

    [[nodiscard]] std::size_t count() const noexcept { return orbits.size(); }
};

/// Orbits of a (full) group of compatible automorphisms acting on H^2 by pullback.
inline OrbitPartition orbits(const CohGroup& h2, const std::vector<CompatAut>& auts) {
    OrbitPartition out;
    const auto all = h2.classes();
    std::map<ClassCoords, std::size_t> owner;
    for (const auto& c : all) {
        if (owner.contains(c)) continue;
        const auto rep = h2.representative(c);
        std::map<ClassCoords, CompatAut> members;
        for (const auto& psi : auts) {
            auto image = h2.coordinates(pullback(psi, rep));
            members.try_emplace(std::move(image), psi);
        }
        if (members.empty()) members.try_emplace(c, identity_aut(h2.group()));
        if (!members.contains(c)) throw Error(ErrorKind::InvalidParams, "automorphism list lacks the identity");
        const std::size_t id = out.orbits.size();
        out.orbits.emplace_back();
        out.witnesses.emplace_back();
        for (auto& [coords, psi] : members) {
            if (owner.contains(coords)) throw Error(ErrorKind::InvalidParams, "automorphism list is not a group");
            owner.emplace(coords, id);
            out.orbits.back().push_back(coords);
            out.witnesses.back().push_back(psi);
        }
    }
    return out;
}

}  // namespace xprod
