#pragma once

// Normalized 2-cocycles G x G -> Z/N written additively.
//
// The coefficient group is a finite cyclic group Z/N (the unit group of
// F_{q^r} via discrete logs, or the roots of unity mu_N), with each standard
// generator of G acting by multiplication with a unit of Z/N.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xprod/error.hpp"
#include "xprod/ffield.hpp"
#include "xprod/groups.hpp"
#include "xprod/modlin.hpp"
#include "xprod/numeric.hpp"

namespace xprod {

class CoeffModule {
public:
    CoeffModule() = default;
    CoeffModule(const GroupSpec& group, i64 N, std::vector<i64> multipliers) : N_(N), multipliers_(std::move(multipliers)) {
        if (N < 1) throw Error(ErrorKind::InvalidParams, "coefficient order must be >= 1");
        if (multipliers_.size() != group.rank())
            throw Error(ErrorKind::InvalidParams, "need one action multiplier per cyclic factor");
        for (std::size_t i = 0; i < multipliers_.size(); ++i) {
            auto& m = multipliers_[i];
            m = num::mod(m, N_);
            if (num::gcd(m, N_) != 1) throw Error(ErrorKind::InvalidAction, "action multiplier is not a unit mod N");
            if (num::powmod(m, group.factors()[i], N_) != num::mod(1, N_))
                throw Error(ErrorKind::InvalidAction, "multiplier order does not divide the generator order");
        }
        element_mult_.resize(group.order());
        for (std::size_t g = 0; g < group.order(); ++g) {
            const auto c = group.coords(g);
            i64 m = num::mod(1, N_);
            for (std::size_t i = 0; i < c.size(); ++i) m = num::mulmod(m, num::powmod(multipliers_[i], c[i], N_), N_);
            element_mult_[g] = m;
        }
    }

    /// Trivial action on Z/N.
    static CoeffModule trivial(const GroupSpec& group, i64 N) {
        return CoeffModule(group, N, std::vector<i64>(group.rank(), 1));
    }

    /// F_{q^r}^* as a C_n-module under sigma -> phi^k.
    static CoeffModule field_units(const GroupSpec& group, const FieldTower& tower, const FrobAction& act) {
        act.require_valid();
        if (!group.is_cyclic() || group.n() != act.n) throw Error(ErrorKind::InvalidAction, "Frobenius action needs C_n");
        return CoeffModule(group, tower.N(), {tower.frob_multiplier(act.k)});
    }

    [[nodiscard]] i64 N() const noexcept { return N_; }
    [[nodiscard]] const std::vector<i64>& multipliers() const noexcept { return multipliers_; }
    /// Multiplier by which element g acts.
    [[nodiscard]] i64 multiplier(std::size_t g) const noexcept { return element_mult_[g]; }
    [[nodiscard]] i64 act(std::size_t g, i64 e) const noexcept { return num::mulmod(element_mult_[g], e, N_); }
    [[nodiscard]] bool is_trivial() const noexcept {
        return std::all_of(element_mult_.begin(), element_mult_.end(), [&](i64 m) { return m == num::mod(1, N_); });
    }

    bool operator==(const CoeffModule& o) const noexcept { return N_ == o.N_ && multipliers_ == o.multipliers_; }

private:
    i64 N_ = 1;
    std::vector<i64> multipliers_;
    std::vector<i64> element_mult_;
};

struct CocycleTable {
    GroupSpec group;
    CoeffModule coeff;
    std::vector<i64> table;  // |G| x |G| row-major, f(g, h) at g*|G| + h

    CocycleTable(GroupSpec g, CoeffModule c)
        : group(std::move(g)), coeff(std::move(c)), table(group.order() * group.order(), 0) {}

    [[nodiscard]] i64 operator()(std::size_t g, std::size_t h) const { return table[g * group.order() + h]; }
    i64& at(std::size_t g, std::size_t h) { return table[g * group.order() + h]; }
    [[nodiscard]] i64 N() const noexcept { return coeff.N(); }
};

struct Violation {
    enum class Kind { NotNormalized, CocycleCondition, OutOfRange };
    Kind kind;
    std::array<std::size_t, 3> where;  // (g, h, l); l unused unless CocycleCondition
};

/// Returns std::nullopt when f is a normalized 2-cocycle; otherwise the first violation.
inline std::optional<Violation> validate(const CocycleTable& f) {
    const std::size_t n = f.group.order();
    const i64 N = f.N();
    if (f.table.size() != n * n) return Violation{Violation::Kind::OutOfRange, {0, 0, 0}};
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (f(g, h) < 0 || f(g, h) >= N) return Violation{Violation::Kind::OutOfRange, {g, h, 0}};
    for (std::size_t g = 0; g < n; ++g) {
        if (f(g, 0) != 0) return Violation{Violation::Kind::NotNormalized, {g, 0, 0}};
        if (f(0, g) != 0) return Violation{Violation::Kind::NotNormalized, {0, g, 0}};
    }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            const std::size_t gh = f.group.op(g, h);
            for (std::size_t l = 0; l < n; ++l) {
                const i64 v = f.coeff.act(g, f(h, l)) - f(gh, l) + f(g, f.group.op(h, l)) - f(g, h);
                if (num::mod(v, N) != 0) return Violation{Violation::Kind::CocycleCondition, {g, h, l}};
            }
        }
    return std::nullopt;
}

inline bool is_cocycle(const CocycleTable& f) { return !validate(f).has_value(); }

/// (sigma^l, sigma^j) -> 0 if l + j < n, beta if l + j >= n.
inline CocycleTable standard_cocycle(i64 n, const CoeffModule& coeff, i64 beta_exp) {
    auto group = GroupSpec::cyclic(n);
    const i64 beta = num::mod(beta_exp, coeff.N());
    if (n == 1 && beta != 0) throw Error(ErrorKind::InvalidParams, "on C_1, u_sigma = u_e forces beta = 0");
    if (num::mulmod(coeff.multipliers().front(), beta, coeff.N()) != beta)
        throw Error(ErrorKind::NotInvariant, "beta exponent " + std::to_string(beta_exp) + " is not fixed by the action");
    CocycleTable f(group, coeff);
    for (i64 l = 0; l < n; ++l)
        for (i64 j = 0; j < n; ++j)
            if (l + j >= n) f.at(static_cast<std::size_t>(l), static_cast<std::size_t>(j)) = beta;
    return f;
}

/// beta_f = sum_i f(sigma^i, sigma); u_sigma^n = beta_f.
inline i64 beta_of(const CocycleTable& f) {
    if (!f.group.is_cyclic()) throw Error(ErrorKind::NotCyclic, "beta_f needs a cyclic group");
    const std::size_t n = f.group.order();
    const std::size_t sigma = n > 1 ? 1 : 0;
    i64 acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc = num::mod(acc + f(i, sigma), f.N());
    return acc;
}

/// psi compatible with the coefficient action: g and psi(g) act identically.
inline bool is_compatible(const CompatAut& psi, const CocycleTable& f) {
    for (std::size_t g = 0; g < f.group.order(); ++g)
        if (f.coeff.multiplier(apply_aut(psi, f.group, g)) != f.coeff.multiplier(g)) return false;
    return true;
}

/// (g, h) -> f(psi(g), psi(h)).
inline CocycleTable pullback(const CompatAut& psi, const CocycleTable& f) {
    if (!is_compatible(psi, f)) throw Error(ErrorKind::Incompatible, "automorphism does not commute with the action");
    const std::size_t n = f.group.order();
    std::vector<std::size_t> image(n);
    for (std::size_t g = 0; g < n; ++g) image[g] = apply_aut(psi, f.group, g);
    CocycleTable out(f.group, f.coeff);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) out.at(g, h) = f(image[g], image[h]);
    return out;
}

/// (delta r)(g, h) = r_g + g.r_h - r_{gh}; r indexed by group element with r_e = 0.
inline CocycleTable coboundary(const GroupSpec& group, const CoeffModule& coeff, const std::vector<i64>& r) {
    CocycleTable out(group, coeff);
    const std::size_t n = group.order();
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            out.at(g, h) = num::mod(r[g] + coeff.act(g, r[h]) - r[group.op(g, h)], coeff.N());
    return out;
}

inline CocycleTable add(const CocycleTable& a, const CocycleTable& b) {
    CocycleTable out = a;
    for (std::size_t i = 0; i < out.table.size(); ++i) out.table[i] = num::mod(a.table[i] + b.table[i], a.N());
    return out;
}

inline CocycleTable sub(const CocycleTable& a, const CocycleTable& b) {
    CocycleTable out = a;
    for (std::size_t i = 0; i < out.table.size(); ++i) out.table[i] = num::mod(a.table[i] - b.table[i], a.N());
    return out;
}

namespace detail {

// Normalized cochains: C^1 coordinates are g = 1..|G|-1, C^2 coordinates are
// pairs (g, h) of non-identity elements in row-major order.
inline std::size_t c2_index(std::size_t n, std::size_t g, std::size_t h) { return (g - 1) * (n - 1) + (h - 1); }

inline std::vector<i64> c2_vector(const CocycleTable& f) {
    const std::size_t n = f.group.order();
    std::vector<i64> v;
    v.reserve((n - 1) * (n - 1));
    for (std::size_t g = 1; g < n; ++g)
        for (std::size_t h = 1; h < n; ++h) v.push_back(f(g, h));
    return v;
}

inline CocycleTable from_c2_vector(const GroupSpec& group, const CoeffModule& coeff, const std::vector<i64>& v) {
    CocycleTable f(group, coeff);
    const std::size_t n = group.order();
    for (std::size_t g = 1; g < n; ++g)
        for (std::size_t h = 1; h < n; ++h) f.at(g, h) = num::mod(v[c2_index(n, g, h)], coeff.N());
    return f;
}

}  // namespace detail

/// delta^1 on normalized cochains: rows are C^2 coordinates, columns C^1 coordinates.
inline modlin::ModMatrix delta1_matrix(const GroupSpec& group, const CoeffModule& coeff) {
    const std::size_t n = group.order();
    modlin::ModMatrix m((n - 1) * (n - 1), n - 1, coeff.N());
    for (std::size_t g = 1; g < n; ++g)
        for (std::size_t h = 1; h < n; ++h) {
            const std::size_t row = detail::c2_index(n, g, h);
            m.add(row, g - 1, 1);
            m.add(row, h - 1, coeff.multiplier(g));
            const std::size_t gh = group.op(g, h);
            if (gh != 0) m.add(row, gh - 1, -1);
        }
    return m;
}

/// delta^2 on normalized cochains: rows are triples of non-identity elements.
inline modlin::ModMatrix delta2_matrix(const GroupSpec& group, const CoeffModule& coeff) {
    const std::size_t n = group.order();
    const std::size_t m1 = n - 1;
    modlin::ModMatrix m(m1 * m1 * m1, m1 * m1, coeff.N());
    for (std::size_t g = 1; g < n; ++g)
        for (std::size_t h = 1; h < n; ++h)
            for (std::size_t l = 1; l < n; ++l) {
                const std::size_t row = ((g - 1) * m1 + (h - 1)) * m1 + (l - 1);
                m.add(row, detail::c2_index(n, h, l), coeff.multiplier(g));
                const std::size_t gh = group.op(g, h);
                if (gh != 0) m.add(row, detail::c2_index(n, gh, l), -1);
                const std::size_t hl = group.op(h, l);
                if (hl != 0) m.add(row, detail::c2_index(n, g, hl), 1);
                m.add(row, detail::c2_index(n, g, h), -1);
            }
    return m;
}

/// Exponents r_g (r_e = 0) with delta r = f1 - f2.
struct CoboundaryWitness {
    std::vector<i64> r;
};

/// Solves delta r = b over Z/N for a fixed (group, module); reusable across right-hand sides.
class CoboundarySolver {
public:
    CoboundarySolver(const GroupSpec& group, const CoeffModule& coeff)
        : group_(group), coeff_(coeff), solver_(delta1_matrix(group, coeff)) {}

    [[nodiscard]] std::optional<CoboundaryWitness> solve(const CocycleTable& f1, const CocycleTable& f2) const {
        if (!(f1.group == group_) || !(f2.group == group_) || !(f1.coeff == coeff_) || !(f2.coeff == coeff_))
            throw Error(ErrorKind::InvalidParams, "cocycles live on different groups or modules");
        const auto rhs = detail::c2_vector(sub(f1, f2));
        if (group_.order() == 1) return CoboundaryWitness{{0}};
        auto x = solver_.solve(rhs);
        if (!x) return std::nullopt;
        CoboundaryWitness w;
        w.r.assign(group_.order(), 0);
        for (std::size_t g = 1; g < group_.order(); ++g) w.r[g] = (*x)[g - 1];
        return w;
    }

private:
    GroupSpec group_;
    CoeffModule coeff_;
    modlin::LinearSolver solver_;
};

inline std::optional<CoboundaryWitness> cohomologous(const CocycleTable& f1, const CocycleTable& f2) {
    return CoboundarySolver(f1.group, f1.coeff).solve(f1, f2);
}

}  // namespace xprod
