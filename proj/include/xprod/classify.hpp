#pragma once

// Closed-form classifiers: cyclic crossed products over F_{q^r} up to Hamming
// isometry, and twisted (C_p)^s algebras via alternating bicharacters.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xprod/cocycles.hpp"
#include "xprod/error.hpp"
#include "xprod/groups.hpp"
#include "xprod/numeric.hpp"

namespace xprod {

struct CyclicParams {
    i64 n = 1;
    i64 q = 2;
    i64 r = 1;
    i64 k = 1;

    [[nodiscard]] FrobAction action() const { return FrobAction{n, k, r}; }

    void require_valid() const {
        if (n < 1 || r < 1 || k < 1) throw Error(ErrorKind::InvalidParams, "n, r, k must be positive");
        if (!num::is_prime(q)) throw Error(ErrorKind::InvalidParams, std::to_string(q) + " is not prime");
        if (r % k != 0 || n % (r / k) != 0) throw Error(ErrorKind::InvalidParams, "need k | r and (r/k) | n");
    }
};

/// m = gcd(q^k - 1, nk/r).
inline i64 cyclic_class_modulus(const CyclicParams& p) {
    p.require_valid();
    return num::gcd(num::ipow(p.q, static_cast<int>(p.k)) - 1, p.n * p.k / p.r);
}

/// All (k, r) pairs with k | r and r/k | n, as k values for a fixed r.
inline std::vector<i64> valid_frobenius_exponents(i64 n, i64 r) {
    std::vector<i64> out;
    for (i64 k = 1; k <= r; ++k)
        if (r % k == 0 && n % (r / k) == 0) out.push_back(k);
    return out;
}

struct CyclicClassification {
    i64 m = 1;
    std::vector<std::vector<i64>> classes;  // members in 1..m, m standing for 0
    bool semisimple = true;
    bool classical = false;

    [[nodiscard]] std::size_t count() const noexcept { return classes.size(); }
};

inline bool is_semisimple_cyclic(const CyclicParams& p) {
    p.require_valid();
    return num::gcd(p.n * p.k / p.r, p.q) == 1;
}

/// Faithful action: nk = r.
inline bool is_classical_cyclic(const CyclicParams& p) {
    p.require_valid();
    return p.n * p.k == p.r;
}

/// {1..m} modulo a ~ b iff a j = b (mod m) for some j with gcd(j, n) = 1 and j = 1 (mod r/k).
inline CyclicClassification classify_cyclic(const CyclicParams& p) {
    CyclicClassification out;
    out.m = cyclic_class_modulus(p);
    out.semisimple = is_semisimple_cyclic(p);
    out.classical = is_classical_cyclic(p);
    const i64 m = out.m;
    const i64 ord = p.r / p.k;
    std::vector<i64> js;
    for (i64 j = 1; j <= std::max<i64>(p.n, 1); ++j)
        if (num::gcd(j, p.n) == 1 && num::mod(j - 1, ord) == 0) js.push_back(j);
    std::vector<bool> seen(static_cast<std::size_t>(m + 1), false);
    for (i64 a = 1; a <= m; ++a) {
        if (seen[static_cast<std::size_t>(a)]) continue;
        std::vector<i64> members;
        for (i64 j : js) {
            i64 b = num::mulmod(a, j, m);
            if (b == 0) b = m;
            if (!seen[static_cast<std::size_t>(b)]) {
                seen[static_cast<std::size_t>(b)] = true;
                members.push_back(b);
            }
        }
        std::sort(members.begin(), members.end());
        out.classes.push_back(std::move(members));
    }
    return out;
}

/// Alternating bicharacter on (C_p)^s as a zero-diagonal skew-symmetric matrix over F_p (row-major).
struct Bicharacter {
    i64 p = 2;
    i64 s = 1;
    std::vector<i64> matrix;

    [[nodiscard]] i64 at(std::size_t j, std::size_t l) const { return matrix[j * static_cast<std::size_t>(s) + l]; }
    bool operator==(const Bicharacter&) const = default;
};

inline bool is_alternating(const std::vector<i64>& m, i64 s, i64 p) {
    const auto n = static_cast<std::size_t>(s);
    if (m.size() != n * n) return false;
    for (std::size_t j = 0; j < n; ++j) {
        if (num::mod(m[j * n + j], p) != 0) return false;
        for (std::size_t l = 0; l < n; ++l)
            if (num::mod(m[j * n + l] + m[l * n + j], p) != 0) return false;
    }
    return true;
}

/// Bilinear cocycle f(g, h) = (N/p) * sum_{j<l} g_j M[j][l] h_l; its bicharacter is M.
inline CocycleTable bilinear_cocycle(const Bicharacter& b, const CoeffModule& coeff) {
    const auto group = GroupSpec::elab(b.p, b.s);
    if (coeff.multipliers().size() != group.rank() || !coeff.is_trivial()) throw Error(ErrorKind::InvalidParams, "need trivial (C_p)^s coefficients");
    const i64 N = coeff.N();
    if (N % b.p != 0) throw Error(ErrorKind::InvalidParams, "coefficients lack p-th roots of unity");
    if (!is_alternating(b.matrix, b.s, b.p)) throw Error(ErrorKind::NotAlternating, "matrix is not alternating");
    const auto s = static_cast<std::size_t>(b.s);
    CocycleTable f(group, coeff);
    for (std::size_t g = 0; g < group.order(); ++g) {
        const auto x = group.coords(g);
        for (std::size_t h = 0; h < group.order(); ++h) {
            const auto y = group.coords(h);
            i64 v = 0;
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t l = j + 1; l < s; ++l) v += x[j] * b.at(j, l) * y[l];
            f.at(g, h) = num::mulmod(num::mod(v, b.p), N / b.p, N);
        }
    }
    return f;
}

/// M[j][l] = log_zeta f(sigma_j, sigma_l) f(sigma_l, sigma_j)^{-1}.
inline Bicharacter bichar_from_cocycle(const CocycleTable& f) {
    const auto& group = f.group;
    if (!group.is_elab()) throw Error(ErrorKind::InvalidParams, "bicharacters are defined on (C_p)^s");
    if (!f.coeff.is_trivial()) throw Error(ErrorKind::InvalidAction, "bicharacters need a trivial action");
    const i64 p = group.p();
    const i64 N = f.N();
    const auto s = static_cast<std::size_t>(group.s());
    Bicharacter b{p, group.s(), std::vector<i64>(s * s, 0)};
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t l = 0; l < s; ++l) {
            const i64 d = num::mod(f(group.generator(j), group.generator(l)) - f(group.generator(l), group.generator(j)), N);
            if (d == 0) continue;
            if (N % p != 0 || d % (N / p) != 0) throw Error(ErrorKind::NotAlternating, "commutator value escapes mu_p");
            b.matrix[j * s + l] = d / (N / p);
        }
    return b;
}

/// Matrix of alpha_i: A[j][j+i] = 1, A[j+i][j] = -1 for j < i.
inline Bicharacter alpha_matrix(i64 p, i64 s, i64 i) {
    if (i < 0 || 2 * i > s) throw Error(ErrorKind::IndexOutOfRange, "need 0 <= i <= s/2");
    const auto n = static_cast<std::size_t>(s);
    Bicharacter b{p, s, std::vector<i64>(n * n, 0)};
    for (std::size_t j = 0; j < static_cast<std::size_t>(i); ++j) {
        b.matrix[j * n + j + static_cast<std::size_t>(i)] = 1;
        b.matrix[(j + static_cast<std::size_t>(i)) * n + j] = num::mod(-1, p);
    }
    return b;
}

/// P^T M P over F_p.
inline std::vector<i64> congruent_transform(const std::vector<i64>& m, const std::vector<i64>& change, i64 s, i64 p) {
    const auto n = static_cast<std::size_t>(s);
    std::vector<i64> mp(n * n, 0), out(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) mp[a * n + b] = num::mod(mp[a * n + b] + m[a * n + c] * change[c * n + b], p);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) out[a * n + b] = num::mod(out[a * n + b] + change[c * n + a] * mp[c * n + b], p);
    return out;
}

struct NormalForm {
    i64 i = 0;
    std::vector<i64> change_of_basis;  // columns are the new basis in old coordinates
};

/// Symplectic reduction: P with P^T M P = alpha_i and i = rank(M)/2.
inline NormalForm normal_form(const Bicharacter& b) {
    if (!is_alternating(b.matrix, b.s, b.p)) throw Error(ErrorKind::NotAlternating, "matrix is not alternating");
    const i64 p = b.p;
    const auto n = static_cast<std::size_t>(b.s);
    auto form = [&](const std::vector<i64>& u, const std::vector<i64>& v) {
        i64 acc = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c) acc = num::mod(acc + u[a] * b.matrix[a * n + c] * v[c], p);
        return acc;
    };
    std::vector<std::vector<i64>> pool;
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<i64> e(n, 0);
        e[a] = 1;
        pool.push_back(std::move(e));
    }
    std::vector<std::vector<i64>> firsts, seconds;
    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> pair;
        for (std::size_t a = 0; a < pool.size() && !pair; ++a)
            for (std::size_t c = a + 1; c < pool.size() && !pair; ++c)
                if (form(pool[a], pool[c]) != 0) pair = {a, c};
        if (!pair) break;
        auto u = pool[pair->first];
        auto v = pool[pair->second];
        const i64 scale = num::invmod(form(u, v), p);
        for (auto& x : v) x = num::mulmod(x, scale, p);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pair->second));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pair->first));
        for (auto& w : pool) {
            const i64 wv = form(w, v);
            const i64 wu = form(w, u);
            for (std::size_t a = 0; a < n; ++a) w[a] = num::mod(w[a] - wv * u[a] + wu * v[a], p);
        }
        firsts.push_back(std::move(u));
        seconds.push_back(std::move(v));
    }
    NormalForm out;
    out.i = static_cast<i64>(firsts.size());
    std::vector<std::vector<i64>> cols = firsts;
    cols.insert(cols.end(), seconds.begin(), seconds.end());
    cols.insert(cols.end(), pool.begin(), pool.end());
    out.change_of_basis.assign(n * n, 0);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t a = 0; a < n; ++a) out.change_of_basis[a * n + c] = cols[c][a];
    return out;
}

struct ElabClass {
    i64 i = 0;
    i64 radical_rank = 0;
    i64 matrix_size = 1;      // p^i
    i64 copies = 1;           // p^(s-2i) = |Rad|
    i64 irreducible_codes = 1;
    i64 total_codes_log2 = 0;  // two-sided ideal count is 2^copies

    [[nodiscard]] bool simple() const noexcept { return copies == 1; }
};

/// C^f * (C_p)^s for f of type alpha_i: p^(s-2i) copies of M_{p^i}(C).
inline ElabClass wedderburn(i64 i, i64 p, i64 s) {
    if (!num::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (s < 1 || i < 0 || 2 * i > s) throw Error(ErrorKind::IndexOutOfRange, "need 0 <= i <= s/2");
    ElabClass c;
    c.i = i;
    c.radical_rank = s - 2 * i;
    c.matrix_size = num::ipow(p, static_cast<int>(i));
    c.copies = num::ipow(p, static_cast<int>(s - 2 * i));
    c.irreducible_codes = c.copies;
    c.total_codes_log2 = c.copies;
    return c;
}

/// Isometry classes of F_{q^r}^f * (C_p)^s under the trivial action.
inline i64 count_elab_finite_field(i64 p, i64 s, i64 q, i64 r) {
    if (!num::is_prime(p) || !num::is_prime(q)) throw Error(ErrorKind::NotPrime, "p and q must be prime");
    if (s < 1 || r < 1) throw Error(ErrorKind::InvalidParams, "s and r must be positive");
    const i64 units = num::ipow(q, static_cast<int>(r)) - 1;
    if (num::gcd(p, units) == 1) return 1;
    return (3 * s) / 2 + 1;
}

struct ElabClassification {
    std::vector<i64> i_values;
    std::vector<ElabClass> wedderburn;
    i64 count = 0;
};

/// Complex classes (i = 0..s/2) with their Wedderburn data; with a field given, count follows the field.
inline ElabClassification classify_elab(i64 p, i64 s, std::optional<std::pair<i64, i64>> field = std::nullopt) {
    ElabClassification out;
    for (i64 i = 0; 2 * i <= s; ++i) {
        out.i_values.push_back(i);
        out.wedderburn.push_back(wedderburn(i, p, s));
    }
    out.count = field ? count_elab_finite_field(p, s, field->first, field->second) : static_cast<i64>(out.i_values.size());
    return out;
}

}  // namespace xprod
