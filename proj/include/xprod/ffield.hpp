#pragma once

// Finite fields F_{q^r} in discrete-log form.
//
// A nonzero element is stored as its exponent e in Z/N (N = q^r - 1) relative
// to a fixed generator x0 of F_{q^r}^*. Multiplication, Frobenius and norms are
// then exponent arithmetic; addition goes through a Zech table
// zech[e] = log(1 + x0^e).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xprod/error.hpp"
#include "xprod/numeric.hpp"

namespace xprod {

inline constexpr i64 kDefaultFieldBound = i64{1} << 20;

class FieldElem {
public:
    constexpr FieldElem() = default;  // zero

    static constexpr FieldElem zero() noexcept { return FieldElem{}; }
    static constexpr FieldElem from_log(i64 e) noexcept { return FieldElem{e}; }

    [[nodiscard]] constexpr bool is_zero() const noexcept { return log_ < 0; }
    /// Exponent relative to x0; meaningless for zero.
    [[nodiscard]] constexpr i64 log() const noexcept { return log_; }

    constexpr auto operator<=>(const FieldElem&) const = default;

private:
    constexpr explicit FieldElem(i64 e) noexcept : log_(e) {}
    i64 log_ = -1;
};

/// Action sigma -> phi^k of C_n on F_{q^r}.
struct FrobAction {
    i64 n = 1;
    i64 k = 1;
    i64 r = 1;

    /// k | r and (r/k) | n.
    [[nodiscard]] constexpr bool valid() const noexcept { return n >= 1 && k >= 1 && r >= 1 && r % k == 0 && n % (r / k) == 0; }
    [[nodiscard]] constexpr bool trivial() const noexcept { return k == r; }
    /// Order r/k of eta(sigma); the kernel of the action has order n*k/r.
    [[nodiscard]] constexpr i64 action_order() const noexcept { return r / k; }
    [[nodiscard]] constexpr i64 kernel_order() const noexcept { return n * k / r; }

    void require_valid() const {
        if (!valid())
            throw Error(ErrorKind::InvalidAction, "need k | r and r/k | n (n=" + std::to_string(n) +
                                                      ", r=" + std::to_string(r) + ", k=" + std::to_string(k) + ")");
    }
};

struct FixedSubgroup {
    i64 generator_exponent;  // (q^r-1)/(q^k-1)
    i64 order;               // q^k - 1
};

class FieldTower {
public:
    [[nodiscard]] i64 q() const noexcept { return q_; }
    [[nodiscard]] i64 r() const noexcept { return r_; }
    [[nodiscard]] i64 size() const noexcept { return size_; }
    /// Order of the unit group.
    [[nodiscard]] i64 N() const noexcept { return size_ - 1; }
    /// Monic modulus, coefficients low to high (length r+1).
    [[nodiscard]] const std::vector<i64>& modulus() const noexcept { return modulus_; }
    /// x0 as a polynomial, coefficients low to high (length r).
    [[nodiscard]] std::vector<i64> generator_coeffs() const { return to_coeffs(generator_code_); }

    /// Elements are also addressable by their polynomial code sum c_i q^i.
    [[nodiscard]] i64 code_of(FieldElem a) const noexcept { return a.is_zero() ? 0 : exp_[static_cast<std::size_t>(a.log())]; }
    [[nodiscard]] FieldElem from_code(i64 code) const noexcept {
        return code == 0 ? FieldElem::zero() : FieldElem::from_log(log_[static_cast<std::size_t>(code)]);
    }
    [[nodiscard]] std::vector<i64> to_coeffs(i64 code) const {
        std::vector<i64> c(static_cast<std::size_t>(r_));
        for (auto& v : c) {
            v = code % q_;
            code /= q_;
        }
        return c;
    }

    [[nodiscard]] FieldElem one() const noexcept { return FieldElem::from_log(0); }
    [[nodiscard]] FieldElem x0() const noexcept { return FieldElem::from_log(num::mod(1, N())); }
    [[nodiscard]] FieldElem unit(i64 e) const noexcept { return FieldElem::from_log(num::mod(e, N())); }

    [[nodiscard]] FieldElem mul(FieldElem a, FieldElem b) const noexcept {
        if (a.is_zero() || b.is_zero()) return FieldElem::zero();
        return unit(a.log() + b.log());
    }
    [[nodiscard]] FieldElem inv(FieldElem a) const {
        if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "inverse of zero");
        return unit(-a.log());
    }
    [[nodiscard]] FieldElem add(FieldElem a, FieldElem b) const noexcept {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const i64 z = zech_[static_cast<std::size_t>(num::mod(b.log() - a.log(), N()))];
        return z < 0 ? FieldElem::zero() : unit(a.log() + z);
    }
    [[nodiscard]] FieldElem neg(FieldElem a) const noexcept { return a.is_zero() ? a : unit(a.log() + minus_one_log_); }
    [[nodiscard]] FieldElem sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

    /// a^(q^k); fixes exactly F_{q^gcd(k,r)}.
    [[nodiscard]] FieldElem frobenius(FieldElem a, i64 k) const noexcept {
        if (a.is_zero()) return a;
        return unit(num::mulmod(a.log(), frob_multiplier(k), N()));
    }
    /// q^k mod N: the action of phi^k on exponents.
    [[nodiscard]] i64 frob_multiplier(i64 k) const noexcept { return num::powmod(q_, num::mod(k, r_), N()); }

    /// prod_{i<n} sigma^i(a) for sigma = phi^k, computed as the literal product.
    [[nodiscard]] FieldElem norm_map(const FrobAction& act, FieldElem a) const {
        act.require_valid();
        if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "norm of zero");
        FieldElem acc = one();
        for (i64 i = 0; i < act.n; ++i) acc = mul(acc, frobenius(a, act.k * i));
        return acc;
    }

    [[nodiscard]] FixedSubgroup fixed_subgroup(const FrobAction& act) const {
        act.require_valid();
        const i64 qk = num::ipow(q_, static_cast<int>(act.k));
        return {N() / (qk - 1), qk - 1};
    }

    friend FieldTower make_tower(i64 q, i64 r, i64 bound);

private:
    i64 q_ = 2, r_ = 1, size_ = 2;
    i64 generator_code_ = 1;
    i64 minus_one_log_ = 0;
    std::vector<i64> modulus_;
    std::vector<i64> exp_;   // exponent -> code
    std::vector<i64> log_;   // code -> exponent (index 0 unused)
    std::vector<i64> zech_;  // exponent -> log(1 + x0^e), -1 for zero
};

namespace detail {

// Polynomial product modulo a monic modulus; codes are base-q digit strings.
inline std::vector<i64> polymulmod(const std::vector<i64>& a, const std::vector<i64>& b, const std::vector<i64>& modulus,
                                   i64 q) {
    const std::size_t r = modulus.size() - 1;
    std::vector<i64> prod(2 * r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
    for (std::size_t d = prod.size(); d-- > r;) {
        const i64 c = prod[d];
        if (c == 0) continue;
        for (std::size_t t = 0; t <= r; ++t) prod[d - r + t] = num::mod(prod[d - r + t] - c * modulus[t], q);
    }
    prod.resize(r);
    return prod;
}

inline i64 encode(const std::vector<i64>& c, i64 q) {
    i64 code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * q + c[i];
    return code;
}

inline std::vector<i64> decode(i64 code, i64 q, std::size_t len) {
    std::vector<i64> c(len);
    for (auto& v : c) {
        v = code % q;
        code /= q;
    }
    return c;
}

// Remainder of a modulo b over F_q (b monic).
inline std::vector<i64> polymod(std::vector<i64> a, const std::vector<i64>& b, i64 q) {
    const std::size_t db = b.size() - 1;
    for (std::size_t d = a.size(); d-- > db;) {
        const i64 c = a[d];
        if (c == 0) continue;
        for (std::size_t t = 0; t <= db; ++t) a[d - db + t] = num::mod(a[d - db + t] - c * b[t], q);
    }
    a.resize(db);
    return a;
}

/// Monic f of degree r is irreducible iff no monic factor of degree 1..r/2 divides it.
inline bool is_irreducible(const std::vector<i64>& f, i64 q) {
    const std::size_t r = f.size() - 1;
    for (std::size_t d = 1; 2 * d <= r; ++d) {
        const i64 count = num::ipow(q, static_cast<int>(d));
        for (i64 code = 0; code < count; ++code) {
            auto g = decode(code, q, d);
            g.push_back(1);
            const auto rem = polymod(f, g, q);
            if (std::all_of(rem.begin(), rem.end(), [](i64 v) { return v == 0; })) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Smallest monic irreducible modulus and smallest primitive element, both in code order.
inline FieldTower make_tower(i64 q, i64 r, i64 bound = kDefaultFieldBound) {
    if (!num::is_prime(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not prime");
    if (r < 1) throw Error(ErrorKind::InvalidParams, "extension degree must be positive");
    i64 size = 1;
    for (i64 i = 0; i < r; ++i) {
        size *= q;
        if (size > bound) throw Error(ErrorKind::TooLarge, "q^r exceeds the field bound " + std::to_string(bound));
    }

    FieldTower t;
    t.q_ = q;
    t.r_ = r;
    t.size_ = size;
    const auto ur = static_cast<std::size_t>(r);

    for (i64 code = 0; code < size; ++code) {
        auto f = detail::decode(code, q, ur);
        f.push_back(1);
        if (r == 1 || (f[0] != 0 && detail::is_irreducible(f, q))) {
            t.modulus_ = std::move(f);
            break;
        }
    }

    const i64 n_units = size - 1;
    const auto prime_divs = num::factorize(n_units);
    auto power = [&](const std::vector<i64>& base, i64 e) {
        std::vector<i64> result = detail::decode(1, q, ur);
        std::vector<i64> b = base;
        while (e > 0) {
            if (e & 1) result = detail::polymulmod(result, b, t.modulus_, q);
            b = detail::polymulmod(b, b, t.modulus_, q);
            e >>= 1;
        }
        return detail::encode(result, q);
    };
    for (i64 code = 1; code < size; ++code) {
        const auto g = detail::decode(code, q, ur);
        if (power(g, n_units) != 1) continue;
        bool primitive = true;
        for (const auto& [p, e] : prime_divs)
            if (power(g, n_units / p) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            t.generator_code_ = code;
            break;
        }
    }

    t.exp_.assign(static_cast<std::size_t>(n_units), 0);
    t.log_.assign(static_cast<std::size_t>(size), -1);
    std::vector<i64> cur = detail::decode(1, q, ur);
    const auto gen = detail::decode(t.generator_code_, q, ur);
    for (i64 e = 0; e < n_units; ++e) {
        const i64 c = detail::encode(cur, q);
        t.exp_[static_cast<std::size_t>(e)] = c;
        t.log_[static_cast<std::size_t>(c)] = e;
        cur = detail::polymulmod(cur, gen, t.modulus_, q);
    }

    auto add_codes = [&](i64 a, i64 b) {
        i64 out = 0, scale = 1;
        for (i64 i = 0; i < r; ++i) {
            out += ((a % q + b % q) % q) * scale;
            a /= q;
            b /= q;
            scale *= q;
        }
        return out;
    };
    t.zech_.assign(static_cast<std::size_t>(n_units), -1);
    for (i64 e = 0; e < n_units; ++e) {
        const i64 s = add_codes(1, t.exp_[static_cast<std::size_t>(e)]);
        t.zech_[static_cast<std::size_t>(e)] = s == 0 ? -1 : t.log_[static_cast<std::size_t>(s)];
    }
    t.minus_one_log_ = t.log_[static_cast<std::size_t>(q - 1)];
    return t;
}

/// Closed form of the norm on exponents: e * (nk/r) * (q^r-1)/(q^k-1) mod N.
inline i64 norm_exponent_closed_form(const FieldTower& t, const FrobAction& act, i64 e) {
    act.require_valid();
    const i64 qk = num::ipow(t.q(), static_cast<int>(act.k));
    return num::mulmod(num::mulmod(e, act.kernel_order(), t.N()), t.N() / (qk - 1), t.N());
}

}  // namespace xprod
