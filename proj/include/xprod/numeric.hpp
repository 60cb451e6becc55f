#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "xprod/error.hpp"

namespace xprod {

using i64 = std::int64_t;

namespace num {

/// Non-negative residue of a modulo m (m >= 1).
constexpr i64 mod(i64 a, i64 m) noexcept {
    const i64 r = a % m;
    return r < 0 ? r + m : r;
}

constexpr i64 mulmod(i64 a, i64 b, i64 m) noexcept {
    return static_cast<i64>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

constexpr i64 powmod(i64 base, i64 exp, i64 m) noexcept {
    if (m == 1) return 0;
    i64 result = 1;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

constexpr i64 ipow(i64 base, int exp) noexcept {
    i64 result = 1;
    for (int i = 0; i < exp; ++i) result *= base;
    return result;
}

constexpr i64 gcd(i64 a, i64 b) noexcept { return std::gcd(a, b); }

struct ExtGcd {
    i64 g, x, y;  // x*a + y*b = g
};

/// Extended Euclid on non-negative inputs.
constexpr ExtGcd ext_gcd(i64 a, i64 b) noexcept {
    i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const i64 q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    return {old_r, old_s, old_t};
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline i64 invmod(i64 a, i64 m) {
    if (m == 1) return 0;
    const auto e = ext_gcd(mod(a, m), m);
    if (e.g != 1) throw Error(ErrorKind::InvalidParams, "element not invertible modulo " + std::to_string(m));
    return mod(e.x, m);
}

constexpr bool is_prime(i64 n) noexcept {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline i64 totient(i64 n) {
    i64 result = n;
    for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> out;
    for (i64 d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

/// If n is a prime power p^e (e >= 1) returns {p, e}; otherwise {0, 0}.
inline std::pair<i64, int> prime_power(i64 n) {
    const auto f = factorize(n);
    if (f.size() != 1) return {0, 0};
    return f.front();
}

/// Canonical invariant factors d_1 | d_2 | ... of the product of Z/c_i (orders <= 1 ignored).
inline std::vector<i64> invariant_factors(const std::vector<i64>& cyclic_orders) {
    std::map<i64, std::vector<i64>> powers;  // prime -> prime powers
    for (i64 c : cyclic_orders) {
        if (c <= 1) continue;
        for (const auto& [p, e] : factorize(c)) powers[p].push_back(ipow(p, e));
    }
    std::size_t len = 0;
    for (auto& [p, v] : powers) {
        std::sort(v.begin(), v.end(), std::greater<>());
        len = std::max(len, v.size());
    }
    std::vector<i64> out(len, 1);
    for (const auto& [p, v] : powers)
        for (std::size_t i = 0; i < v.size(); ++i) out[len - 1 - i] *= v[i];
    return out;
}

}  // namespace num
}  // namespace xprod
