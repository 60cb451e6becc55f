#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "xprod/error.hpp"
#include "xprod/ffield.hpp"
#include "xprod/numeric.hpp"

namespace xprod {

inline constexpr std::size_t kMaxRingGroupOrder = 64;
inline constexpr std::size_t kMaxClassifyGroupOrder = 4096;

/// A finite abelian group given as a product of cyclic factors.
///
/// Elements are indexed 0..|G|-1 by their coordinate vectors in mixed radix
/// with the first coordinate most significant (lexicographic order); for a
/// cyclic group index i is sigma^i. Index 0 is the identity.
class GroupSpec {
public:
    enum class Kind { Cyclic, Elab, Abelian };

    static GroupSpec cyclic(i64 n) {
        if (n < 1) throw Error(ErrorKind::InvalidParams, "cyclic group order must be >= 1");
        return GroupSpec(Kind::Cyclic, {n});
    }
    static GroupSpec elab(i64 p, i64 s) {
        if (!num::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
        if (s < 1) throw Error(ErrorKind::InvalidParams, "rank must be >= 1");
        return GroupSpec(Kind::Elab, std::vector<i64>(static_cast<std::size_t>(s), p));
    }
    static GroupSpec abelian(std::vector<i64> factors) {
        if (factors.empty()) factors.push_back(1);
        for (i64 f : factors)
            if (f < 1) throw Error(ErrorKind::InvalidParams, "cyclic factor orders must be >= 1");
        return GroupSpec(Kind::Abelian, std::move(factors));
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<i64>& factors() const noexcept { return factors_; }
    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] std::size_t rank() const noexcept { return factors_.size(); }
    [[nodiscard]] bool is_cyclic() const noexcept { return kind_ == Kind::Cyclic; }
    [[nodiscard]] bool is_elab() const noexcept { return kind_ == Kind::Elab; }
    /// n for cyclic, p for elab.
    [[nodiscard]] i64 n() const noexcept { return factors_.front(); }
    [[nodiscard]] i64 p() const noexcept { return factors_.front(); }
    [[nodiscard]] i64 s() const noexcept { return static_cast<i64>(factors_.size()); }

    [[nodiscard]] std::vector<i64> coords(std::size_t g) const {
        std::vector<i64> c(factors_.size());
        auto rem = static_cast<i64>(g);
        for (std::size_t i = factors_.size(); i-- > 0;) {
            c[i] = rem % factors_[i];
            rem /= factors_[i];
        }
        return c;
    }
    [[nodiscard]] std::size_t index(const std::vector<i64>& c) const {
        i64 idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + num::mod(c[i], factors_[i]);
        return static_cast<std::size_t>(idx);
    }
    /// Index of the i-th standard generator (sigma_i).
    [[nodiscard]] std::size_t generator(std::size_t i) const {
        std::vector<i64> c(factors_.size(), 0);
        c[i] = 1;
        return index(c);
    }

    [[nodiscard]] std::size_t op(std::size_t g, std::size_t h) const {
        if (!mul_.empty()) return mul_[g * order_ + h];
        return add_coords(g, h);
    }
    [[nodiscard]] std::size_t inverse(std::size_t g) const { return inv_[g]; }
    [[nodiscard]] static constexpr std::size_t identity() noexcept { return 0; }

    [[nodiscard]] std::string describe() const {
        switch (kind_) {
        case Kind::Cyclic: return "C_" + std::to_string(n());
        case Kind::Elab: return "(C_" + std::to_string(p()) + ")^" + std::to_string(s());
        case Kind::Abelian: {
            std::string out;
            for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? " x C_" : "C_") + std::to_string(factors_[i]);
            return out;
        }
        }
        return "?";
    }

    bool operator==(const GroupSpec& o) const noexcept { return factors_ == o.factors_; }

private:
    GroupSpec(Kind kind, std::vector<i64> factors) : kind_(kind), factors_(std::move(factors)) {
        i64 ord = 1;
        for (i64 f : factors_) {
            ord *= f;
            if (ord > static_cast<i64>(kMaxClassifyGroupOrder))
                throw Error(ErrorKind::TooLarge, "group order exceeds " + std::to_string(kMaxClassifyGroupOrder));
        }
        order_ = static_cast<std::size_t>(ord);
        inv_.resize(order_);
        for (std::size_t g = 0; g < order_; ++g) {
            auto ci = coords(g);
            for (auto& v : ci) v = -v;
            inv_[g] = index(ci);
        }
        if (order_ <= kTableLimit) {
            mul_.resize(order_ * order_);
            for (std::size_t g = 0; g < order_; ++g)
                for (std::size_t h = 0; h < order_; ++h) mul_[g * order_ + h] = add_coords(g, h);
        }
    }

    std::size_t add_coords(std::size_t g, std::size_t h) const {
        std::size_t out = 0, scale = 1;
        for (std::size_t i = factors_.size(); i-- > 0;) {
            const auto f = static_cast<std::size_t>(factors_[i]);
            out += ((g % f + h % f) % f) * scale;
            g /= f;
            h /= f;
            scale *= f;
        }
        return out;
    }

    static constexpr std::size_t kTableLimit = 256;

    Kind kind_;
    std::vector<i64> factors_;
    std::size_t order_ = 1;
    std::vector<std::size_t> mul_;
    std::vector<std::size_t> inv_;
};

/// psi_j : sigma^i -> sigma^(ij) on C_n.
struct CyclicAut {
    i64 n;
    i64 j;
    bool operator==(const CyclicAut&) const = default;
};

/// v -> M v on (C_p)^s; matrix row-major s x s over F_p.
struct LinearAut {
    i64 p;
    i64 s;
    std::vector<i64> matrix;
    bool operator==(const LinearAut&) const = default;
};

using CompatAut = std::variant<CyclicAut, LinearAut>;

inline std::size_t apply_aut(const CompatAut& a, const GroupSpec& group, std::size_t g) {
    if (const auto* c = std::get_if<CyclicAut>(&a)) {
        if (!group.is_cyclic() || group.n() != c->n) throw Error(ErrorKind::InvalidParams, "automorphism/group mismatch");
        return static_cast<std::size_t>(num::mulmod(static_cast<i64>(g), c->j, c->n));
    }
    const auto& l = std::get<LinearAut>(a);
    if (!group.is_elab() || group.p() != l.p || group.s() != l.s)
        throw Error(ErrorKind::InvalidParams, "automorphism/group mismatch");
    const auto v = group.coords(g);
    std::vector<i64> w(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t k = 0; k < v.size(); ++k) w[i] = (w[i] + l.matrix[i * v.size() + k] * v[k]) % l.p;
    return group.index(w);
}

inline CompatAut identity_aut(const GroupSpec& group) {
    if (group.is_cyclic()) return CyclicAut{group.n(), 1};
    if (group.is_elab()) {
        const auto s = static_cast<std::size_t>(group.s());
        std::vector<i64> m(s * s, 0);
        for (std::size_t i = 0; i < s; ++i) m[i * s + i] = 1;
        return LinearAut{group.p(), group.s(), std::move(m)};
    }
    throw Error(ErrorKind::Unsupported, "automorphisms of general abelian groups");
}

/// All j in 1..n-1 (j = 1 when n = 1) with gcd(j, n) = 1 and j = 1 mod r/k.
inline std::vector<CompatAut> aut_eta_cyclic(i64 n, const FrobAction& act) {
    if (!act.valid() || act.n != n) throw Error(ErrorKind::InvalidAction, "action is not a valid C_" + std::to_string(n) + " action");
    std::vector<CompatAut> out;
    const i64 ord = act.action_order();
    for (i64 j = 1; j <= std::max<i64>(n - 1, 1); ++j)
        if (num::gcd(j, n) == 1 && num::mod(j - 1, ord) == 0) out.emplace_back(CyclicAut{n, j});
    return out;
}

inline i64 det_mod_p(std::vector<i64> m, std::size_t s, i64 p) {
    i64 det = 1;
    for (std::size_t c = 0; c < s; ++c) {
        std::size_t piv = s;
        for (std::size_t r = c; r < s; ++r)
            if (m[r * s + c] % p != 0) {
                piv = r;
                break;
            }
        if (piv == s) return 0;
        if (piv != c) {
            for (std::size_t k = 0; k < s; ++k) std::swap(m[c * s + k], m[piv * s + k]);
            det = num::mod(-det, p);
        }
        const i64 pv = num::mod(m[c * s + c], p);
        det = num::mulmod(det, pv, p);
        const i64 inv = num::invmod(pv, p);
        for (std::size_t r = c + 1; r < s; ++r) {
            const i64 f = num::mulmod(m[r * s + c], inv, p);
            if (f == 0) continue;
            for (std::size_t k = c; k < s; ++k) m[r * s + k] = num::mod(m[r * s + k] - f * m[c * s + k], p);
        }
    }
    return det;
}

/// Every invertible s x s matrix over F_p, in lexicographic order of entries.
inline std::vector<LinearAut> general_linear_group(i64 p, i64 s) {
    const auto ss = static_cast<std::size_t>(s * s);
    const i64 total = num::ipow(p, static_cast<int>(ss));
    if (total > (i64{1} << 20)) throw Error(ErrorKind::TooLarge, "GL enumeration too large");
    std::vector<LinearAut> out;
    std::vector<i64> m(ss, 0);
    for (i64 code = 0; code < total; ++code) {
        i64 c = code;
        for (std::size_t i = ss; i-- > 0;) {
            m[i] = c % p;
            c /= p;
        }
        if (det_mod_p(m, static_cast<std::size_t>(s), p) != 0) out.push_back(LinearAut{p, s, m});
    }
    return out;
}

}  // namespace xprod
