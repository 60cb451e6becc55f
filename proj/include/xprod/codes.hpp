#pragma once

// Ideal codes of a crossed product: enumeration, minimum distance and
// semisimplicity diagnostics.
//
// Ideals are left F_{q^r}-subspaces of F_{q^r}^|G| closed under the ring
// action; each is kept in reduced row echelon form, which doubles as its
// canonical key. Enumeration closes every cyclic ideal R*G.a (a monic) and
// then takes sums until the set is closed.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xprod/crossring.hpp"
#include "xprod/error.hpp"
#include "xprod/ffield.hpp"
#include "xprod/numeric.hpp"

namespace xprod {

inline constexpr std::size_t kDefaultMaxRingElements = std::size_t{1} << 16;

/// A subspace of F^n over the field of a tower, in reduced row echelon form.
class Subspace {
public:
    Subspace(const FieldTower* tower, std::size_t n) : tower_(tower), n_(n) {}

    [[nodiscard]] std::size_t dim() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t length() const noexcept { return n_; }
    [[nodiscard]] const std::vector<std::vector<FieldElem>>& rows() const noexcept { return rows_; }

    [[nodiscard]] std::vector<FieldElem> reduce(std::vector<FieldElem> v) const {
        const auto& t = *tower_;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto c = v[pivots_[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) v[j] = t.sub(v[j], t.mul(c, rows_[i][j]));
        }
        return v;
    }

    [[nodiscard]] bool contains(const std::vector<FieldElem>& v) const {
        const auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](FieldElem c) { return c.is_zero(); });
    }

    /// Adds v to the span; returns false when v was already in it.
    bool insert(const std::vector<FieldElem>& v) {
        const auto& t = *tower_;
        auto r = reduce(v);
        std::size_t p = 0;
        while (p < n_ && r[p].is_zero()) ++p;
        if (p == n_) return false;
        const auto inv = t.inv(r[p]);
        for (auto& c : r) c = t.mul(c, inv);
        for (auto& row : rows_) {
            const auto c = row[p];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) row[j] = t.sub(row[j], t.mul(c, r[j]));
        }
        const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
        return true;
    }

    [[nodiscard]] Subspace sum(const Subspace& other) const {
        Subspace s = *this;
        for (const auto& row : other.rows_) s.insert(row);
        return s;
    }

    /// Canonical key: pivot-ordered RREF rows as field codes.
    [[nodiscard]] std::vector<i64> key() const {
        std::vector<i64> k;
        k.reserve(rows_.size() * n_);
        for (const auto& row : rows_)
            for (const auto& c : row) k.push_back(tower_->code_of(c));
        return k;
    }

    bool operator==(const Subspace& o) const { return key() == o.key(); }

private:
    const FieldTower* tower_;
    std::size_t n_;
    std::vector<std::vector<FieldElem>> rows_;
    std::vector<std::size_t> pivots_;
};

enum class Sidedness { Left, TwoSided };

struct Code {
    std::vector<RingElem> basis;
    std::size_t rank = 0;
    std::optional<std::size_t> min_distance;  // empty for the zero code
    std::vector<i64> key;
};

namespace detail {

inline std::vector<FieldElem> as_vector(const RingElem& a) { return a.coeffs; }
inline RingElem as_elem(const std::vector<FieldElem>& v) { return RingElem{v}; }

inline std::optional<std::size_t> min_distance(const FieldTower& t, const Subspace& s) {
    const std::size_t k = s.dim();
    if (k == 0) return std::nullopt;
    const std::size_t n = s.length();
    const auto Q = static_cast<std::size_t>(t.size());
    std::size_t best = n;
    // Codewords whose first nonzero combination coefficient is 1 cover every weight.
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::size_t tail = 1;
        for (std::size_t i = lead + 1; i < k; ++i) tail *= Q;
        for (std::size_t code = 0; code < tail; ++code) {
            std::vector<FieldElem> w = s.rows()[lead];
            std::size_t c = code;
            for (std::size_t i = lead + 1; i < k; ++i) {
                const auto coef = t.from_code(static_cast<i64>(c % Q));
                c /= Q;
                if (coef.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) w[j] = t.add(w[j], t.mul(coef, s.rows()[i][j]));
            }
            std::size_t wt = 0;
            for (const auto& x : w) wt += x.is_zero() ? 0 : 1;
            best = std::min(best, wt);
            if (best == 1) return best;
        }
    }
    return best;
}

}  // namespace detail

/// Smallest ideal (of the given sidedness) containing the seed elements.
inline Subspace ideal_closure(const CrossedRing& ring, const std::vector<RingElem>& seeds, Sidedness side) {
    const auto& t = ring.tower();
    std::vector<RingElem> gens;
    for (std::size_t i = 0; i < ring.group().rank(); ++i) gens.push_back(ring.basis(ring.group().generator(i)));
    Subspace s(&t, ring.dim());
    std::vector<RingElem> queue;
    for (const auto& a : seeds)
        if (s.insert(a.coeffs)) queue.push_back(a);
    const auto x0 = ring.monomial(t.x0(), 0);
    while (!queue.empty()) {
        const auto v = queue.back();
        queue.pop_back();
        auto push = [&](RingElem w) {
            if (s.insert(w.coeffs)) queue.push_back(std::move(w));
        };
        for (const auto& u : gens) push(ring.multiply(u, v));
        if (side == Sidedness::TwoSided) {
            for (const auto& u : gens) push(ring.multiply(v, u));
            push(ring.multiply(v, x0));
        }
    }
    return s;
}

/// All ideals, sorted by rank and then by canonical basis.
inline std::vector<Code> enumerate_codes(const CrossedRing& ring, Sidedness side = Sidedness::Left,
                                         std::size_t max_elements = kDefaultMaxRingElements) {
    const auto card = ring.cardinality();
    if (!card || *card > max_elements)
        throw Error(ErrorKind::TooLarge, "ring has more than " + std::to_string(max_elements) + " elements");
    const auto& t = ring.tower();

    std::map<std::vector<i64>, Subspace> found;
    Subspace zero(&t, ring.dim());
    found.emplace(zero.key(), zero);
    for (std::size_t code = 1; code < *card; ++code) {
        const auto a = ring.decode(code);
        const auto lead = std::find_if(a.coeffs.begin(), a.coeffs.end(), [](FieldElem c) { return !c.is_zero(); });
        if (lead->log() != 0) continue;  // scalar multiples generate the same ideal
        auto s = ideal_closure(ring, {a}, side);
        auto key = s.key();
        found.try_emplace(std::move(key), std::move(s));
    }

    std::vector<Subspace> all;
    for (auto& [k, s] : found) all.push_back(s);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            auto s = all[i].sum(all[j]);
            auto key = s.key();
            if (found.try_emplace(key, s).second) all.push_back(std::move(s));
        }

    std::vector<Code> out;
    for (const auto& [key, s] : found) {
        Code c;
        for (const auto& row : s.rows()) c.basis.push_back(detail::as_elem(row));
        c.rank = s.dim();
        c.min_distance = detail::min_distance(t, s);
        c.key = key;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Code& a, const Code& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.key < b.key;
    });
    return out;
}

/// Every code has a complementary code with trivial intersection spanning the ring.
inline bool every_code_complemented(const CrossedRing& ring, const std::vector<Code>& codes) {
    const auto& t = ring.tower();
    auto span = [&](const Code& c) {
        Subspace s(&t, ring.dim());
        for (const auto& b : c.basis) s.insert(b.coeffs);
        return s;
    };
    std::vector<Subspace> spaces;
    for (const auto& c : codes) spaces.push_back(span(c));
    for (const auto& a : spaces) {
        bool ok = false;
        for (const auto& b : spaces)
            if (a.dim() + b.dim() == ring.dim() && a.sum(b).dim() == ring.dim()) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

struct SemisimpleReport {
    bool semisimple = false;           // closed form: the action kernel is a q'-group
    std::optional<bool> empirical;     // every left ideal has a complement
    bool classical = false;            // faithful action
    i64 kernel_order = 1;
    std::string diagnosis;
};

/// gcd(|ker eta|, q) = 1 (for C_n under phi^k: gcd(nk/r, q) = 1), cross-checked by enumeration when feasible.
inline SemisimpleReport is_semisimple(const CrossedRing& ring, std::size_t max_elements = kDefaultMaxRingElements) {
    SemisimpleReport rep;
    rep.kernel_order = static_cast<i64>(ring.kernel_order());
    rep.semisimple = num::gcd(rep.kernel_order, ring.tower().q()) == 1;
    rep.classical = rep.kernel_order == 1;
    const auto card = ring.cardinality();
    if (card && *card <= max_elements) rep.empirical = every_code_complemented(ring, enumerate_codes(ring, Sidedness::Left, max_elements));
    rep.diagnosis = "kernel of the action has order " + std::to_string(rep.kernel_order) + "; characteristic " +
                    std::to_string(ring.tower().q()) + (rep.semisimple ? " does not divide it" : " divides it");
    if (rep.classical) rep.diagnosis += "; faithful action (classical crossed product)";
    return rep;
}

}  // namespace xprod
