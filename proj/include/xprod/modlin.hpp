#pragma once

// Linear algebra over Z/N for composite N.
//
// Z/N is not a field, so plain Gaussian elimination is unsound. We diagonalise
// A as R*A*C = D with R, C invertible over Z/N using unimodular 2x2 gcd
// transforms (Smith-style, without enforcing the divisibility chain), and read
// kernels, cokernels and solutions off D.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "xprod/numeric.hpp"

namespace xprod::modlin {

class ModMatrix {
public:
    ModMatrix() = default;
    ModMatrix(std::size_t rows, std::size_t cols, i64 modulus)
        : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {}

    static ModMatrix identity(std::size_t n, i64 modulus) {
        ModMatrix m(n, n, modulus);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = num::mod(1, modulus);
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] i64 modulus() const noexcept { return modulus_; }

    i64& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] i64 at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Adds v (reduced) to entry (r, c).
    void add(std::size_t r, std::size_t c, i64 v) { at(r, c) = num::mod(at(r, c) + v, modulus_); }

    /// this <- E * this on rows i, j where E = [[a, b], [c, d]].
    void row_mix(std::size_t i, std::size_t j, i64 a, i64 b, i64 c, i64 d) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const i64 x = at(i, k), y = at(j, k);
            at(i, k) = num::mod(num::mulmod(a, x, modulus_) + num::mulmod(b, y, modulus_), modulus_);
            at(j, k) = num::mod(num::mulmod(c, x, modulus_) + num::mulmod(d, y, modulus_), modulus_);
        }
    }

    /// this <- this * F on columns i, j where F restricted to (i, j) is [[a, b], [c, d]].
    void col_mix(std::size_t i, std::size_t j, i64 a, i64 b, i64 c, i64 d) {
        for (std::size_t k = 0; k < rows_; ++k) {
            const i64 x = at(k, i), y = at(k, j);
            at(k, i) = num::mod(num::mulmod(x, a, modulus_) + num::mulmod(y, c, modulus_), modulus_);
            at(k, j) = num::mod(num::mulmod(x, b, modulus_) + num::mulmod(y, d, modulus_), modulus_);
        }
    }

    [[nodiscard]] std::vector<i64> apply(std::span<const i64> x) const {
        std::vector<i64> y(rows_, 0);
        for (std::size_t r = 0; r < rows_; ++r) {
            i64 acc = 0;
            for (std::size_t c = 0; c < cols_; ++c) acc = num::mod(acc + num::mulmod(at(r, c), x[c], modulus_), modulus_);
            y[r] = acc;
        }
        return y;
    }

    [[nodiscard]] std::vector<i64> column(std::size_t c) const {
        std::vector<i64> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    i64 modulus_ = 1;
    std::vector<i64> data_;
};

/// R * A * C = D (diagonal, entries `diag`, length min(rows, cols)).
struct Diagonalization {
    i64 modulus = 1;
    std::size_t rows = 0, cols = 0;
    std::vector<i64> diag;
    std::optional<ModMatrix> left, left_inv;    // R, R^-1
    std::optional<ModMatrix> right, right_inv;  // C, C^-1
};

namespace detail {

// Inverse of a 2x2 block with determinant +-1.
inline std::array<i64, 4> inverse2(i64 a, i64 b, i64 c, i64 d, i64 det) {
    if (det == 1) return {d, -b, -c, a};
    return {-d, b, c, -a};
}

}  // namespace detail

inline Diagonalization diagonalize(ModMatrix a, bool track_left, bool track_right) {
    const i64 n_mod = a.modulus();
    const std::size_t m = a.rows(), n = a.cols();
    Diagonalization out;
    out.modulus = n_mod;
    out.rows = m;
    out.cols = n;
    if (track_left) {
        out.left = ModMatrix::identity(m, n_mod);
        out.left_inv = ModMatrix::identity(m, n_mod);
    }
    if (track_right) {
        out.right = ModMatrix::identity(n, n_mod);
        out.right_inv = ModMatrix::identity(n, n_mod);
    }

    auto row_op = [&](std::size_t i, std::size_t j, i64 p, i64 q, i64 r, i64 s, i64 det) {
        a.row_mix(i, j, p, q, r, s);
        if (track_left) {
            out.left->row_mix(i, j, p, q, r, s);
            const auto inv = detail::inverse2(p, q, r, s, det);
            out.left_inv->col_mix(i, j, inv[0], inv[1], inv[2], inv[3]);
        }
    };
    auto col_op = [&](std::size_t i, std::size_t j, i64 p, i64 q, i64 r, i64 s, i64 det) {
        a.col_mix(i, j, p, q, r, s);
        if (track_right) {
            out.right->col_mix(i, j, p, q, r, s);
            const auto inv = detail::inverse2(p, q, r, s, det);
            out.right_inv->row_mix(i, j, inv[0], inv[1], inv[2], inv[3]);
        }
    };

    const std::size_t steps = std::min(m, n);
    out.diag.assign(steps, 0);
    for (std::size_t t = 0; t < steps; ++t) {
        // Pivot: nonzero entry whose gcd with N is smallest.
        std::size_t pr = m, pc = n;
        i64 best = n_mod + 1;
        for (std::size_t i = t; i < m && best > 1; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const i64 v = a.at(i, j);
                if (v == 0) continue;
                const i64 g = num::gcd(v, n_mod);
                if (g < best) {
                    best = g;
                    pr = i;
                    pc = j;
                    if (g == 1) break;
                }
            }
        if (pr == m) break;
        if (pr != t) row_op(t, pr, 0, 1, 1, 0, -1);
        if (pc != t) col_op(t, pc, 0, 1, 1, 0, -1);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                const i64 b = a.at(i, t);
                if (b == 0) continue;
                const i64 p = a.at(t, t);
                if (b % p == 0) {
                    row_op(t, i, 1, 0, -(b / p), 1, 1);
                } else {
                    const auto e = num::ext_gcd(p, b);
                    row_op(t, i, e.x, e.y, -(b / e.g), p / e.g, 1);
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                const i64 b = a.at(t, j);
                if (b == 0) continue;
                const i64 p = a.at(t, t);
                if (b % p == 0) {
                    col_op(t, j, 1, -(b / p), 0, 1, 1);
                } else {
                    // Column version of the gcd transform: F = [[x, -b/g], [y, p/g]].
                    const auto e = num::ext_gcd(p, b);
                    col_op(t, j, e.x, -(b / e.g), e.y, p / e.g, 1);
                    dirty = true;
                }
            }
        }
        out.diag[t] = a.at(t, t);
    }
    return out;
}

/// Kernel of x -> A x over Z/N as independent generators with their orders.
struct Kernel {
    i64 modulus = 1;
    std::vector<std::vector<i64>> generators;
    std::vector<i64> orders;
    std::vector<std::size_t> source_index;  // column of C each generator came from
    ModMatrix right_inv;                    // C^-1 for coordinate extraction

    /// Coordinates a_i with x = sum a_i * generators[i]; x must lie in the kernel.
    [[nodiscard]] std::vector<i64> coordinates(std::span<const i64> x) const {
        const auto y = right_inv.apply(x);
        std::vector<i64> coords(generators.size());
        for (std::size_t g = 0; g < generators.size(); ++g) {
            const i64 scale = modulus / orders[g];
            const i64 yi = y[source_index[g]];
            if (yi % scale != 0) throw Error(ErrorKind::InvalidParams, "vector is not in the kernel");
            coords[g] = (yi / scale) % orders[g];
        }
        return coords;
    }
};

inline Kernel kernel(const ModMatrix& a) {
    const i64 n_mod = a.modulus();
    auto d = diagonalize(a, false, true);
    Kernel k;
    k.modulus = n_mod;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        const i64 di = i < d.diag.size() ? d.diag[i] : 0;
        const i64 order = num::gcd(di, n_mod);  // gcd(0, N) = N
        if (order <= 1) continue;
        auto col = d.right->column(i);
        const i64 scale = n_mod / order;
        for (auto& v : col) v = num::mulmod(v, scale, n_mod);
        k.generators.push_back(std::move(col));
        k.orders.push_back(order);
        k.source_index.push_back(i);
    }
    k.right_inv = std::move(*d.right_inv);
    return k;
}

/// Reusable solver for A x = b over Z/N.
class LinearSolver {
public:
    explicit LinearSolver(const ModMatrix& a) : d_(diagonalize(a, true, true)) {}

    [[nodiscard]] std::optional<std::vector<i64>> solve(std::span<const i64> b) const {
        const i64 n_mod = d_.modulus;
        const auto z = d_.left->apply(b);
        std::vector<i64> y(d_.cols, 0);
        for (std::size_t i = 0; i < d_.rows; ++i) {
            const i64 di = i < d_.diag.size() ? d_.diag[i] : 0;
            const i64 g = num::gcd(di, n_mod);
            if (z[i] % g != 0) return std::nullopt;
            if (di == 0 || i >= d_.cols) continue;
            const i64 sub = n_mod / g;
            y[i] = num::mulmod(z[i] / g, num::invmod((di / g) % sub, sub), sub);
        }
        return d_.right->apply(y);
    }

    [[nodiscard]] const Diagonalization& diagonalization() const noexcept { return d_; }

private:
    Diagonalization d_;
};

}  // namespace xprod::modlin
