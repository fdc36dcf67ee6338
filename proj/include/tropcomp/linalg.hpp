#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tropcomp/instances.hpp"
#include "tropcomp/rational.hpp"

namespace tropcomp {

/// Solves the square system a x = b exactly by Gauss-Jordan elimination;
/// nullopt when a is singular.
inline std::optional<RationalVector> solve_linear(RationalMatrix a, RationalVector b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw invalid_input("solve_linear: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && sgn(a(p, col)) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
            std::swap(b[p], b[col]);
        }
        Rational inv = 1 / a(col, col);
        for (std::size_t j = col; j < n; ++j) a(col, j) *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a(r, col)) == 0) continue;
            Rational f = a(r, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    return b;
}

/// Columns `cols` of `a` as a square matrix (requires cols.size() == a.rows()).
inline RationalMatrix select_columns(const RationalMatrix& a, const std::vector<std::size_t>& cols) {
    RationalMatrix out(a.rows(), cols.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < cols.size(); ++k) out(i, k) = a(i, cols[k]);
    return out;
}

/// The system (I | -M) (w; z) = q of a classical instance.
inline RationalMatrix stacked_matrix(const NecpInstance& c) {
    const std::size_t n = c.n();
    RationalMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = 1;
        for (std::size_t j = 0; j < n; ++j) a(i, n + j) = -c.m(i, j);
    }
    return a;
}

/// Basic solution of (I | -M) x = q on the column set `basis` (0..n-1 blue,
/// n..2n-1 red), split into (w, z); nullopt if the columns are singular.
inline std::optional<ClassicalSolution> basic_point(const NecpInstance& c, const std::vector<std::size_t>& basis) {
    const std::size_t n = c.n();
    auto x = solve_linear(select_columns(stacked_matrix(c), basis), c.q);
    if (!x) return std::nullopt;
    ClassicalSolution s{RationalVector(n, Rational(0)), RationalVector(n, Rational(0))};
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k] < n)
            s.w[basis[k]] = (*x)[k];
        else
            s.z[basis[k] - n] = (*x)[k];
    }
    return s;
}

}  // namespace tropcomp
