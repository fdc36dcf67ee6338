#pragma once

/**
 * @file tropical_bases.hpp
 * @brief Tropical bases of nonnegative systems A (.) x = b.
 *
 * A basis is a set B of n columns with a bijection phi: rows -> B such that
 * b_i (/) A_{i,phi(i)} is in the semifield and minimal in column phi(i).
 * Existence reduces to a perfect matching on the admissible (row, column)
 * pairs.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/instances.hpp"
#include "tropcomp/tropical.hpp"

namespace tropcomp {

template <TropicalDomain D>
struct TropSystem {
    TropMatrix<D> a;
    TropVector<D> b;

    std::size_t rows() const { return a.rows(); }
    std::size_t cols() const { return a.cols(); }
};

/// The system (I | M-) (.) (w; z) = q+ of a TNECP instance; columns 0..n-1
/// are the blue (w) columns, n..2n-1 the red (z) columns.
template <TropicalDomain D>
TropSystem<D> stacked_system(const TnecpInstance<D>& t) {
    const std::size_t n = t.n();
    TropSystem<D> s{TropMatrix<D>(n, 2 * n), t.q_plus};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < 2 * n; ++j) s.a(i, j) = stacked_entry(t, i, j);
    return s;
}

/// phi[i] is the column matched to row i.
struct TropBasis {
    std::vector<std::size_t> phi;

    std::vector<std::size_t> columns() const {
        auto c = phi;
        std::sort(c.begin(), c.end());
        return c;
    }
    bool contains(std::size_t col) const { return std::find(phi.begin(), phi.end(), col) != phi.end(); }
    bool operator==(const TropBasis&) const = default;
};

/// Minimum of b_k (/) A_kj over rows with every row attaining it. The row
/// list is empty when the minimum is +inf (column j is the zero vector).
template <TropicalDomain D>
struct ColumnMinimum {
    ExtendedScalar<D> value;
    std::vector<std::size_t> rows;
};

template <TropicalDomain D>
ColumnMinimum<D> column_minimum(const TropSystem<D>& s, std::size_t j) {
    ColumnMinimum<D> m{ExtendedScalar<D>::plus_infinity(), {}};
    for (std::size_t k = 0; k < s.rows(); ++k) {
        auto r = trop_residual(s.b[k], s.a(k, j));
        if (r.is_plus_infinity()) continue;
        if (r < m.value) {
            m.value = r;
            m.rows.assign(1, k);
        } else if (r == m.value) {
            m.rows.push_back(k);
        }
    }
    return m;
}

/// Checks the definition directly: phi is injective into the columns and
/// each b_i (/) A_{i,phi(i)} lies in the semifield and is a column minimum.
template <TropicalDomain D>
bool is_basis(const TropSystem<D>& s, const TropBasis& basis) {
    if (basis.phi.size() != s.rows()) return false;
    auto cols = basis.columns();
    if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) return false;
    for (std::size_t i = 0; i < s.rows(); ++i) {
        std::size_t j = basis.phi[i];
        if (j >= s.cols()) return false;
        auto r = trop_residual(s.b[i], s.a(i, j));
        if (r.is_plus_infinity()) return false;
        for (std::size_t k = 0; k < s.rows(); ++k)
            if (trop_residual(s.b[k], s.a(k, j)) < r) return false;
    }
    return true;
}

/// A basis via augmenting paths on the admissible pairs, or nullopt when no
/// row-perfect matching exists.
template <TropicalDomain D>
std::optional<TropBasis> find_basis(const TropSystem<D>& s) {
    const std::size_t n = s.rows(), d = s.cols();
    if (s.b.size() != n) throw invalid_input("system right-hand side has the wrong length");
    std::vector<std::vector<std::size_t>> admissible(n);
    for (std::size_t j = 0; j < d; ++j)
        for (auto i : column_minimum(s, j).rows) admissible[i].push_back(j);

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> row_of_col(d, none);
    std::vector<char> visited;
    auto augment = [&](auto&& self, std::size_t row) -> bool {
        for (auto j : admissible[row]) {
            if (visited[j]) continue;
            visited[j] = 1;
            if (row_of_col[j] == none || self(self, row_of_col[j])) {
                row_of_col[j] = row;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < n; ++i) {
        visited.assign(d, 0);
        if (!augment(augment, i)) return std::nullopt;
    }
    TropBasis basis{std::vector<std::size_t>(n)};
    for (std::size_t j = 0; j < d; ++j)
        if (row_of_col[j] != none) basis.phi[row_of_col[j]] = j;
    return basis;
}

/// The canonical basic solution: x_phi(i) = min_k b_k (/) A_k,phi(i), zero off B.
template <TropicalDomain D>
TropVector<D> basic_solution(const TropSystem<D>& s, const TropBasis& basis) {
    if (!is_basis(s, basis)) throw invalid_input("not a basis of the system");
    TropVector<D> x(s.cols());
    for (auto j : basis.phi) x[j] = column_minimum(s, j).value.scalar();
    return x;
}

template <TropicalDomain D>
bool is_nondegenerate_basis(const TropSystem<D>& s, const TropBasis& basis) {
    if (!is_basis(s, basis)) throw invalid_input("not a basis of the system");
    return std::all_of(basis.phi.begin(), basis.phi.end(), [&](std::size_t j) {
        auto m = column_minimum(s, j);
        return m.value.is_finite() && m.rows.size() == 1;
    });
}

/// Every column that is not the zero vector has a finite, uniquely attained
/// residual minimum.
template <TropicalDomain D>
bool is_nondegenerate_system(const TropSystem<D>& s) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < s.rows(); ++i) nonzero = nonzero || s.a(i, j).is_finite();
        if (!nonzero) continue;
        auto m = column_minimum(s, j);
        if (!m.value.is_finite() || m.rows.size() != 1) return false;
    }
    return true;
}

struct PivotResult {
    TropBasis basis;
    std::size_t leaving;
    std::size_t pivot_row;
};

/// Brings column j into the basis: the pivot row is the smallest row
/// attaining min_k b_k (/) A_kj, and its current column leaves.
template <TropicalDomain D>
PivotResult pivot(const TropSystem<D>& s, const TropBasis& basis, std::size_t j) {
    if (j >= s.cols()) throw invalid_input("entering column out of range");
    if (basis.contains(j)) throw invalid_input("entering column " + std::to_string(j) + " is already basic");
    auto m = column_minimum(s, j);
    if (m.rows.empty()) throw invalid_input("entering column " + std::to_string(j) + " is the zero vector");
    std::size_t row = m.rows.front();
    PivotResult out{basis, basis.phi[row], row};
    out.basis.phi[row] = j;
    return out;
}

}  // namespace tropcomp
