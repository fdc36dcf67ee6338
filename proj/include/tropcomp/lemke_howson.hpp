#pragma once

/**
 * @file lemke_howson.hpp
 * @brief Lemke-Howson pivoting over tropical bases and over an exact
 * rational tableau, with comparable traces.
 *
 * Both runs start from the all-blue basis, bring in (j*, red), and keep
 * bringing in the twin of the column that just left until the basis is fully
 * labeled again. On tropical input the pivot row of an entering column is
 * where its residual minimum is attained; ties go to the smallest row, which
 * is the symbolic perturbation that makes degenerate instances
 * nondegenerate. Tropical runs take at most 2n - 1 pivots.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropcomp/dominance.hpp"
#include "tropcomp/error.hpp"
#include "tropcomp/instances.hpp"
#include "tropcomp/labels.hpp"
#include "tropcomp/linalg.hpp"
#include "tropcomp/tropical_bases.hpp"

namespace tropcomp {

struct LhStep {
    LabeledColumn entering;
    LabeledColumn leaving;
    std::size_t pivot_row;  // 0-based
    LabeledBasis basis;     // after the pivot
};

struct LhTrace {
    std::size_t j_star = 0;
    std::vector<LhStep> steps;

    std::size_t pivots() const { return steps.size(); }

    /// B_1 (all blue) followed by the basis after each pivot.
    std::vector<LabeledBasis> bases(std::size_t n) const {
        std::vector<LabeledBasis> out{initial_basis(n)};
        for (const auto& s : steps) out.push_back(s.basis);
        return out;
    }

    const LabeledBasis& final_basis() const { return steps.back().basis; }
};

template <class Solution>
struct LhResult {
    Solution solution;
    LhTrace trace;
};

namespace detail {

inline void check_j_star(std::size_t j_star, std::size_t n) {
    if (j_star >= n)
        throw invalid_input("j* = " + std::to_string(j_star + 1) + " is outside 1.." + std::to_string(n));
}

}  // namespace detail

/// j_star is 0-based.
template <TropicalDomain D>
LhResult<TropSolution<D>> lh_tropical(const TnecpInstance<D>& t, std::size_t j_star) {
    require_valid(t);
    const std::size_t n = t.n();
    detail::check_j_star(j_star, n);
    auto system = stacked_system(t);
    TropBasis basis{std::vector<std::size_t>(n)};
    for (std::size_t i = 0; i < n; ++i) basis.phi[i] = i;

    LhTrace trace{j_star, {}};
    LabeledColumn entering{j_star, Color::red};
    while (true) {
        if (trace.steps.size() == 2 * n - 1)
            throw internal_error("tropical Lemke-Howson exceeded 2n - 1 pivots");
        auto step = pivot(system, basis, entering.index(n));
        basis = step.basis;
        auto leaving = LabeledColumn::from_index(step.leaving, n);
        auto labeled = to_labeled(basis.columns(), n);
        trace.steps.push_back({entering, leaving, step.pivot_row, labeled});
        if (is_fully_labeled(labeled, n)) break;
        entering = leaving.twin();
    }

    auto x = basic_solution(system, basis);
    TropSolution<D> sol{TropVector<D>(x.begin(), x.begin() + n), TropVector<D>(x.begin() + n, x.end())};
    if (!is_solution(t, sol)) throw internal_error("Lemke-Howson ended on a point that is not a solution");
    return {std::move(sol), std::move(trace)};
}

/// Dense tableau for (I | -M) x = q kept in basis-reduced form.
class ClassicalTableau {
public:
    explicit ClassicalTableau(const NecpInstance& c)
        : n_(c.n()), coeffs_(stacked_matrix(c)), rhs_(c.q), basic_(c.n()) {
        for (std::size_t i = 0; i < n_; ++i) basic_[i] = i;
    }

    std::size_t n() const { return n_; }
    const RationalMatrix& coefficients() const { return coeffs_; }
    const RationalVector& rhs() const { return rhs_; }
    std::size_t basic_column(std::size_t row) const { return basic_[row]; }

    LabeledBasis basis() const { return to_labeled(basic_, n_); }

    /// Minimum-ratio pivot on `column`. Returns (pivot row, leaving column).
    /// A tie in the ratio test, or a basic variable dropping to zero, is
    /// degeneracy.
    std::pair<std::size_t, std::size_t> pivot(std::size_t column) {
        std::optional<std::size_t> best;
        Rational best_ratio;
        bool tie = false;
        for (std::size_t i = 0; i < n_; ++i) {
            if (sgn(coeffs_(i, column)) <= 0) continue;
            Rational ratio = rhs_[i] / coeffs_(i, column);
            if (!best || ratio < best_ratio) {
                best = i;
                best_ratio = ratio;
                tie = false;
            } else if (ratio == best_ratio) {
                tie = true;
            }
        }
        if (!best) throw internal_error("unbounded ray in classical Lemke-Howson");
        if (tie) throw degenerate_instance("classical instance degenerate");
        const std::size_t r = *best;
        Rational inv = 1 / coeffs_(r, column);
        for (std::size_t j = 0; j < 2 * n_; ++j) coeffs_(r, j) *= inv;
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == r || sgn(coeffs_(i, column)) == 0) continue;
            Rational f = coeffs_(i, column);
            for (std::size_t j = 0; j < 2 * n_; ++j) coeffs_(i, j) -= f * coeffs_(r, j);
            rhs_[i] -= f * rhs_[r];
        }
        std::size_t leaving = basic_[r];
        basic_[r] = column;
        for (const auto& v : rhs_)
            if (sgn(v) == 0) throw degenerate_instance("classical instance degenerate");
        return {r, leaving};
    }

    ClassicalSolution point() const {
        ClassicalSolution s{RationalVector(n_, Rational(0)), RationalVector(n_, Rational(0))};
        for (std::size_t i = 0; i < n_; ++i) {
            if (basic_[i] < n_)
                s.w[basic_[i]] = rhs_[i];
            else
                s.z[basic_[i] - n_] = rhs_[i];
        }
        return s;
    }

private:
    std::size_t n_;
    RationalMatrix coeffs_;
    RationalVector rhs_;
    std::vector<std::size_t> basic_;
};

inline constexpr std::size_t classical_pivot_limit = 1'000'000;

/// j_star is 0-based.
inline LhResult<ClassicalSolution> lh_classical(const NecpInstance& c, std::size_t j_star) {
    require_valid(c);
    const std::size_t n = c.n();
    detail::check_j_star(j_star, n);
    ClassicalTableau tableau(c);
    LhTrace trace{j_star, {}};
    LabeledColumn entering{j_star, Color::red};
    while (true) {
        if (trace.steps.size() == classical_pivot_limit)
            throw internal_error("classical Lemke-Howson did not terminate");
        auto [row, leaving_index] = tableau.pivot(entering.index(n));
        auto leaving = LabeledColumn::from_index(leaving_index, n);
        auto labeled = tableau.basis();
        trace.steps.push_back({entering, leaving, row, labeled});
        if (is_fully_labeled(labeled, n)) break;
        entering = leaving.twin();
    }
    auto sol = tableau.point();
    if (!is_solution(c, sol)) throw internal_error("classical Lemke-Howson ended on a non-solution");
    return {std::move(sol), std::move(trace)};
}

struct TraceComparison {
    bool identical = false;
    /// Index into the basis sequence (0 = initial basis) of the first mismatch.
    std::optional<std::size_t> first_divergence;
    LhTrace classical;
    LhTrace tropical;
};

/// Runs both algorithms with the same j* on an instance satisfying the
/// dominance condition and on its logarithmic image.
inline TraceComparison compare_traces(const NecpInstance& c, std::size_t j_star) {
    auto verdict = check_dominance(c);
    if (!verdict.holds)
        throw invalid_input("trace comparison needs the dominance condition: " + verdict.witness->describe());
    TraceComparison out;
    out.classical = lh_classical(c, j_star).trace;
    out.tropical = lh_tropical(log_image(c), j_star).trace;
    auto a = out.classical.bases(c.n());
    auto b = out.tropical.bases(c.n());
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
        if (k >= a.size() || k >= b.size() || a[k] != b[k]) {
            out.first_divergence = k;
            break;
        }
    }
    out.identical = !out.first_divergence;
    return out;
}

}  // namespace tropcomp
