#pragma once

/**
 * @file oracles.hpp
 * @brief Brute-force reference implementations.
 *
 * Each oracle works from the definitions only and never calls the solver it
 * is meant to check. Size guards throw guard_exceeded instead of truncating.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/instances.hpp"
#include "tropcomp/labels.hpp"
#include "tropcomp/linalg.hpp"
#include "tropcomp/tropical.hpp"
#include "tropcomp/tropical_bases.hpp"

namespace tropcomp {

inline constexpr std::size_t brute_lcp_max_n = 12;
inline constexpr std::size_t brute_tnecp_max_n = 7;
inline constexpr std::size_t brute_lh_max_n = 5;

/// Every solution of the classical instance with z != 0, found by solving
/// (I | -M) x = q on each of the 2^n complementary column sets.
inline std::vector<ClassicalSolution> brute_lcp(const NecpInstance& c) {
    require_valid(c);
    const std::size_t n = c.n();
    if (n > brute_lcp_max_n) throw guard_exceeded("brute_lcp: n = " + std::to_string(n) + " exceeds 12");
    std::vector<ClassicalSolution> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < n; ++i) cols.push_back(mask >> i & 1 ? n + i : i);
        auto s = basic_point(c, cols);
        if (!s || !is_solution(c, *s)) continue;
        if (std::find(out.begin(), out.end(), *s) == out.end()) out.push_back(std::move(*s));
    }
    return out;
}

/// Every solution of a nondegenerate tropical instance. For each nonempty
/// column set S, sets z_j to the column-minimum residual on S and w_i = q_i
/// off S, then checks the three defining conditions directly.
template <TropicalDomain D>
std::vector<TropSolution<D>> brute_tnecp(const TnecpInstance<D>& t) {
    require_valid(t);
    const std::size_t n = t.n();
    if (n > brute_tnecp_max_n) throw guard_exceeded("brute_tnecp: n = " + std::to_string(n) + " exceeds 7");
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t attained = 0;
        ExtendedScalar<D> best = ExtendedScalar<D>::plus_infinity();
        for (std::size_t i = 0; i < n; ++i) {
            auto r = trop_residual(t.q_plus[i], t.m_minus(i, j));
            if (r < best) {
                best = r;
                attained = 1;
            } else if (r == best) {
                ++attained;
            }
        }
        if (attained != 1) throw degenerate_instance("brute_tnecp requires a nondegenerate instance");
    }
    std::vector<TropSolution<D>> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        TropSolution<D> s{TropVector<D>(n), TropVector<D>(n)};
        for (std::size_t j = 0; j < n; ++j) {
            if (mask >> j & 1) {
                auto best = ExtendedScalar<D>::plus_infinity();
                for (std::size_t i = 0; i < n; ++i) best = std::min(best, trop_residual(t.q_plus[i], t.m_minus(i, j)));
                s.z[j] = best.scalar();
            } else {
                s.w[j] = t.q_plus[j];
            }
        }
        if (is_solution(t, s)) out.push_back(std::move(s));
    }
    return out;
}

namespace detail {

// Basis test by trying every bijection rows -> cols.
template <TropicalDomain D>
bool is_basis_exhaustive(const TropSystem<D>& s, std::vector<std::size_t> cols) {
    std::sort(cols.begin(), cols.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; ok && i < s.rows(); ++i) {
            auto r = trop_residual(s.b[i], s.a(i, cols[i]));
            if (r.is_plus_infinity()) ok = false;
            for (std::size_t k = 0; ok && k < s.rows(); ++k)
                if (trop_residual(s.b[k], s.a(k, cols[i])) < r) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return false;
}

inline bool is_feasible_basis(const NecpInstance& c, const std::vector<std::size_t>& cols) {
    auto x = solve_linear(select_columns(stacked_matrix(c), cols), c.q);
    return x && std::all_of(x->begin(), x->end(), [](const Rational& v) { return sgn(v) >= 0; });
}

template <class IsBasis>
std::vector<std::size_t> unique_neighbour(std::vector<std::size_t> basis, std::size_t entering, IsBasis is_basis) {
    std::sort(basis.begin(), basis.end());
    if (std::binary_search(basis.begin(), basis.end(), entering))
        throw invalid_input("entering column already in the basis");
    std::vector<std::vector<std::size_t>> found;
    for (std::size_t drop = 0; drop < basis.size(); ++drop) {
        auto candidate = basis;
        candidate[drop] = entering;
        std::sort(candidate.begin(), candidate.end());
        if (is_basis(candidate)) found.push_back(candidate);
    }
    if (found.size() != 1)
        throw internal_error("expected exactly one neighbouring basis, found " + std::to_string(found.size()));
    return found.front();
}

}  // namespace detail

/// The unique basis inside B + {entering} other than B, by testing every
/// candidate column set. Columns index the stacked system.
template <TropicalDomain D>
std::vector<std::size_t> brute_lh_step(const TropSystem<D>& s, const std::vector<std::size_t>& basis,
                                       std::size_t entering) {
    if (s.rows() > brute_lh_max_n) throw guard_exceeded("brute_lh_step: n exceeds 5");
    return detail::unique_neighbour(basis, entering,
                                    [&](const auto& cols) { return detail::is_basis_exhaustive(s, cols); });
}

/// Classical counterpart: feasible bases of (I | -M) x = q, x >= 0.
inline std::vector<std::size_t> brute_lh_step(const NecpInstance& c, const std::vector<std::size_t>& basis,
                                              std::size_t entering) {
    if (c.n() > brute_lh_max_n) throw guard_exceeded("brute_lh_step: n exceeds 5");
    return detail::unique_neighbour(basis, entering,
                                    [&](const auto& cols) { return detail::is_feasible_basis(c, cols); });
}

/// Lemke-Howson run in which every step is found by brute_lh_step. Returns
/// the visited bases, starting with the all-blue one.
template <TropicalDomain D>
std::vector<LabeledBasis> brute_lh_walk(const TnecpInstance<D>& t, std::size_t j_star) {
    const std::size_t n = t.n();
    auto s = stacked_system(t);
    std::vector<LabeledBasis> path{initial_basis(n)};
    LabeledColumn entering{j_star, Color::red};
    for (std::size_t step = 0; step < 4 * n + 4; ++step) {
        auto next = to_labeled(brute_lh_step(s, to_indices(path.back(), n), entering.index(n)), n);
        LabeledColumn leaving{};
        for (const auto& col : path.back())
            if (!std::binary_search(next.begin(), next.end(), col)) leaving = col;
        path.push_back(next);
        if (is_fully_labeled(next, n)) return path;
        entering = leaving.twin();
    }
    throw internal_error("brute-force Lemke-Howson walk did not terminate");
}

}  // namespace tropcomp
