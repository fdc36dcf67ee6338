#pragma once

/**
 * @file games.hpp
 * @brief Bimatrix games, classical and tropical, and their reductions to
 * Nash equilibrium complementarity problems.
 *
 * A game (P, Q) with r x s payoffs becomes the instance of size r + s with
 *
 *     M = -[[0, P], [Q^T, 0]],  q = 1         (classical)
 *     M- = [[zero, P], [Q^T, zero]],  q+ = 0  (tropical)
 *
 * and z = (x, y) renormalized onto the (tropical) simplices gives the
 * equilibrium.
 */

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "tropcomp/dominance.hpp"
#include "tropcomp/error.hpp"
#include "tropcomp/instances.hpp"
#include "tropcomp/labels.hpp"
#include "tropcomp/linalg.hpp"
#include "tropcomp/matching_solver.hpp"

namespace tropcomp {

struct ClassicalGame {
    RationalMatrix p, q;
    std::size_t r() const { return p.rows(); }
    std::size_t s() const { return p.cols(); }
};

struct TropicalGame {
    TropMatrix<MaxPlus> p, q;
    std::size_t r() const { return p.rows(); }
    std::size_t s() const { return p.cols(); }
};

struct ClassicalStrategies {
    RationalVector x, y;
    bool operator==(const ClassicalStrategies&) const = default;
};

struct TropicalStrategies {
    TropVector<MaxPlus> x, y;
    bool operator==(const TropicalStrategies&) const = default;
    auto operator<=>(const TropicalStrategies&) const = default;
};

namespace detail {

template <class M>
void check_game_shape(const M& p, const M& q) {
    if (p.rows() == 0 || p.cols() == 0) throw invalid_input("game has no actions");
    if (p.rows() != q.rows() || p.cols() != q.cols()) throw invalid_input("payoff matrices differ in shape");
}

// True when every column of p and every row of q (column of Q^T) has a positive entry.
inline bool has_positive_lines(const RationalMatrix& m, bool by_column) {
    const std::size_t outer = by_column ? m.cols() : m.rows();
    const std::size_t inner = by_column ? m.rows() : m.cols();
    for (std::size_t a = 0; a < outer; ++a) {
        bool positive = false;
        for (std::size_t b = 0; b < inner; ++b) positive = positive || sgn(by_column ? m(b, a) : m(a, b)) > 0;
        if (!positive) return false;
    }
    return true;
}

inline Rational min_entry(const RationalMatrix& m) {
    Rational lo = m(0, 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) lo = std::min(lo, Rational(m(i, j)));
    return lo;
}

// Adds 1 - min to every entry when the matrix has a negative entry or a line
// without a positive entry; leaves it alone otherwise.
inline RationalMatrix shifted(const RationalMatrix& m, bool by_column) {
    Rational lo = min_entry(m);
    if (sgn(lo) >= 0 && has_positive_lines(m, by_column)) return m;
    RationalMatrix out = m;
    Rational shift = 1 - lo;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) += shift;
    return out;
}

}  // namespace detail

inline NecpInstance game_to_necp(const ClassicalGame& g) {
    detail::check_game_shape(g.p, g.q);
    const std::size_t r = g.r(), s = g.s(), n = r + s;
    auto p = detail::shifted(g.p, true);
    auto q = detail::shifted(g.q, false);
    NecpInstance c{RationalMatrix(n, n, Rational(0)), RationalVector(n, Rational(1))};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            c.m(i, r + j) = -p(i, j);
            c.m(r + j, i) = -q(i, j);
        }
    return c;
}

inline void require_valid(const TropicalGame& g) {
    detail::check_game_shape(g.p, g.q);
    for (std::size_t j = 0; j < g.s(); ++j) {
        bool any = false;
        for (std::size_t i = 0; i < g.r(); ++i) any = any || g.p(i, j).is_finite();
        if (!any) throw invalid_input("column " + std::to_string(j + 1) + " of P is the zero vector");
    }
    for (std::size_t i = 0; i < g.r(); ++i) {
        bool any = false;
        for (std::size_t j = 0; j < g.s(); ++j) any = any || g.q(i, j).is_finite();
        if (!any) throw invalid_input("column " + std::to_string(i + 1) + " of Q^T is the zero vector");
    }
}

inline TnecpInstance<MaxPlus> game_to_tnecp(const TropicalGame& g) {
    require_valid(g);
    const std::size_t r = g.r(), s = g.s(), n = r + s;
    TnecpInstance<MaxPlus> t{TropMatrix<MaxPlus>(n, n), TropVector<MaxPlus>(n, TropScalar<MaxPlus>(0))};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            t.m_minus(i, r + j) = g.p(i, j);
            t.m_minus(r + j, i) = g.q(i, j);
        }
    return t;
}

/// Scales the first r entries and the rest of z so each part has tropical
/// sum 0.
inline TropicalStrategies normalize_strategies(const TropVector<MaxPlus>& z, std::size_t r) {
    if (r == 0 || r >= z.size()) throw invalid_input("strategy split point out of range");
    auto scale = [](TropVector<MaxPlus> part, const char* who) {
        auto top = trop_sum(part);
        if (top.is_zero()) throw invalid_input(std::string(who) + " part of z is the zero vector");
        TropScalar<MaxPlus> alpha(Rational(-top.value()));
        for (auto& v : part) v = trop_mul(alpha, v);
        return part;
    };
    return {scale(TropVector<MaxPlus>(z.begin(), z.begin() + r), "x"),
            scale(TropVector<MaxPlus>(z.begin() + r, z.end()), "y")};
}

/// Renormalizes the z-part of a solution of game_to_necp onto the simplices.
inline ClassicalStrategies strategies_from_necp(const ClassicalSolution& sol, std::size_t r) {
    auto scale = [](RationalVector part, const char* who) {
        Rational total = 0;
        for (const auto& v : part) total += v;
        if (sgn(total) <= 0) throw invalid_input(std::string(who) + " part of z is zero");
        for (auto& v : part) v /= total;
        return part;
    };
    return {scale(RationalVector(sol.z.begin(), sol.z.begin() + r), "x"),
            scale(RationalVector(sol.z.begin() + r, sol.z.end()), "y")};
}

namespace detail {

template <class Vec, class Matrix>
void check_strategy_shape(const Matrix& p, const Vec& x, const Vec& y) {
    if (x.size() != p.rows() || y.size() != p.cols()) throw invalid_input("strategy lengths do not match the game");
}

}  // namespace detail

/// Support conditions: every played action is a best response, exactly.
inline bool is_classical_nash(const ClassicalGame& g, const ClassicalStrategies& sp) {
    detail::check_game_shape(g.p, g.q);
    detail::check_strategy_shape(g.p, sp.x, sp.y);
    auto on_simplex = [](const RationalVector& v) {
        Rational total = 0;
        for (const auto& e : v) {
            if (sgn(e) < 0) return false;
            total += e;
        }
        return total == 1;
    };
    if (!on_simplex(sp.x) || !on_simplex(sp.y)) return false;
    RationalVector py(g.r(), Rational(0)), qx(g.s(), Rational(0));
    for (std::size_t i = 0; i < g.r(); ++i)
        for (std::size_t j = 0; j < g.s(); ++j) {
            py[i] += g.p(i, j) * sp.y[j];
            qx[j] += g.q(i, j) * sp.x[i];
        }
    Rational best_row = *std::max_element(py.begin(), py.end());
    Rational best_col = *std::max_element(qx.begin(), qx.end());
    for (std::size_t i = 0; i < g.r(); ++i)
        if (sgn(sp.x[i]) > 0 && py[i] != best_row) return false;
    for (std::size_t j = 0; j < g.s(); ++j)
        if (sgn(sp.y[j]) > 0 && qx[j] != best_col) return false;
    return true;
}

/// Tropical support conditions: every action with a finite weight attains
/// the maximum of P (.) y (resp. Q^T (.) x).
inline bool is_tropical_nash(const TropicalGame& g, const TropicalStrategies& sp) {
    detail::check_game_shape(g.p, g.q);
    detail::check_strategy_shape(g.p, sp.x, sp.y);
    auto unit = TropScalar<MaxPlus>::unit();
    if (trop_sum(sp.x) != unit || trop_sum(sp.y) != unit) return false;
    auto py = trop_matvec(g.p, sp.y);
    auto qx = trop_matvec(g.q.transposed(), sp.x);
    auto best_row = trop_sum(py), best_col = trop_sum(qx);
    for (std::size_t i = 0; i < g.r(); ++i)
        if (sp.x[i].is_finite() && py[i] != best_row) return false;
    for (std::size_t j = 0; j < g.s(); ++j)
        if (sp.y[j].is_finite() && qx[j] != best_col) return false;
    return true;
}

/// The inequality form: x*^T P y* >= x^T P y* and x*^T Q y* >= x*^T Q y over
/// the tropical simplices. The right-hand maxima are attained at tropical
/// unit vectors, so they equal the largest entry of P y* and Q^T x*.
inline bool satisfies_tropical_best_response_inequalities(const TropicalGame& g, const TropicalStrategies& sp) {
    detail::check_strategy_shape(g.p, sp.x, sp.y);
    auto py = trop_matvec(g.p, sp.y);
    auto qx = trop_matvec(g.q.transposed(), sp.x);
    return trop_dot(sp.x, py) >= trop_sum(py) && trop_dot(sp.y, qx) >= trop_sum(qx);
}

inline TropicalStrategies tropical_nash(const TropicalGame& g) {
    auto t = game_to_tnecp(g);
    return normalize_strategies(solve(t).z, g.r());
}

/// Every column of P has an entry exceeding (r-1) times each other entry of
/// that column, and likewise every column of Q^T with s-1.
inline bool check_spec_poly(const ClassicalGame& g) {
    detail::check_game_shape(g.p, g.q);
    if (sgn(detail::min_entry(g.p)) < 0 || sgn(detail::min_entry(g.q)) < 0)
        throw invalid_input("payoffs must be nonnegative");
    auto dominated = [](const RationalVector& line) {
        const Rational factor = static_cast<long>(line.size()) - 1;
        for (std::size_t a = 0; a < line.size(); ++a) {
            bool ok = true;
            for (std::size_t b = 0; ok && b < line.size(); ++b)
                if (b != a && !(line[a] > factor * line[b])) ok = false;
            if (ok) return true;
        }
        return false;
    };
    for (std::size_t j = 0; j < g.s(); ++j)
        if (!dominated(g.p.column(j))) return false;
    for (std::size_t i = 0; i < g.r(); ++i)
        if (!dominated(g.q.row(i))) return false;
    return true;
}

/// Classical equilibrium of a game in the strict-dominance class: the
/// support of a tropical solution of the logarithmic image is a feasible
/// basis of the classical instance, whose basic point is the answer.
inline ClassicalStrategies solve_game_poly(const ClassicalGame& g) {
    if (!check_spec_poly(g)) throw invalid_input("game is outside the strict-dominance class");
    auto c = game_to_necp(g);
    auto verdict = check_dominance(c);
    if (!verdict.holds) throw internal_error("dominance fails on a qualifying game: " + verdict.witness->describe());
    auto tropical = solve(log_image(c));
    auto point = basic_point(c, to_indices(support_of(tropical), c.n()));
    if (!point || !is_solution(c, *point)) throw internal_error("tropical support is not a classical solution basis");
    return strategies_from_necp(*point, g.r());
}

struct QuintShubikAudit {
    std::size_t count = 0;
    std::size_t components = 0;
    bool bound_ok = false;
    std::size_t smallest_component_nodes = 0;
    std::vector<TropicalStrategies> equilibria;
};

/// Enumerates all tropical equilibria of a square game whose columns of P
/// and Q^T have unique maximizing entries, and checks the 2^r - 1 bound.
inline QuintShubikAudit quint_shubik_audit(const TropicalGame& g) {
    require_valid(g);
    if (g.r() != g.s()) throw invalid_input("Quint-Shubik audit needs a square game");
    if (g.r() >= 63) throw guard_exceeded("game too large to enumerate");
    auto unique_max = [](const TropVector<MaxPlus>& line) {
        auto top = trop_sum(line);
        return std::count(line.begin(), line.end(), top) == 1;
    };
    for (std::size_t j = 0; j < g.s(); ++j)
        if (!unique_max(g.p.column(j)))
            throw degenerate_instance("column " + std::to_string(j + 1) + " of P has no unique maximum");
    for (std::size_t i = 0; i < g.r(); ++i)
        if (!unique_max(g.q.row(i)))
            throw degenerate_instance("column " + std::to_string(i + 1) + " of Q^T has no unique maximum");

    auto t = game_to_tnecp(g);
    auto graph = build_graph(t);
    QuintShubikAudit audit;
    auto comps = row_components(graph);
    audit.components = comps.size();
    audit.smallest_component_nodes = std::numeric_limits<std::size_t>::max();
    for (const auto& rows : comps) audit.smallest_component_nodes = std::min(audit.smallest_component_nodes, 2 * rows.size());
    for (const auto& sol : enumerate_solutions(t, std::numeric_limits<std::size_t>::max()))
        audit.equilibria.push_back(normalize_strategies(sol.z, g.r()));
    audit.count = audit.equilibria.size();
    audit.bound_ok = audit.count <= (std::size_t{1} << g.r()) - 1;
    return audit;
}

}  // namespace tropcomp
