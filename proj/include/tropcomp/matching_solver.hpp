#pragma once

/**
 * @file matching_solver.hpp
 * @brief Polynomial-time solver for the tropical Nash equilibrium
 * complementarity problem.
 *
 * The instance is turned into a blue/red bipartite multigraph on row nodes
 * u_i and column nodes v_j: a blue edge u_i v_i for every i, and a red edge
 * u_i v_j whenever q_i (/) M_ij is minimal in column j. Perfect matchings with
 * at least one red edge map to solutions through alpha(F). Once every column
 * keeps a single red edge, orienting blue edges row->column and red edges
 * column->row leaves every node with out-degree one, so each component has
 * exactly one cycle, and that cycle alternates colors. Toggling it against
 * the all-blue matching yields a solution.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/instances.hpp"
#include "tropcomp/tropical.hpp"

namespace tropcomp {

enum class Color { blue, red };

inline const char* to_string(Color c) { return c == Color::blue ? "blue" : "red"; }

/// Edge u_row v_col. Blue edges always have row == col.
struct Edge {
    Color color;
    std::size_t row;
    std::size_t col;

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

template <TropicalDomain D>
struct ComplementarityGraph {
    std::size_t n = 0;
    /// red_rows[j]: rows i (ascending) at which q_i (/) M_ij attains the column minimum.
    std::vector<std::vector<std::size_t>> red_rows;
    /// column_min[j]: the minimum residual of column j, always finite on valid input.
    TropVector<D> column_min;

    std::vector<Edge> blue_edges() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back({Color::blue, i, i});
        return out;
    }

    std::vector<Edge> red_edges() const {
        std::vector<Edge> out;
        for (std::size_t j = 0; j < n; ++j)
            for (auto i : red_rows[j]) out.push_back({Color::red, i, j});
        std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
            return std::pair(a.row, a.col) < std::pair(b.row, b.col);
        });
        return out;
    }

    bool has_edge(const Edge& e) const {
        if (e.row >= n || e.col >= n) return false;
        if (e.color == Color::blue) return e.row == e.col;
        const auto& rows = red_rows[e.col];
        return std::find(rows.begin(), rows.end(), e.row) != rows.end();
    }
};

using Matching = std::vector<Edge>;

/// Chooses which red edge a column keeps: receives the column index and its
/// (ascending, nonempty) candidate rows, returns one of them.
using PruningRule = std::function<std::size_t(std::size_t col, std::span<const std::size_t> rows)>;

inline std::size_t lowest_row_index(std::size_t, std::span<const std::size_t> rows) { return rows.front(); }

template <TropicalDomain D>
ComplementarityGraph<D> build_graph(const TnecpInstance<D>& t) {
    require_valid(t);
    const std::size_t n = t.n();
    ComplementarityGraph<D> g{n, std::vector<std::vector<std::size_t>>(n), TropVector<D>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        auto best = ExtendedScalar<D>::plus_infinity();
        for (std::size_t i = 0; i < n; ++i) {
            auto r = trop_residual(t.q_plus[i], t.m_minus(i, j));
            if (r < best) {
                best = r;
                g.red_rows[j].assign(1, i);
            } else if (r == best && !r.is_plus_infinity()) {
                g.red_rows[j].push_back(i);
            }
        }
        if (!best.is_finite()) throw internal_error("column minimum not finite on a valid instance");
        g.column_min[j] = best.scalar();
    }
    return g;
}

/// Keeps exactly one red edge per column node.
template <TropicalDomain D>
ComplementarityGraph<D> prune(const ComplementarityGraph<D>& g, const PruningRule& rule = lowest_row_index) {
    ComplementarityGraph<D> out = g;
    for (std::size_t j = 0; j < g.n; ++j) {
        std::size_t keep = rule(j, g.red_rows[j]);
        if (std::find(g.red_rows[j].begin(), g.red_rows[j].end(), keep) == g.red_rows[j].end())
            throw invalid_input("pruning rule chose a row that is not a red neighbour of column " +
                                std::to_string(j + 1));
        out.red_rows[j].assign(1, keep);
    }
    return out;
}

/// The point alpha(F): w_i = q_i for blue u_i v_i in F, z_j = q_i (/) M_ij for
/// red u_i v_j in F, the tropical zero elsewhere.
template <TropicalDomain D>
TropSolution<D> alpha(const ComplementarityGraph<D>& g, const Matching& f, const TnecpInstance<D>& t) {
    TropSolution<D> s{TropVector<D>(g.n), TropVector<D>(g.n)};
    for (const auto& e : f) {
        if (!g.has_edge(e))
            throw invalid_input("edge u" + std::to_string(e.row + 1) + "v" + std::to_string(e.col + 1) +
                                " is not in the graph");
        if (e.color == Color::blue)
            s.w[e.row] = t.q_plus[e.row];
        else
            s.z[e.col] = trop_residual(t.q_plus[e.row], t.m_minus(e.row, e.col)).scalar();
    }
    return s;
}

template <TropicalDomain D>
bool is_nondegenerate(const ComplementarityGraph<D>& g) {
    return std::all_of(g.red_rows.begin(), g.red_rows.end(), [](const auto& rows) { return rows.size() == 1; });
}

template <TropicalDomain D>
bool is_nondegenerate(const TnecpInstance<D>& t) {
    return is_nondegenerate(build_graph(t));
}

/// An alternating cycle in a graph whose columns each carry one red edge,
/// listed as the rows it visits in traversal order (u_r -> v_r -> u_red(r) ...).
struct AlternatingCycle {
    std::vector<std::size_t> rows;

    Matching edges(const std::vector<std::size_t>& red_of_col) const {
        Matching out;
        for (auto r : rows) {
            out.push_back({Color::blue, r, r});
            out.push_back({Color::red, red_of_col[r], r});
        }
        return out;
    }
};

namespace detail {

template <TropicalDomain D>
std::vector<std::size_t> single_red(const ComplementarityGraph<D>& g) {
    std::vector<std::size_t> red(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        if (g.red_rows[j].size() != 1) throw internal_error("graph is not pruned");
        red[j] = g.red_rows[j].front();
    }
    return red;
}

// Follows successors u_i -> v_i -> u_red(i) from `start` until a row repeats.
inline AlternatingCycle cycle_from(std::size_t start, const std::vector<std::size_t>& red) {
    std::vector<int> seen_at(red.size(), -1);
    std::vector<std::size_t> path;
    std::size_t row = start;
    while (seen_at[row] < 0) {
        seen_at[row] = static_cast<int>(path.size());
        path.push_back(row);
        row = red[row];
    }
    return AlternatingCycle{std::vector<std::size_t>(path.begin() + seen_at[row], path.end())};
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Connected components of the graph, each as its ascending row nodes;
/// components are sorted by smallest row. Node u_i is i, v_j is n + j.
template <TropicalDomain D>
std::vector<std::vector<std::size_t>> row_components(const ComplementarityGraph<D>& g) {
    detail::DisjointSets sets(2 * g.n);
    for (std::size_t i = 0; i < g.n; ++i) sets.unite(i, g.n + i);
    for (std::size_t j = 0; j < g.n; ++j)
        for (auto i : g.red_rows[j]) sets.unite(i, g.n + j);
    std::vector<std::vector<std::size_t>> by_root(2 * g.n);
    for (std::size_t i = 0; i < g.n; ++i) by_root[sets.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& rows : by_root)
        if (!rows.empty()) out.push_back(std::move(rows));
    std::sort(out.begin(), out.end());
    return out;
}

template <TropicalDomain D>
std::size_t component_count(const ComplementarityGraph<D>& g) {
    return row_components(g).size();
}

/// One alternating cycle per component of a pruned graph, in component order.
template <TropicalDomain D>
std::vector<AlternatingCycle> component_cycles(const ComplementarityGraph<D>& pruned) {
    auto red = detail::single_red(pruned);
    std::vector<AlternatingCycle> out;
    for (const auto& comp : row_components(pruned)) out.push_back(detail::cycle_from(comp.front(), red));
    return out;
}

/// F0 (symmetric difference) the union of the given cycles.
inline Matching toggle(std::size_t n, const std::vector<const AlternatingCycle*>& cycles,
                       const std::vector<std::size_t>& red_of_col) {
    std::vector<bool> on_cycle(n, false);
    Matching f;
    for (const auto* c : cycles)
        for (auto r : c->rows) on_cycle[r] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!on_cycle[i]) f.push_back({Color::blue, i, i});
    for (std::size_t j = 0; j < n; ++j)
        if (on_cycle[j]) f.push_back({Color::red, red_of_col[j], j});
    return f;
}

/// Solution of the cycle through u_1 after pruning with `rule`.
template <TropicalDomain D>
TropSolution<D> solve(const TnecpInstance<D>& t, const PruningRule& rule = lowest_row_index) {
    auto pruned = prune(build_graph(t), rule);
    auto red = detail::single_red(pruned);
    auto cycle = detail::cycle_from(0, red);
    auto sol = alpha(pruned, toggle(pruned.n, {&cycle}, red), t);
    if (!is_solution(t, sol)) throw internal_error("cycle toggle did not produce a solution");
    return sol;
}

struct SolutionCount {
    BigInt lower_bound;
    bool exact = false;
    std::size_t components = 0;
};

/// 2^kappa - 1 with kappa the component count of the full graph; exact on
/// nondegenerate instances.
template <TropicalDomain D>
SolutionCount count_solutions(const TnecpInstance<D>& t) {
    auto g = build_graph(t);
    std::size_t kappa = component_count(g);
    BigInt bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, kappa);
    return {bound - 1, is_nondegenerate(g), kappa};
}

/// Every solution of a nondegenerate instance, toggling each component's
/// cycle independently. The order is by bitmask over the components sorted
/// by smallest row (component 1 is the lowest bit).
template <TropicalDomain D>
std::vector<TropSolution<D>> enumerate_solutions(const TnecpInstance<D>& t, std::size_t cap) {
    auto g = build_graph(t);
    if (!is_nondegenerate(g)) throw degenerate_instance("enumerate requires nondegeneracy");
    auto cycles = component_cycles(g);
    const std::size_t kappa = cycles.size();
    if (kappa >= 63 || (std::size_t{1} << kappa) - 1 > cap)
        throw guard_exceeded("2^kappa - 1 solutions exceed the cap (kappa = " + std::to_string(kappa) + ")");
    auto red = detail::single_red(g);
    std::vector<TropSolution<D>> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << kappa); ++mask) {
        std::vector<const AlternatingCycle*> chosen;
        for (std::size_t k = 0; k < kappa; ++k)
            if (mask >> k & 1) chosen.push_back(&cycles[k]);
        out.push_back(alpha(g, toggle(g.n, chosen, red), t));
    }
    return out;
}

}  // namespace tropcomp
