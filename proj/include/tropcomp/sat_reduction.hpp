#pragma once

/**
 * @file sat_reduction.hpp
 * @brief CNF to tropical LCP encoding and a brute-force oracle for it.
 *
 * For a formula with n variables and p clauses the encoded system has
 * dimension N = 2n + p + 2, all of M- and q+ at the tropical zero, and rows
 *
 *     0              w_0 (+) 0        = (+)_{i=1..2n} z_i
 *     i              w_i              = z_{n+i}             (i = 1..n)
 *     n + i          w_{n+i}          = z_i
 *     2n + g         w_{2n+g} (+) 0   = (+)_{x_i in C_g} z_i (+) (+)_{~x_i in C_g} z_{n+i}
 *     2n + p + 1     w_{2n+p+1} (+) 0 = z_0
 *
 * with complementarity w_k (.) z_k = -inf. x_i is true iff z_i = 0.
 *
 * The oracle searches only {-inf, 0}-valued points. That is complete for
 * this family: a satisfying assignment gives a {-inf, 0} solution (set z_i
 * and w_{n+i} to 0 for true variables, z_{n+i} and w_i to 0 for false ones,
 * and z_0 = 0), and any solution forces a satisfying assignment through the
 * same decoding, which in turn yields a {-inf, 0} solution.
 */

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/instances.hpp"
#include "tropcomp/tropical.hpp"

namespace tropcomp {

struct CnfFormula {
    std::size_t variables = 0;
    /// Literals are +i / -i with i in 1..variables.
    std::vector<std::vector<int>> clauses;

    std::size_t dimension() const { return 2 * variables + clauses.size() + 2; }
};

inline void require_valid(const CnfFormula& f) {
    if (f.clauses.empty()) throw invalid_input("formula has no clauses");
    for (const auto& clause : f.clauses)
        for (int lit : clause)
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > f.variables)
                throw invalid_input("literal " + std::to_string(lit) + " out of range");
}

/// DIMACS cnf: comment lines start with 'c', one "p cnf V C" header,
/// clauses are 0-terminated literal lists (possibly spanning lines).
inline CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CnfFormula f;
    bool header = false;
    std::size_t declared = 0;
    std::vector<int> current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
        if (first == "p") {
            std::string fmt;
            long v = -1, c = -1;
            if (header || !(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0)
                throw invalid_input("malformed DIMACS header: " + line);
            f.variables = static_cast<std::size_t>(v);
            declared = static_cast<std::size_t>(c);
            header = true;
            continue;
        }
        if (!header) throw invalid_input("DIMACS clause before the header");
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            char* end = nullptr;
            long lit = std::strtol(tok.c_str(), &end, 10);
            if (*end != '\0') throw invalid_input("bad DIMACS literal: " + tok);
            if (lit == 0) {
                f.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(static_cast<int>(lit));
            }
        }
    }
    if (!header) throw invalid_input("missing DIMACS header");
    if (!current.empty()) f.clauses.push_back(current);
    if (f.clauses.size() != declared)
        throw invalid_input("DIMACS header declares " + std::to_string(declared) + " clauses, found " +
                            std::to_string(f.clauses.size()));
    require_valid(f);
    return f;
}

inline TlcpInstance<MaxPlus> encode(const CnfFormula& f) {
    require_valid(f);
    const std::size_t n = f.variables, p = f.clauses.size(), dim = f.dimension();
    using T = TropScalar<MaxPlus>;
    const T unit = T::unit();
    TlcpInstance<MaxPlus> t{TropMatrix<MaxPlus>(dim, dim), TropMatrix<MaxPlus>(dim, dim), TropVector<MaxPlus>(dim),
                            TropVector<MaxPlus>(dim)};
    t.q_minus[0] = unit;
    for (std::size_t i = 1; i <= 2 * n; ++i) t.m_plus(0, i) = unit;
    for (std::size_t i = 1; i <= n; ++i) {
        t.m_plus(i, n + i) = unit;
        t.m_plus(n + i, i) = unit;
    }
    for (std::size_t g = 0; g < p; ++g) {
        const std::size_t row = 2 * n + 1 + g;
        t.q_minus[row] = unit;
        for (int lit : f.clauses[g]) {
            std::size_t var = static_cast<std::size_t>(std::abs(lit));
            t.m_plus(row, lit > 0 ? var : n + var) = unit;
        }
    }
    t.q_minus[dim - 1] = unit;
    t.m_plus(dim - 1, 0) = unit;
    return t;
}

inline constexpr std::size_t encoded_search_max_bits = 34;

/// Searches all {zero, 0}-valued (w, z). For each z pattern, each row's
/// admissible w values are enumerated; the first complete choice is
/// returned (w at the tropical zero preferred).
inline std::optional<TropSolution<MaxPlus>> brute_force_encoded_tlcp(const TlcpInstance<MaxPlus>& t) {
    auto violations = validate(t);
    if (!violations.empty()) throw invalid_input("invalid TLCP instance: " + violations.front().detail);
    const std::size_t dim = t.n();
    if (2 * dim > encoded_search_max_bits)
        throw guard_exceeded("encoded search over 2^" + std::to_string(2 * dim) + " points exceeds 2^34");
    using T = TropScalar<MaxPlus>;
    const T values[2] = {T::zero(), T::unit()};
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
        TropSolution<MaxPlus> s{TropVector<MaxPlus>(dim), TropVector<MaxPlus>(dim)};
        for (std::size_t k = 0; k < dim; ++k) s.z[k] = values[mask >> k & 1];
        auto lhs_fixed = trop_add(trop_matvec(t.m_minus, s.z), t.q_minus);
        auto rhs = trop_add(trop_matvec(t.m_plus, s.z), t.q_plus);
        bool feasible = true;
        for (std::size_t k = 0; feasible && k < dim; ++k) {
            bool found = false;
            for (const auto& w : values) {
                if (!trop_mul(w, s.z[k]).is_zero()) continue;
                if (trop_add(w, lhs_fixed[k]) == rhs[k]) {
                    s.w[k] = w;
                    found = true;
                    break;
                }
            }
            feasible = found;
        }
        if (feasible) {
            if (!is_solution(t, s)) throw internal_error("encoded search produced a non-solution");
            return s;
        }
    }
    return std::nullopt;
}

/// x_i = true iff z_i = 0.
inline std::vector<bool> decode(const TropSolution<MaxPlus>& sol, std::size_t variables) {
    if (sol.z.size() < variables + 1) throw invalid_input("solution too short for the formula");
    std::vector<bool> x(variables);
    for (std::size_t i = 0; i < variables; ++i) x[i] = sol.z[i + 1] == TropScalar<MaxPlus>::unit();
    return x;
}

inline bool satisfies(const CnfFormula& f, const std::vector<bool>& x) {
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (int lit : clause) sat = sat || (lit > 0 ? x[lit - 1] : !x[-lit - 1]);
        if (!sat) return false;
    }
    return true;
}

/// Truth-table search; the first satisfying assignment in binary order.
inline std::optional<std::vector<bool>> truth_table_sat(const CnfFormula& f) {
    if (f.variables >= 31) throw guard_exceeded("truth table over more than 30 variables");
    for (std::size_t mask = 0; mask < (std::size_t{1} << f.variables); ++mask) {
        std::vector<bool> x(f.variables);
        for (std::size_t i = 0; i < f.variables; ++i) x[i] = mask >> i & 1;
        if (satisfies(f, x)) return x;
    }
    return std::nullopt;
}

/// The {-inf, 0} solution built from a satisfying assignment.
inline TropSolution<MaxPlus> construct_solution(const CnfFormula& f, const std::vector<bool>& x) {
    const std::size_t n = f.variables, dim = f.dimension();
    using T = TropScalar<MaxPlus>;
    TropSolution<MaxPlus> s{TropVector<MaxPlus>(dim), TropVector<MaxPlus>(dim)};
    for (std::size_t i = 1; i <= n; ++i) {
        if (x[i - 1]) {
            s.z[i] = T::unit();
            s.w[n + i] = T::unit();
        } else {
            s.z[n + i] = T::unit();
            s.w[i] = T::unit();
        }
    }
    s.z[0] = T::unit();
    return s;
}

}  // namespace tropcomp
