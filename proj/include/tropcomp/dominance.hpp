#pragma once

/**
 * @file dominance.hpp
 * @brief Columnwise normalization and the dominance condition.
 *
 * A columnwise normal matrix (entries in [0,1], a 1 in every column) with n
 * rows satisfies the dominance condition when some n x n submatrix covers a
 * permutation matrix and every such submatrix has all row sums below 2.
 * Under it, the feasible bases of A x = b, x >= 0 coincide with the tropical
 * bases of the logarithmic image and both systems are nondegenerate.
 *
 * check_dominance is the polynomial test: every column has exactly one
 * 1-entry, and with C_k the columns whose 1 sits in row k,
 *
 *     C_k nonempty for all k,   sum_k max_{j in C_k} A_ij < 2 for all i.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/instances.hpp"
#include "tropcomp/labels.hpp"
#include "tropcomp/linalg.hpp"
#include "tropcomp/oracles.hpp"

namespace tropcomp {

struct NormalizedSystem {
    RationalMatrix a_hat;
    RationalVector row_scale;  // b
    RationalVector col_scale;  // u_j = max_i A_ij / b_i
    std::vector<std::vector<std::size_t>> one_positions;  // per column
    std::vector<std::vector<std::size_t>> classes;        // C_i per row

    std::size_t rows() const { return a_hat.rows(); }
    std::size_t cols() const { return a_hat.cols(); }
};

namespace detail {

inline void index_ones(NormalizedSystem& ns) {
    ns.one_positions.assign(ns.cols(), {});
    ns.classes.assign(ns.rows(), {});
    for (std::size_t j = 0; j < ns.cols(); ++j)
        for (std::size_t i = 0; i < ns.rows(); ++i)
            if (ns.a_hat(i, j) == 1) {
                ns.one_positions[j].push_back(i);
                ns.classes[i].push_back(j);
            }
}

}  // namespace detail

/// A_hat = diag(b)^-1 A diag(u)^-1.
inline NormalizedSystem normalize(const RationalMatrix& a, const RationalVector& b) {
    const std::size_t n = a.rows(), d = a.cols();
    if (b.size() != n) throw invalid_input("normalize: right-hand side has the wrong length");
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(b[i]) <= 0) throw invalid_input("normalize: entry " + std::to_string(i + 1) + " of b is not positive");
    NormalizedSystem ns{RationalMatrix(n, d), b, RationalVector(d, Rational(0)), {}, {}};
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(a(i, j)) < 0) throw invalid_input("normalize: negative entry in column " + std::to_string(j + 1));
            Rational scaled = a(i, j) / b[i];
            if (scaled > ns.col_scale[j]) ns.col_scale[j] = scaled;
        }
        if (sgn(ns.col_scale[j]) == 0) throw invalid_input("normalize: column " + std::to_string(j + 1) + " is zero");
        for (std::size_t i = 0; i < n; ++i) ns.a_hat(i, j) = a(i, j) / (b[i] * ns.col_scale[j]);
    }
    detail::index_ones(ns);
    return ns;
}

/// Wraps an already columnwise normal matrix (u = 1, b = 1).
inline NormalizedSystem from_columnwise_normal(const RationalMatrix& a_hat) {
    NormalizedSystem ns{a_hat, RationalVector(a_hat.rows(), Rational(1)), RationalVector(a_hat.cols(), Rational(1)),
                        {}, {}};
    for (std::size_t i = 0; i < a_hat.rows(); ++i)
        for (std::size_t j = 0; j < a_hat.cols(); ++j)
            if (sgn(a_hat(i, j)) < 0 || a_hat(i, j) > 1) throw invalid_input("entry outside [0,1]");
    detail::index_ones(ns);
    for (std::size_t j = 0; j < a_hat.cols(); ++j)
        if (ns.one_positions[j].empty()) throw invalid_input("column " + std::to_string(j + 1) + " has no 1-entry");
    return ns;
}

/// The stacked system (I | -M) (w; z) = q of a classical instance, normalized.
inline NormalizedSystem normalize(const NecpInstance& c) {
    require_valid(c);
    return normalize(stacked_matrix(c), c.q);
}

/// A nonnegative system A x = b with b > 0 and A of size n x d.
struct LinearSystem {
    RationalMatrix a;
    RationalVector b;
};

inline std::vector<Violation> validate(const LinearSystem& s) {
    std::vector<Violation> out;
    if (s.b.empty() || s.a.rows() != s.b.size() || s.a.cols() < s.b.size())
        out.push_back({"shape", 0, "A must be n x d with d >= n = |b| > 0"});
    if (!out.empty()) return out;
    for (std::size_t j = 0; j < s.a.cols(); ++j) {
        bool positive = false;
        for (std::size_t i = 0; i < s.a.rows(); ++i) {
            if (sgn(s.a(i, j)) < 0)
                out.push_back({"i", j + 1, "column " + std::to_string(j + 1) + " of A has a negative entry"});
            positive = positive || sgn(s.a(i, j)) > 0;
        }
        if (!positive) out.push_back({"i", j + 1, "column " + std::to_string(j + 1) + " of A is zero"});
    }
    for (std::size_t i = 0; i < s.b.size(); ++i)
        if (sgn(s.b[i]) <= 0) out.push_back({"ii", i + 1, "entry " + std::to_string(i + 1) + " of b is not positive"});
    return out;
}

inline NormalizedSystem normalize(const LinearSystem& s) {
    require_valid(s);
    return normalize(s.a, s.b);
}

struct DominanceWitness {
    enum class Kind { multiple_ones, empty_class, row_sum };
    Kind kind;
    std::size_t index;  // 0-based column (multiple_ones) or row
    Rational sum;       // row_sum only

    std::string describe() const {
        switch (kind) {
            case Kind::multiple_ones:
                return "column " + std::to_string(index + 1) + " has more than one 1-entry";
            case Kind::empty_class:
                return "no column has its 1-entry in row " + std::to_string(index + 1);
            case Kind::row_sum:
                return "row " + std::to_string(index + 1) + " has dominant sum " + format_rational(sum) + " >= 2";
        }
        return {};
    }
};

struct DominanceVerdict {
    bool holds = false;
    std::optional<DominanceWitness> witness;
};

inline DominanceVerdict check_dominance(const NormalizedSystem& ns) {
    using Kind = DominanceWitness::Kind;
    for (std::size_t j = 0; j < ns.cols(); ++j)
        if (ns.one_positions[j].size() != 1) return {false, DominanceWitness{Kind::multiple_ones, j, 0}};
    for (std::size_t k = 0; k < ns.rows(); ++k)
        if (ns.classes[k].empty()) return {false, DominanceWitness{Kind::empty_class, k, 0}};
    for (std::size_t i = 0; i < ns.rows(); ++i) {
        Rational sum = 0;
        for (const auto& cls : ns.classes) {
            Rational best = 0;
            for (auto j : cls) best = std::max(best, Rational(ns.a_hat(i, j)));
            sum += best;
        }
        if (sum >= 2) return {false, DominanceWitness{Kind::row_sum, i, sum}};
    }
    return {true, std::nullopt};
}

inline DominanceVerdict check_dominance(const NecpInstance& c) { return check_dominance(normalize(c)); }
inline DominanceVerdict check_dominance(const LinearSystem& s) { return check_dominance(normalize(s)); }

inline constexpr std::size_t brute_dominance_max_cols = 12;

struct BruteDominance {
    bool holds = false;
    std::size_t covering_submatrices = 0;
};

/// Enumerates every n-column submatrix and every way of covering a
/// permutation matrix with its 1-entries; true iff at least one submatrix
/// covers and every covering submatrix has all row sums < 2.
inline BruteDominance brute_force_dominance(const NormalizedSystem& ns) {
    const std::size_t n = ns.rows(), d = ns.cols();
    if (d > brute_dominance_max_cols) throw guard_exceeded("brute_force_dominance: more than 12 columns");
    BruteDominance out;
    if (n > d) return out;
    bool all_below_two = true;
    std::vector<bool> pick(d, false);
    std::fill(pick.begin(), pick.begin() + n, true);
    do {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < d; ++j)
            if (pick[j]) cols.push_back(j);
        // covers a permutation matrix: assign rows to distinct columns with a 1
        std::vector<bool> used(n, false);
        auto covers = [&](auto&& self, std::size_t row) -> bool {
            if (row == n) return true;
            for (std::size_t k = 0; k < n; ++k) {
                if (used[k] || ns.a_hat(row, cols[k]) != 1) continue;
                used[k] = true;
                if (self(self, row + 1)) return true;
                used[k] = false;
            }
            return false;
        };
        if (!covers(covers, 0)) continue;
        ++out.covering_submatrices;
        for (std::size_t i = 0; i < n; ++i) {
            Rational sum = 0;
            for (auto j : cols) sum += ns.a_hat(i, j);
            if (sum >= 2) all_below_two = false;
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    out.holds = out.covering_submatrices > 0 && all_below_two;
    return out;
}

struct SupportCorrespondence {
    bool matches = false;
    std::vector<LabeledBasis> classical;
    std::vector<LabeledBasis> tropical;
};

/// Compares the supports of all classical solutions with those of all
/// solutions of the logarithmic image (both by brute force).
inline SupportCorrespondence support_correspondence(const NecpInstance& c) {
    auto verdict = check_dominance(c);
    if (!verdict.holds) throw invalid_input("dominance condition fails: " + verdict.witness->describe());
    if (c.n() > brute_tnecp_max_n) throw guard_exceeded("support_correspondence: n exceeds 7");
    SupportCorrespondence out;
    for (const auto& s : brute_lcp(c)) out.classical.push_back(support_of(s));
    for (const auto& s : brute_tnecp(log_image(c))) out.tropical.push_back(support_of(s));
    std::sort(out.classical.begin(), out.classical.end());
    std::sort(out.tropical.begin(), out.tropical.end());
    out.matches = out.classical == out.tropical;
    return out;
}

}  // namespace tropcomp
