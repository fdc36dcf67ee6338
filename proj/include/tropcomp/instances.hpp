#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/matrix.hpp"
#include "tropcomp/rational.hpp"
#include "tropcomp/tropical.hpp"

namespace tropcomp {

using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

/// Tropical Nash equilibrium complementarity problem:
///   w (+) M- (.) z = q+,  w^T (.) z = zero,  z != zero.
template <TropicalDomain D>
struct TnecpInstance {
    TropMatrix<D> m_minus;
    TropVector<D> q_plus;

    std::size_t n() const { return q_plus.size(); }
};

/// Tropical linear complementarity problem:
///   w (+) M- (.) z (+) q- = M+ (.) z (+) q+,  w^T (.) z = zero.
template <TropicalDomain D>
struct TlcpInstance {
    TropMatrix<D> m_minus, m_plus;
    TropVector<D> q_minus, q_plus;

    std::size_t n() const { return q_plus.size(); }
};

/// Classical Nash equilibrium complementarity problem:
///   w = M z + q,  w^T z = 0,  z != 0,  w, z >= 0.
struct NecpInstance {
    RationalMatrix m;
    RationalVector q;

    std::size_t n() const { return q.size(); }
};

template <TropicalDomain D>
struct TropSolution {
    TropVector<D> w, z;
    bool operator==(const TropSolution&) const = default;
    auto operator<=>(const TropSolution&) const = default;
};

struct ClassicalSolution {
    RationalVector w, z;
    bool operator==(const ClassicalSolution&) const = default;
};

/// One failed standing assumption. `index` is the 1-based offending row or
/// column (0 when the violation is not positional).
struct Violation {
    std::string condition;
    std::size_t index = 0;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

namespace detail {

inline void check_square(std::size_t rows, std::size_t cols, std::size_t n, const char* what,
                         std::vector<Violation>& out) {
    if (rows != n || cols != n)
        out.push_back({"shape", 0,
                       std::string(what) + " is " + std::to_string(rows) + "x" + std::to_string(cols) +
                           ", expected " + std::to_string(n) + "x" + std::to_string(n)});
}

}  // namespace detail

template <TropicalDomain D>
std::vector<Violation> validate(const TnecpInstance<D>& t) {
    std::vector<Violation> out;
    const std::size_t n = t.n();
    if (n == 0) out.push_back({"shape", 0, "empty instance"});
    detail::check_square(t.m_minus.rows(), t.m_minus.cols(), n, "M-", out);
    if (!out.empty()) return out;
    for (std::size_t j = 0; j < n; ++j) {
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) any = any || t.m_minus(i, j).is_finite();
        if (!any) out.push_back({"i_trop", j + 1, "column " + std::to_string(j + 1) + " of M- is the zero vector"});
    }
    for (std::size_t i = 0; i < n; ++i)
        if (t.q_plus[i].is_zero())
            out.push_back({"ii_trop", i + 1, "entry " + std::to_string(i + 1) + " of q+ is the tropical zero"});
    return out;
}

template <TropicalDomain D>
std::vector<Violation> validate(const TlcpInstance<D>& t) {
    std::vector<Violation> out;
    const std::size_t n = t.n();
    if (n == 0) out.push_back({"shape", 0, "empty instance"});
    detail::check_square(t.m_minus.rows(), t.m_minus.cols(), n, "M-", out);
    detail::check_square(t.m_plus.rows(), t.m_plus.cols(), n, "M+", out);
    if (t.q_minus.size() != n) out.push_back({"shape", 0, "q- has the wrong length"});
    if (!out.empty()) return out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (t.m_minus(i, j).is_finite() && t.m_plus(i, j).is_finite())
                out.push_back({"signed_support", i + 1,
                               "M+ and M- are both finite at (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ")"});
        if (t.q_minus[i].is_finite() && t.q_plus[i].is_finite())
            out.push_back({"signed_support", i + 1, "q+ and q- are both finite at row " + std::to_string(i + 1)});
    }
    return out;
}

inline std::vector<Violation> validate(const NecpInstance& c) {
    std::vector<Violation> out;
    const std::size_t n = c.n();
    if (n == 0) out.push_back({"shape", 0, "empty instance"});
    detail::check_square(c.m.rows(), c.m.cols(), n, "M", out);
    if (!out.empty()) return out;
    for (std::size_t j = 0; j < n; ++j) {
        bool negative = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(c.m(i, j)) > 0)
                out.push_back({"i", j + 1,
                               "column " + std::to_string(j + 1) + " of M has a positive entry in row " +
                                   std::to_string(i + 1)});
            negative = negative || sgn(c.m(i, j)) < 0;
        }
        if (!negative)
            out.push_back({"i", j + 1, "column " + std::to_string(j + 1) + " of M has no negative entry"});
    }
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(c.q[i]) <= 0) out.push_back({"ii", i + 1, "entry " + std::to_string(i + 1) + " of q is not positive"});
    return out;
}

/// Throws invalid_input listing every violation.
template <class Instance>
void require_valid(const Instance& instance) {
    auto violations = validate(instance);
    if (violations.empty()) return;
    std::string msg = "invalid instance:";
    for (const auto& v : violations) msg += " [" + v.condition + "] " + v.detail + ";";
    throw invalid_input(msg);
}

template <TropicalDomain D>
bool is_solution(const TnecpInstance<D>& t, const TropSolution<D>& s) {
    if (s.w.size() != t.n() || s.z.size() != t.n()) return false;
    if (trop_add(s.w, trop_matvec(t.m_minus, s.z)) != t.q_plus) return false;
    if (!trop_dot(s.w, s.z).is_zero()) return false;
    return !support(s.z).empty();
}

template <TropicalDomain D>
bool is_solution(const TlcpInstance<D>& t, const TropSolution<D>& s) {
    if (s.w.size() != t.n() || s.z.size() != t.n()) return false;
    auto lhs = trop_add(trop_add(s.w, trop_matvec(t.m_minus, s.z)), t.q_minus);
    auto rhs = trop_add(trop_matvec(t.m_plus, s.z), t.q_plus);
    return lhs == rhs && trop_dot(s.w, s.z).is_zero();
}

inline bool is_solution(const NecpInstance& c, const ClassicalSolution& s) {
    const std::size_t n = c.n();
    if (s.w.size() != n || s.z.size() != n) return false;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(s.w[i]) < 0 || sgn(s.z[i]) < 0) return false;
        if (sgn(s.w[i]) != 0 && sgn(s.z[i]) != 0) return false;
        nonzero = nonzero || sgn(s.z[i]) != 0;
        Rational row = c.q[i];
        for (std::size_t j = 0; j < n; ++j) row += c.m(i, j) * s.z[j];
        if (row != s.w[i]) return false;
    }
    return nonzero;
}

/// Logarithmic image of a classical instance, realized exactly in the
/// max-times domain: M-_ij = -M_ij (0 becomes the tropical zero), q+ = q.
inline TnecpInstance<MaxTimes> log_image(const NecpInstance& c) {
    require_valid(c);
    const std::size_t n = c.n();
    TnecpInstance<MaxTimes> t{TropMatrix<MaxTimes>(n, n), TropVector<MaxTimes>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(c.m(i, j)) != 0) t.m_minus(i, j) = TropScalar<MaxTimes>(Rational(-c.m(i, j)));
        t.q_plus[i] = TropScalar<MaxTimes>(c.q[i]);
    }
    return t;
}

/// The system (I | M-) (.) (w; z) = q+ seen column by column: blue columns
/// 0..n-1 carry the identity, red columns n..2n-1 carry M-.
template <TropicalDomain D>
TropScalar<D> stacked_entry(const TnecpInstance<D>& t, std::size_t row, std::size_t column) {
    const std::size_t n = t.n();
    if (column < n) return row == column ? TropScalar<D>::unit() : TropScalar<D>::zero();
    return t.m_minus(row, column - n);
}

}  // namespace tropcomp
