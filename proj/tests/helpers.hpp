#pragma once

#include <algorithm>
#include <initializer_list>
#include <tuple>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tropcomp/tropcomp.hpp"

namespace tropcomp {

inline bool operator<(const ClassicalSolution& a, const ClassicalSolution& b) {
    return std::tie(a.w, a.z) < std::tie(b.w, b.z);
}

}  // namespace tropcomp

namespace testing_support {

using namespace tropcomp;
using T = TropScalar<MaxPlus>;

inline const T ninf = T::zero();

inline T tp(long v) { return T(v); }

/// Max-plus matrix from rows; std::nullopt is -inf.
inline TropMatrix<MaxPlus> trop_matrix(std::initializer_list<std::initializer_list<std::optional<long>>> rows) {
    std::vector<std::vector<T>> out;
    for (const auto& r : rows) {
        std::vector<T> row;
        for (const auto& v : r) row.push_back(v ? T(*v) : ninf);
        out.push_back(row);
    }
    return TropMatrix<MaxPlus>::from_rows(out);
}

inline TropVector<MaxPlus> trop_vector(std::initializer_list<std::optional<long>> xs) {
    TropVector<MaxPlus> out;
    for (const auto& v : xs) out.push_back(v ? T(*v) : ninf);
    return out;
}

inline RationalMatrix rat_matrix(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (const char* v : r) row.push_back(parse_rational(v));
        out.push_back(row);
    }
    return RationalMatrix::from_rows(out);
}

inline TnecpInstance<MaxPlus> worked_example() {
    constexpr std::nullopt_t x = std::nullopt;
    return {trop_matrix({{0, -2, 3, -5}, {4, x, -2, x}, {2, 0, x, -1}, {x, 0, x, -1}}), trop_vector({0, 0, 0, 0})};
}

/// Block-diagonal instance; blocks are generated independently so each is
/// one component of the complementarity graph (when connected itself).
inline TnecpInstance<MaxPlus> block_diagonal(const std::vector<TnecpInstance<MaxPlus>>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.n();
    TnecpInstance<MaxPlus> t{TropMatrix<MaxPlus>(n, n), TropVector<MaxPlus>(n)};
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.n(); ++i) {
            t.q_plus[off + i] = b.q_plus[i];
            for (std::size_t j = 0; j < b.n(); ++j) t.m_minus(off + i, off + j) = b.m_minus(i, j);
        }
        off += b.n();
    }
    return t;
}

template <class Sol>
bool same_set(std::vector<Sol> a, std::vector<Sol> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace testing_support
