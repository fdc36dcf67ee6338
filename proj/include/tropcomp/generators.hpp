#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tropcomp/games.hpp"
#include "tropcomp/instances.hpp"
#include "tropcomp/tropical.hpp"

namespace tropcomp {

// All generators are deterministic functions of their arguments and seed.
// std::mt19937_64 is fully specified; the integer distributions are
// libstdc++'s, so streams are stable per standard library.

struct RandomTnecpOptions {
    long lo = -50;
    long hi = 50;
    double zero_probability = 0.2;
};

/// Random max-plus instance with integer entries. Columns that are entirely
/// zero, or (when `nondegenerate`) whose residual minimum is tied, are
/// resampled until they pass.
inline TnecpInstance<MaxPlus> gen_random_tnecp(std::size_t n, std::uint64_t seed, bool nondegenerate,
                                               const RandomTnecpOptions& opt = {}) {
    if (n == 0) throw invalid_input("n must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> value(opt.lo, opt.hi);
    std::bernoulli_distribution is_zero(opt.zero_probability);
    using T = TropScalar<MaxPlus>;
    TnecpInstance<MaxPlus> t{TropMatrix<MaxPlus>(n, n), TropVector<MaxPlus>(n)};
    for (auto& q : t.q_plus) q = T(value(rng));
    for (std::size_t j = 0; j < n; ++j) {
        while (true) {
            bool any = false;
            for (std::size_t i = 0; i < n; ++i) {
                t.m_minus(i, j) = is_zero(rng) ? T::zero() : T(value(rng));
                any = any || t.m_minus(i, j).is_finite();
            }
            if (!any) continue;
            if (!nondegenerate) break;
            std::vector<ExtendedScalar<MaxPlus>> res;
            for (std::size_t i = 0; i < n; ++i) res.push_back(trop_residual(t.q_plus[i], t.m_minus(i, j)));
            auto lo = *std::min_element(res.begin(), res.end());
            if (std::count(res.begin(), res.end(), lo) == 1) break;
        }
    }
    return t;
}

/// A game in which every column of P has an entry above (r-1) times every
/// other entry of the column, and every column of Q^T likewise with s-1.
/// Non-dominant entries are integers in [0, 9].
inline ClassicalGame gen_dominant_game(std::size_t r, std::size_t s, std::uint64_t seed) {
    if (r == 0 || s == 0) throw invalid_input("r and s must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> small(0, 9), bump(1, 9);
    auto fill_line = [&](std::size_t len, auto&& set) {
        std::uniform_int_distribution<std::size_t> pick(0, len - 1);
        std::size_t top = pick(rng);
        long largest = 0;
        for (std::size_t k = 0; k < len; ++k) {
            if (k == top) continue;
            long v = small(rng);
            largest = std::max(largest, v);
            set(k, Rational(v));
        }
        set(top, Rational(static_cast<long>(len - 1) * largest + bump(rng)));
    };
    ClassicalGame g{RationalMatrix(r, s, Rational(0)), RationalMatrix(r, s, Rational(0))};
    for (std::size_t j = 0; j < s; ++j) fill_line(r, [&](std::size_t i, Rational v) { g.p(i, j) = v; });
    for (std::size_t i = 0; i < r; ++i) fill_line(s, [&](std::size_t j, Rational v) { g.q(i, j) = v; });
    return g;
}

inline NecpInstance gen_dominant_necp(std::size_t r, std::size_t s, std::uint64_t seed) {
    return game_to_necp(gen_dominant_game(r, s, seed));
}

/// Random max-plus game. With `unique_max`, every column of P and of Q^T has
/// a unique maximizing entry.
inline TropicalGame gen_tropical_game(std::size_t r, std::size_t s, std::uint64_t seed, bool unique_max,
                                      const RandomTnecpOptions& opt = {}) {
    if (r == 0 || s == 0) throw invalid_input("r and s must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> value(opt.lo, opt.hi);
    std::bernoulli_distribution is_zero(opt.zero_probability);
    using T = TropScalar<MaxPlus>;
    auto sample_line = [&](std::size_t len) {
        while (true) {
            TropVector<MaxPlus> line(len);
            for (auto& v : line) v = is_zero(rng) ? T::zero() : T(value(rng));
            auto top = trop_sum(line);
            if (top.is_zero()) continue;
            if (unique_max && std::count(line.begin(), line.end(), top) != 1) continue;
            return line;
        }
    };
    TropicalGame g{TropMatrix<MaxPlus>(r, s), TropMatrix<MaxPlus>(r, s)};
    for (std::size_t j = 0; j < s; ++j) {
        auto col = sample_line(r);
        for (std::size_t i = 0; i < r; ++i) g.p(i, j) = col[i];
    }
    for (std::size_t i = 0; i < r; ++i) {
        auto row = sample_line(s);
        for (std::size_t j = 0; j < s; ++j) g.q(i, j) = row[j];
    }
    return g;
}

/// Random columnwise normal matrix with entries in {0, 1/10, ..., 1}. Each
/// column gets one 1-entry, occasionally two; the rest are kept small so
/// that both outcomes of the dominance test are common.
inline RationalMatrix gen_columnwise_normal(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> row(0, n - 1);
    std::uniform_int_distribution<long> tenth(0, 9);
    std::bernoulli_distribution extra_one(0.08), sparse(0.5);
    RationalMatrix a(n, d, Rational(0));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < n; ++i) a(i, j) = sparse(rng) ? Rational(0) : Rational(Rational(tenth(rng)) / 10);
        a(row(rng), j) = 1;
        if (extra_one(rng)) a(row(rng), j) = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d; ++j) a(i, j).canonicalize();
    return a;
}

}  // namespace tropcomp
