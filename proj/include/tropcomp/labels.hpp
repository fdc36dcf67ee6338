#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "tropcomp/matching_solver.hpp"

namespace tropcomp {

/// An element of [n] (+) [n]: blue columns carry w, red columns carry z.
/// Labels are 0-based in code and 1-based in every printed form.
struct LabeledColumn {
    std::size_t label;
    Color color;

    bool operator==(const LabeledColumn&) const = default;
    auto operator<=>(const LabeledColumn&) const = default;

    LabeledColumn twin() const { return {label, color == Color::blue ? Color::red : Color::blue}; }

    /// Position in the stacked system (I | M): blue i -> i, red j -> n + j.
    std::size_t index(std::size_t n) const { return color == Color::blue ? label : n + label; }

    static LabeledColumn from_index(std::size_t idx, std::size_t n) {
        return idx < n ? LabeledColumn{idx, Color::blue} : LabeledColumn{idx - n, Color::red};
    }

    std::string to_string() const { return "(" + std::to_string(label + 1) + "," + tropcomp::to_string(color) + ")"; }
};

/// Sorted set of labeled columns.
using LabeledBasis = std::vector<LabeledColumn>;

inline LabeledBasis to_labeled(const std::vector<std::size_t>& columns, std::size_t n) {
    LabeledBasis out;
    for (auto c : columns) out.push_back(LabeledColumn::from_index(c, n));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::size_t> to_indices(const LabeledBasis& basis, std::size_t n) {
    std::vector<std::size_t> out;
    for (const auto& c : basis) out.push_back(c.index(n));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_fully_labeled(const LabeledBasis& basis, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (const auto& c : basis) seen[c.label] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// All labels but one present, and j_star present in both colors.
inline bool is_almost_fully_labeled(const LabeledBasis& basis, std::size_t n, std::size_t j_star) {
    std::vector<int> count(n, 0);
    for (const auto& c : basis) ++count[c.label];
    return count[j_star] == 2 && std::count(count.begin(), count.end(), 0) == 1;
}

inline LabeledBasis initial_basis(std::size_t n) {
    LabeledBasis b;
    for (std::size_t i = 0; i < n; ++i) b.push_back({i, Color::blue});
    return b;
}

inline std::string to_string(const LabeledBasis& basis) {
    std::string s = "{";
    for (std::size_t k = 0; k < basis.size(); ++k) s += (k ? " " : "") + basis[k].to_string();
    return s + "}";
}

/// Support of a (w, z) pair as labeled columns: blue i when w_i is nonzero,
/// red j when z_j is nonzero.
template <class Vec, class IsNonzero>
LabeledBasis support_of(const Vec& w, const Vec& z, IsNonzero nonzero) {
    LabeledBasis out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (nonzero(w[i])) out.push_back({i, Color::blue});
    for (std::size_t j = 0; j < z.size(); ++j)
        if (nonzero(z[j])) out.push_back({j, Color::red});
    std::sort(out.begin(), out.end());
    return out;
}

template <TropicalDomain D>
LabeledBasis support_of(const TropSolution<D>& s) {
    return support_of(s.w, s.z, [](const TropScalar<D>& x) { return x.is_finite(); });
}

inline LabeledBasis support_of(const ClassicalSolution& s) {
    return support_of(s.w, s.z, [](const Rational& x) { return sgn(x) != 0; });
}

}  // namespace tropcomp
