#pragma once

/**
 * @file tropical.hpp
 * @brief Exact tropical semifield arithmetic.
 *
 * Two value domains share one interface:
 *
 *   MaxPlus   rationals with -inf as zero, x (+) y = max, x (.) y = x + y
 *   MaxTimes  positive rationals with 0 as zero, x (+) y = max, x (.) y = x * y
 *
 * MaxTimes is the exact stand-in for the logarithmic image of a classical
 * instance: log is monotone, so every comparison of residuals b (/) a made in
 * the max-plus image of positive data is the same comparison of the ratios
 * b / a. The domain is a template parameter, so mixing domains is a compile
 * error rather than a runtime one.
 */

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tropcomp/error.hpp"
#include "tropcomp/matrix.hpp"
#include "tropcomp/rational.hpp"

namespace tropcomp {

struct MaxPlus {
    static constexpr const char* name = "additive";
    static Rational unit() { return Rational(0); }
    static Rational times(const Rational& a, const Rational& b) { return a + b; }
    static Rational over(const Rational& b, const Rational& a) { return b - a; }
    static bool admissible(const Rational&) { return true; }
};

struct MaxTimes {
    static constexpr const char* name = "multiplicative";
    static Rational unit() { return Rational(1); }
    static Rational times(const Rational& a, const Rational& b) { return a * b; }
    static Rational over(const Rational& b, const Rational& a) { return b / a; }
    static bool admissible(const Rational& r) { return sgn(r) > 0; }
};

template <class D>
concept TropicalDomain = requires(const Rational& r) {
    { D::unit() } -> std::convertible_to<Rational>;
    { D::times(r, r) } -> std::convertible_to<Rational>;
    { D::over(r, r) } -> std::convertible_to<Rational>;
    { D::admissible(r) } -> std::convertible_to<bool>;
};

/// An element of the tropical semifield over domain D: either the tropical
/// zero or a finite value. Default construction gives the zero.
template <TropicalDomain D>
class TropScalar {
public:
    using domain = D;

    TropScalar() = default;
    explicit TropScalar(Rational value) : value_(std::move(value)) {
        if (!D::admissible(*value_))
            throw invalid_input(std::string("value ") + format_rational(*value_) +
                                " is not a finite element of the " + D::name + " domain");
    }
    explicit TropScalar(long value) : TropScalar(Rational(value)) {}
    explicit TropScalar(int value) : TropScalar(Rational(value)) {}

    static TropScalar zero() { return TropScalar(); }
    static TropScalar unit() { return TropScalar(D::unit()); }

    bool is_zero() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }

    const Rational& value() const {
        if (!value_) throw invalid_input("tropical zero has no finite value");
        return *value_;
    }

    friend bool operator==(const TropScalar& a, const TropScalar& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
        return *a.value_ == *b.value_;
    }

    friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
        if (a.is_zero() || b.is_zero()) return b.is_zero() <=> a.is_zero();
        int c = cmp(*a.value_, *b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const {
        if (is_zero()) return std::is_same_v<D, MaxPlus> ? "-inf" : "0*";
        return format_rational(*value_);
    }

    friend std::ostream& operator<<(std::ostream& os, const TropScalar& s) { return os << s.to_string(); }

private:
    std::optional<Rational> value_;
};

template <TropicalDomain D>
using TropVector = std::vector<TropScalar<D>>;

template <TropicalDomain D>
using TropMatrix = Matrix<TropScalar<D>>;

template <TropicalDomain D>
TropScalar<D> trop_add(const TropScalar<D>& a, const TropScalar<D>& b) {
    return a < b ? b : a;
}

template <TropicalDomain D>
TropScalar<D> trop_mul(const TropScalar<D>& a, const TropScalar<D>& b) {
    if (a.is_zero() || b.is_zero()) return TropScalar<D>::zero();
    return TropScalar<D>(D::times(a.value(), b.value()));
}

/// Tropical sum of a range; the zero for an empty range.
template <TropicalDomain D>
TropScalar<D> trop_sum(const TropVector<D>& xs) {
    TropScalar<D> acc;
    for (const auto& x : xs) acc = trop_add(acc, x);
    return acc;
}

/// Inner product x^T (.) y.
template <TropicalDomain D>
TropScalar<D> trop_dot(const TropVector<D>& x, const TropVector<D>& y) {
    if (x.size() != y.size()) throw invalid_input("tropical dot product: length mismatch");
    TropScalar<D> acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc = trop_add(acc, trop_mul(x[i], y[i]));
    return acc;
}

template <TropicalDomain D>
TropVector<D> trop_matvec(const TropMatrix<D>& m, const TropVector<D>& x) {
    if (m.cols() != x.size())
        throw invalid_input("tropical matrix-vector product: " + std::to_string(m.cols()) +
                            " columns against a vector of length " + std::to_string(x.size()));
    TropVector<D> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] = trop_add(out[i], trop_mul(m(i, j), x[j]));
    return out;
}

template <TropicalDomain D>
TropVector<D> trop_add(const TropVector<D>& a, const TropVector<D>& b) {
    if (a.size() != b.size()) throw invalid_input("tropical vector sum: length mismatch");
    TropVector<D> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = trop_add(a[i], b[i]);
    return out;
}

template <TropicalDomain D>
TropMatrix<D> trop_matmul(const TropMatrix<D>& a, const TropMatrix<D>& b) {
    if (a.cols() != b.rows()) throw invalid_input("tropical matrix product: inner dimensions differ");
    TropMatrix<D> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = trop_add(out(i, j), trop_mul(a(i, k), b(k, j)));
        }
    return out;
}

/// Value of a residual b (/) a: an element of the semifield or +inf.
/// Only ever produced by trop_residual; never stored in a matrix.
template <TropicalDomain D>
class ExtendedScalar {
public:
    static ExtendedScalar plus_infinity() {
        ExtendedScalar e;
        e.infinite_ = true;
        return e;
    }
    ExtendedScalar() = default;
    explicit ExtendedScalar(TropScalar<D> s) : scalar_(std::move(s)) {}

    bool is_plus_infinity() const { return infinite_; }
    bool is_zero() const { return !infinite_ && scalar_.is_zero(); }
    bool is_finite() const { return !infinite_ && scalar_.is_finite(); }
    /// True when the residual lies in the semifield (zero or finite).
    bool in_semifield() const { return !infinite_; }

    const TropScalar<D>& scalar() const {
        if (infinite_) throw invalid_input("+inf is not an element of the semifield");
        return scalar_;
    }

    friend bool operator==(const ExtendedScalar& a, const ExtendedScalar& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.scalar_ == b.scalar_;
    }
    friend std::strong_ordering operator<=>(const ExtendedScalar& a, const ExtendedScalar& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.scalar_ <=> b.scalar_;
    }

    std::string to_string() const { return infinite_ ? "+inf" : scalar_.to_string(); }

private:
    TropScalar<D> scalar_;
    bool infinite_ = false;
};

/// b (/) a: the largest lambda with lambda (.) a <= b, with zero (/) zero = +inf.
template <TropicalDomain D>
ExtendedScalar<D> trop_residual(const TropScalar<D>& b, const TropScalar<D>& a) {
    if (a.is_zero()) return ExtendedScalar<D>::plus_infinity();
    if (b.is_zero()) return ExtendedScalar<D>(TropScalar<D>::zero());
    return ExtendedScalar<D>(TropScalar<D>(D::over(b.value(), a.value())));
}

/// Indices of entries distinct from the tropical zero.
template <TropicalDomain D>
std::vector<std::size_t> support(const TropVector<D>& x) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].is_finite()) s.push_back(i);
    return s;
}

template <TropicalDomain D>
std::string to_string(const TropVector<D>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].to_string();
    return s + ")";
}

}  // namespace tropcomp
