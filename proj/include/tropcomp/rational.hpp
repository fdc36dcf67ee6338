#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "tropcomp/error.hpp"

namespace tropcomp {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "-p" or "p/q" with decimal integers. The result is in lowest
/// terms. Throws invalid_input on anything else (including a zero
/// denominator, whitespace and decimal points).
inline Rational parse_rational(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+')
        throw invalid_input("not a rational number: \"" + std::string(text) + "\"");
    if (num.front() == '+') num.remove_prefix(1);
    BigInt p(std::string(num), 10);
    BigInt q(std::string(den), 10);
    if (q == 0) throw invalid_input("zero denominator in \"" + std::string(text) + "\"");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Canonical text form: "p" for integers, "p/q" otherwise, lowest terms.
inline std::string format_rational(const Rational& r) {
    return r.get_str(10);
}

}  // namespace tropcomp
