#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace igs {

/// Exact rational scalar used for all construction matrices and coefficient rows.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

/// Parses "num/den" or plain integer strings ("3/4", "-1", "0").
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
}

/// Formats as "num/den", or just "num" when the denominator is 1.
inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Exact binomial coefficient via the multiplicative formula.
inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

inline Integer factorial(int n) {
    Integer result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

/// Scalar-backend conversion point: double for sampling, Rational for exact work.
template <class T>
T from_rational(const Rational& r);

template <>
inline double from_rational<double>(const Rational& r) { return to_double(r); }
template <>
inline Rational from_rational<Rational>(const Rational& r) { return r; }

}  // namespace igs
