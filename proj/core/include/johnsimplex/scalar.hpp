#pragma once

// Scalar modes. Every geometric and LP routine in the library is a template
// over one of two scalar types: `double` (tolerance-based comparisons) or
// `Rational` (GMP big rationals, exact comparisons, never rounds).

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

namespace johnsimplex {

using Rational = mpq_class;

enum class ScalarMode { Float, Exact };

/// Relative tolerance used by Float-mode comparisons unless overridden.
inline constexpr double kDefaultFloatTolerance = 1e-9;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr ScalarMode mode = ScalarMode::Float;
    static constexpr const char* name = "float";
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr ScalarMode mode = ScalarMode::Exact;
    static constexpr const char* name = "exact";
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <Scalar S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

inline int sign(double x) { return (x > 0) - (x < 0); }
inline int sign(const Rational& x) { return sgn(x); }

inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return abs(x); }

/// Parses "p/q", integers and decimals ("-0.125", "1e-3"). Exact mode keeps
/// decimals exact (0.1 parses to 1/10). Throws ParseError on junk.
Rational parse_rational(std::string_view text);
double parse_double(std::string_view text);

template <Scalar S>
S parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) { return parse_rational(text); }

template <>
inline double parse_scalar<double>(std::string_view text) { return parse_double(text); }

/// Canonical text form: "p/q" (or "p" for integers) for rationals, 17
/// significant digits for doubles. Both round-trip through parse_scalar.
std::string format_scalar(double x);
std::string format_scalar(const Rational& x);

/// Converts a double to a scalar. For Rational the conversion is exact.
template <Scalar S>
S from_double(double x) {
    return S(x);
}

/// The tolerance a comparison should actually use: the given relative
/// tolerance in Float mode, zero in Exact mode.
template <Scalar S>
double effective_tolerance(double tol) {
    return is_exact_v<S> ? 0.0 : tol;
}

/// a <= b, with slack tol * max(1, |a|, |b|) in Float mode.
inline bool leq(double a, double b, double tol) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return a <= b + tol * scale;
}
inline bool leq(const Rational& a, const Rational& b, double /*tol*/) { return a <= b; }

inline bool approx_equal(double a, double b, double tol) { return leq(a, b, tol) && leq(b, a, tol); }
inline bool approx_equal(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }

}  // namespace johnsimplex
