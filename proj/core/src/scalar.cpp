#include "johnsimplex/scalar.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "johnsimplex/errors.hpp"

namespace johnsimplex {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_number(std::string_view text) {
    throw ParseError("unparsable number '" + std::string(text) + "'", 0);
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) bad_number(whole);
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) bad_number(whole);
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad_number(whole);
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

// sign? digits [. digits] [(e|E) sign? digits]
Rational parse_decimal(std::string_view s, std::string_view whole) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string mantissa;
    std::size_t frac_digits = 0;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa.push_back(c);
            if (seen_point) ++frac_digits;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (mantissa.empty()) bad_number(whole);
    long exponent = 0;
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') bad_number(whole);
        const mpz_class e = parse_integer(s.substr(pos + 1), whole);
        if (!e.fits_slong_p() || abs(e) > 100000) bad_number(whole);
        exponent = e.get_si();
    }
    Rational value(mpz_class(mantissa, 10));
    const long shift = exponent - static_cast<long>(frac_digits);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift < 0) {
        value /= power;
    } else {
        value *= power;
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) bad_number(text);
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
        const mpz_class den = parse_integer(trim(s.substr(slash + 1)), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return parse_decimal(s, text);
}

double parse_double(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) bad_number(text);
    if (s.find('/') != std::string_view::npos) {
        return parse_rational(s).get_d();
    }
    const std::string buf(s);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || (errno == ERANGE && std::fabs(v) >= 1.0) || !std::isfinite(v)) bad_number(text);
    return v;
}

std::string format_scalar(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_scalar(const Rational& x) {
    Rational canonical(x);
    canonical.canonicalize();
    return canonical.get_str(10);
}

}  // namespace johnsimplex
