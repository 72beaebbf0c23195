#pragma once

// Dual-mode scalar layer: all analysis code is templated on a scalar type,
// either exact rationals (GMP-backed) or IEEE doubles.  The traits struct
// carries the few policy decisions that differ between the two (pivot
// selection, zero tests, conversions).

#include <boost/multiprecision/gmp.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parrondo {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

enum class Mode { exact, floating };

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter or flag rejected before any computation.
struct ValidationError : Error {
    using Error::Error;
};

// Linear system singular; for stationary solves this signals a reducible chain.
struct SingularMatrixError : Error {
    using Error::Error;
};
struct ReducibleChainError : SingularMatrixError {
    using SingularMatrixError::SingularMatrixError;
};

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static constexpr bool is_ordered = true;
    static constexpr double pivot_tol = 1e-12;

    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rational(const Rational& r) { return r.convert_to<double>(); }
    static double to_double(double x) { return x; }
    static bool is_zero(double x) { return x == 0.0; }
    static bool near_zero(double x) { return std::fabs(x) < 1e-9; }
    static bool pivot_usable(double x) { return std::fabs(x) > pivot_tol; }
    static bool pivot_better(double a, double b) { return std::fabs(a) > std::fabs(b); }
    static std::string str(double x) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return buf;
    }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr bool is_ordered = true;

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }
    static double to_double(const Rational& x) { return x.convert_to<double>(); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool near_zero(const Rational& x) { return x.is_zero(); }
    static bool pivot_usable(const Rational& x) { return !x.is_zero(); }
    // Exact arithmetic needs any nonzero pivot; keep the first one found.
    static bool pivot_better(const Rational&, const Rational&) { return false; }
    static std::string str(const Rational& x) {
        return numerator(x).str() + "/" + denominator(x).str();
    }
};

template <class T>
T scalar_cast(const Rational& r) {
    return scalar_traits<T>::from_rational(r);
}

inline BigInt pow_int(const BigInt& base, unsigned exp) {
    BigInt out(1), b = base;
    for (unsigned e = exp; e != 0; e >>= 1) {
        if (e & 1) out *= b;
        b *= b;
    }
    return out;
}

namespace detail {

// GMP's string constructor auto-detects octal/hex from leading zeros; always
// read base 10.
inline BigInt parse_base10(std::string s) {
    if (s.empty()) throw ValidationError("empty integer literal");
    size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    size_t first = start;
    while (first + 1 < s.size() && s[first] == '0') ++first;
    std::string trimmed = s.substr(0, start) + s.substr(first);
    return BigInt(trimmed);
}

}  // namespace detail

// Accepts "a/b", integers, and decimal literals ("0.125", "1e-3").
// Decimals convert exactly (digits over a power of ten).
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw ValidationError("cannot parse number: '" + std::string(text) + "'"); };
    if (text.empty()) fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string num(text.substr(0, slash)), den(text.substr(slash + 1));
        if (num.empty() || den.empty()) fail();
        try {
            BigInt n = detail::parse_base10(num), d = detail::parse_base10(den);
            return Rational(n, d);
        } catch (const std::exception&) {
            fail();
        }
    }

    size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
    std::string digits;
    long frac_len = 0;
    bool seen_digit = false, seen_dot = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            break;
        } else {
            fail();
        }
    }
    if (!seen_digit) fail();
    long exp10 = 0;
    if (pos < text.size()) {  // exponent part
        auto rest = text.substr(pos + 1);
        if (rest.empty()) fail();
        auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exp10);
        if (ec != std::errc() || p != rest.data() + rest.size()) fail();
    }
    Rational r(detail::parse_base10(digits), pow_int(10, static_cast<unsigned>(frac_len)));
    long e = exp10;
    if (e > 0)
        r *= Rational(pow_int(10, static_cast<unsigned>(e)));
    else if (e < 0)
        r /= Rational(pow_int(10, static_cast<unsigned>(-e)));
    return negative ? Rational(-r) : r;
}

// True when the literal is something other than a plain decimal/integer,
// i.e. was written as an explicit fraction.
inline bool is_fraction_literal(std::string_view text) {
    return text.find('/') != std::string_view::npos;
}

inline std::string rational_str(const Rational& x) { return scalar_traits<Rational>::str(x); }
inline std::string double_str(double x) { return scalar_traits<double>::str(x); }

}  // namespace parrondo
