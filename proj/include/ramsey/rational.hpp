#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace ramsey {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", a plain integer, or a finite decimal ("0.125", "-1.5e-2") into an exact rational.
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&] { throw std::invalid_argument("not a number: '" + std::string(text) + "'"); };
    if (text.empty()) fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num, den;
        try {
            num = Integer(std::string(text.substr(0, slash)));
            den = Integer(std::string(text.substr(slash + 1)));
        } catch (const std::exception&) {
            fail();
        }
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    std::string mantissa(text);
    long exponent = 0;
    if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
        try {
            exponent = std::stol(mantissa.substr(e + 1));
        } catch (const std::exception&) {
            fail();
        }
        mantissa.resize(e);
    }
    bool negative = false;
    std::size_t pos = 0;
    if (pos < mantissa.size() && (mantissa[pos] == '-' || mantissa[pos] == '+')) {
        negative = mantissa[pos] == '-';
        ++pos;
    }
    std::string digits;
    bool seen_point = false, seen_digit = false;
    for (; pos < mantissa.size(); ++pos) {
        char c = mantissa[pos];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) --exponent;
        } else {
            fail();
        }
    }
    if (!seen_digit) fail();

    Integer value(digits);
    Integer scale = 1;
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) scale *= 10;
    Rational result = exponent < 0 ? Rational(value, scale) : Rational(value * scale);
    return negative ? Rational(-result) : result;
}

inline std::string to_string(const Rational& q)
{
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

template <typename T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

/// Converts an exact literal into the working scalar type.
template <typename T>
T from_rational(const Rational& q)
{
    if constexpr (is_exact_v<T>) {
        return q;
    } else {
        return static_cast<T>(to_double(q));
    }
}

template <typename T>
T make_fraction(long num, long den)
{
    return from_rational<T>(Rational(num, den));
}

template <typename T>
T abs_value(const T& x)
{
    return x < T(0) ? T(-x) : x;
}

/// Exact power with non-negative integer exponent.
template <typename T>
T power(T base, unsigned exponent)
{
    T result(1);
    while (exponent) {
        if (exponent & 1u) result *= base;
        base *= base;
        exponent >>= 1u;
    }
    return result;
}

/// 2^e for any integer e, exact in rational mode.
template <typename T>
T pow2(int e)
{
    if (e >= 0) return power(T(2), static_cast<unsigned>(e));
    return T(1) / power(T(2), static_cast<unsigned>(-e));
}

inline std::string format_value(double x)
{
    char buf[64];
    for (int precision : {15, 16, 17}) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

inline std::string format_value(const Rational& q) { return to_string(q); }

}  // namespace ramsey
