#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rmideal/errors.hpp"

namespace rmideal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class Real>
Real ipow(const Real& base, std::size_t exponent) {
    Real result(1);
    Real b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

inline BigInt binomial_exact(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= static_cast<std::uint64_t>(n - i);
        r /= static_cast<std::uint64_t>(i + 1);
    }
    return r;
}

/// C(n,k) in the requested arithmetic (exact for Rational).
template <class Real>
Real binomial(std::size_t n, std::size_t k) {
    if constexpr (std::is_floating_point_v<Real>) {
        if (k > n) return Real(0);
        k = std::min(k, n - k);
        Real r(1);
        for (std::size_t i = 0; i < k; ++i) r = r * Real(n - i) / Real(i + 1);
        return r < 0x1.0p53 ? std::round(r) : r;
    } else {
        return Real(binomial_exact(n, k));
    }
}

template <class Real>
Real clamp_unit(const Real& x) {
    if (x < Real(0)) return Real(0);
    if (x > Real(1)) return Real(1);
    return x;
}

namespace detail {

// Decimal digits only; cpp_int would read a leading 0 as an octal prefix.
inline BigInt parse_decimal_integer(std::string digits, const std::string& context) {
    bool negative = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        negative = digits[0] == '-';
        digits.erase(0, 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw ParameterError("not a number: '" + context + "'");
    }
    const auto nonzero = digits.find_first_not_of('0');
    const BigInt value(nonzero == std::string::npos ? std::string("0") : digits.substr(nonzero));
    return negative ? BigInt(-value) : value;
}

}  // namespace detail

/// Parses "0.25", "1/4" or "1e-3" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const BigInt num = detail::parse_decimal_integer(text.substr(0, slash), text);
        const BigInt den = detail::parse_decimal_integer(text.substr(slash + 1), text);
        if (den == 0) throw ParameterError("zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    std::string mantissa = text;
    long exponent = 0;
    const auto e = text.find_first_of("eE");
    if (e != std::string::npos) {
        mantissa = text.substr(0, e);
        const BigInt e10 = detail::parse_decimal_integer(text.substr(e + 1), text);
        if (e10 > 4000 || e10 < -4000) throw ParameterError("exponent out of range in '" + text + "'");
        exponent = e10.convert_to<long>();
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
        negative = mantissa[0] == '-';
        mantissa.erase(0, 1);
    }
    const auto dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    Rational r{detail::parse_decimal_integer(digits, text)};
    const Rational ten(10);
    if (exponent > 0) r *= ipow(ten, static_cast<std::size_t>(exponent));
    if (exponent < 0) r /= ipow(ten, static_cast<std::size_t>(-exponent));
    return negative ? Rational(-r) : r;
}

/// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            c_ += (sum_ - t) + x;
        } else {
            c_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + c_; }

private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double r) { return r; }

}  // namespace rmideal
