#pragma once

// Special functions for the quantum-state densities: log-gamma, associated
// Laguerre and Gegenbauer polynomials by recurrence, and |Y_lm|^2.
//
// Factorial ratios such as (n-l-1)!/(n+l)! are carried in log space
// (LogScaled) and exponentiated once per evaluation.

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gencomplex/errors.hpp"

namespace gencomplex {

/// A real number stored as sign * exp(log_magnitude).
struct LogScaled {
    int sign = 0;
    double log_magnitude = -std::numeric_limits<double>::infinity();

    static LogScaled zero() { return {}; }

    static LogScaled from_log(double log_magnitude, int sign = 1)
    {
        if (sign == 0 || log_magnitude == -std::numeric_limits<double>::infinity())
            return zero();
        return {sign > 0 ? 1 : -1, log_magnitude};
    }

    static LogScaled from_double(double x)
    {
        if (x == 0.0)
            return zero();
        return {x > 0 ? 1 : -1, std::log(std::abs(x))};
    }

    double decode() const
    {
        if (sign == 0)
            return 0.0;
        return sign * std::exp(log_magnitude);
    }

    LogScaled& operator*=(const LogScaled& rhs)
    {
        if (sign == 0 || rhs.sign == 0)
            return *this = zero();
        sign *= rhs.sign;
        log_magnitude += rhs.log_magnitude;
        return *this;
    }

    friend LogScaled operator*(LogScaled lhs, const LogScaled& rhs) { return lhs *= rhs; }

    friend LogScaled operator/(LogScaled lhs, const LogScaled& rhs)
    {
        if (rhs.sign == 0)
            throw DomainError("LogScaled: division by zero");
        if (lhs.sign == 0)
            return lhs;
        return {lhs.sign * rhs.sign, lhs.log_magnitude - rhs.log_magnitude};
    }

    /// Real power; requires a nonnegative value unless exponent is an integer.
    LogScaled pow(double exponent) const
    {
        if (sign == 0) {
            if (exponent > 0)
                return zero();
            throw DomainError("LogScaled: 0 to nonpositive power");
        }
        if (sign < 0 && exponent != std::floor(exponent))
            throw DomainError("LogScaled: negative base with fractional exponent");
        int s = 1;
        if (sign < 0 && std::fmod(std::abs(exponent), 2.0) == 1.0)
            s = -1;
        return {s, log_magnitude * exponent};
    }

    LogScaled sqrt() const { return pow(0.5); }
};

inline double log_gamma(double x)
{
    if (!(x > 0.0))
        throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
    return std::lgamma(x);
}

/// ln(n!) for n >= 0.
inline double log_factorial(int n)
{
    if (n < 0)
        throw DomainError("log_factorial: negative argument");
    return log_gamma(n + 1.0);
}

inline constexpr int kMaxPolynomialDegree = 60;

/// L_degree^superscript(x) via the three-term recurrence in the degree.
inline double assoc_laguerre(int degree, double superscript, double x)
{
    if (degree < 0 || degree > kMaxPolynomialDegree)
        throw DomainError("assoc_laguerre: degree out of range");
    if (!(superscript > -1.0))
        throw DomainError("assoc_laguerre: superscript must exceed -1");

    double prev = 1.0;
    if (degree == 0)
        return prev;
    double cur = 1.0 + superscript - x;
    for (int k = 2; k <= degree; ++k) {
        const double next = ((2.0 * k - 1.0 + superscript - x) * cur - (k - 1.0 + superscript) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Gegenbauer (ultraspherical) polynomial C_degree^superscript(t) on [-1, 1].
inline double gegenbauer(int degree, double superscript, double t)
{
    if (degree < 0 || degree > kMaxPolynomialDegree)
        throw DomainError("gegenbauer: degree out of range");
    if (!(superscript > 0.0))
        throw DomainError("gegenbauer: superscript must be positive");
    if (!(std::abs(t) <= 1.0))
        throw DomainError("gegenbauer: argument outside [-1, 1]");

    double prev = 1.0;
    if (degree == 0)
        return prev;
    double cur = 2.0 * superscript * t;
    for (int k = 2; k <= degree; ++k) {
        const double next = (2.0 * (k + superscript - 1.0) * t * cur - (k + 2.0 * superscript - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    return cur;
}

inline constexpr int kMaxAngularMomentum = 40;

// |Y_lm(theta, phi)|^2, independent of phi.
//
// Condon-Shortley phase is used for P_l^m, although only the modulus is
// returned. The sectoral value P_m^m = (-1)^m (2m-1)!! sin^m(theta) is kept
// in log form and the upward recurrence in l runs on the ratio P_l^m / P_m^m,
// so nothing overflows for l <= 40.
inline double sph_harmonic_modsq(int l, int m, double theta)
{
    if (l < 0 || l > kMaxAngularMomentum)
        throw DomainError("sph_harmonic_modsq: l out of range");
    const int am = std::abs(m);
    if (am > l)
        throw DomainError("sph_harmonic_modsq: |m| > l");

    const double x = std::cos(theta);
    const double s = std::sin(theta);

    // log of (2l+1)/(4 pi) * (l-|m|)!/(l+|m|)!
    const double log_norm = std::log((2.0 * l + 1.0) / (4.0 * std::numbers::pi)) + log_factorial(l - am) -
                            log_factorial(l + am);

    LogScaled sectoral = LogScaled::from_log(0.0);
    if (am > 0) {
        if (s <= 0.0)
            return 0.0;
        // (2m-1)!! = (2m)! / (2^m m!)
        const double log_double_fact = log_factorial(2 * am) - am * std::numbers::ln2 - log_factorial(am);
        sectoral = LogScaled::from_log(log_double_fact + am * std::log(std::abs(s)), am % 2 == 0 ? 1 : -1);
    }

    // ratio P_l^m / P_m^m
    double prev = 1.0;
    double cur = 1.0;
    if (l > am) {
        cur = x * (2.0 * am + 1.0);
        for (int k = am + 2; k <= l; ++k) {
            const double next = (x * (2.0 * k - 1.0) * cur - (k + am - 1.0) * prev) / (k - am);
            prev = cur;
            cur = next;
        }
    }
    const LogScaled value = LogScaled::from_log(0.5 * log_norm) * sectoral * LogScaled::from_double(cur);
    const double v = value.decode();
    return v * v;
}

}  // namespace gencomplex
