#pragma once

// Position- and momentum-space densities of the hydrogen atom, the 3-D
// isotropic harmonic oscillator and the infinite square well. Atomic units.

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "gencomplex/complexity.hpp"
#include "gencomplex/densities.hpp"
#include "gencomplex/errors.hpp"
#include "gencomplex/order.hpp"
#include "gencomplex/quadrature.hpp"
#include "gencomplex/specfun.hpp"

namespace gencomplex {

enum class Space { Position, Momentum };

inline const char* to_string(Space s) { return s == Space::Position ? "position" : "momentum"; }

struct HydrogenState {
    int n = 1;
    int l = 0;
    int m = 0;
    Space space = Space::Position;

    void validate() const
    {
        if (n < 1 || l < 0 || l > n - 1 || std::abs(m) > l || l > kMaxAngularMomentum ||
            n - l - 1 > kMaxPolynomialDegree)
            throw DomainError("invalid hydrogen state (n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                              ", m=" + std::to_string(m) + ")");
    }
};

struct OscillatorState {
    int n = 0;
    int l = 0;
    int m = 0;
    double strength = 1.0;    // lambda in V(r) = lambda^2 r^2 / 2
    Space space = Space::Position;

    int shell() const { return 2 * n + l; }

    void validate() const
    {
        if (n < 0 || l < 0 || std::abs(m) > l || l > kMaxAngularMomentum || n > kMaxPolynomialDegree)
            throw DomainError("invalid oscillator state (n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                              ", m=" + std::to_string(m) + ")");
        if (!(strength > 0.0) || !std::isfinite(strength))
            throw DomainError("oscillator strength must be positive");
    }
};

struct SquareWellState {
    int k = 1;
    double width = 1.0;    // L
    int dimensions = 1;

    void validate() const
    {
        if (k < 1)
            throw DomainError("square well: k must be >= 1");
        if (!(width > 0.0) || !std::isfinite(width))
            throw DomainError("square well: width must be positive");
        if (dimensions < 1)
            throw DomainError("square well: dimensions must be >= 1");
    }
};

/// Hydrogen radial function R_nl(r).
inline double hydrogen_radial_position(int n, int l, double r)
{
    HydrogenState{n, l, 0}.validate();
    const double x = 2.0 * r / n;
    const double log_prefactor =
        std::numbers::ln2 - 2.0 * std::log(double(n)) + 0.5 * (log_factorial(n - l - 1) - log_factorial(n + l));
    if (l > 0 && x == 0.0)
        return 0.0;
    const double log_power = l > 0 ? l * std::log(x) : 0.0;
    const LogScaled value = LogScaled::from_log(log_prefactor + log_power - r / n) *
                            LogScaled::from_double(assoc_laguerre(n - l - 1, 2.0 * l + 1.0, x));
    return value.decode();
}

/// Hydrogen momentum-space radial function, a Gegenbauer polynomial in
/// (n^2 p^2 - 1)/(n^2 p^2 + 1).
inline double hydrogen_radial_momentum(int n, int l, double p)
{
    HydrogenState{n, l, 0}.validate();
    const double np = n * p;
    const double q = np * np + 1.0;
    const double t = (np * np - 1.0) / q;
    const double log_prefactor = 0.5 * (std::log(2.0 / std::numbers::pi) + log_factorial(n - l - 1) -
                                         log_factorial(n + l)) +
                                 2.0 * std::log(double(n)) + (2.0 * l + 2.0) * std::numbers::ln2 +
                                 log_factorial(l);
    if (l > 0 && np == 0.0)
        return 0.0;
    const double log_power = l > 0 ? l * std::log(np) : 0.0;
    const LogScaled value = LogScaled::from_log(log_prefactor + log_power - (l + 2.0) * std::log(q)) *
                            LogScaled::from_double(gegenbauer(n - l - 1, l + 1.0, std::clamp(t, -1.0, 1.0)));
    return value.decode();
}

inline Density hydrogen_density(const HydrogenState& s)
{
    s.validate();
    const int n = s.n;
    const int l = s.l;
    const int m = s.m;
    const std::string name = std::string("hydrogen (") + std::to_string(n) + "," + std::to_string(l) + "," +
                             std::to_string(m) + ") " + to_string(s.space);
    Profile angular = [l, m](double theta) { return sph_harmonic_modsq(l, m, theta); };
    if (s.space == Space::Position) {
        Profile radial = [n, l](double r) {
            const double v = hydrogen_radial_position(n, l, r);
            return v * v;
        };
        return Density::spherical(std::move(radial), std::move(angular), std::numeric_limits<double>::infinity(),
                                  2.0 * n * n, name);
    }
    Profile radial = [n, l](double p) {
        const double v = hydrogen_radial_momentum(n, l, p);
        return v * v;
    };
    return Density::spherical(std::move(radial), std::move(angular), std::numeric_limits<double>::infinity(),
                              2.0 / n, name);
}

/// Oscillator radial function in position space for V = lambda^2 r^2 / 2.
inline double oscillator_radial_position(int n, int l, double strength, double r)
{
    OscillatorState{n, l, 0, strength}.validate();
    const double log_prefactor =
        0.5 * (std::numbers::ln2 + log_factorial(n) + (l + 1.5) * std::log(strength) - log_gamma(n + l + 1.5));
    if (l > 0 && r == 0.0)
        return 0.0;
    const double log_power = l > 0 ? l * std::log(r) : 0.0;
    const double x = strength * r * r;
    const LogScaled value = LogScaled::from_log(log_prefactor + log_power - 0.5 * x) *
                            LogScaled::from_double(assoc_laguerre(n, l + 0.5, x));
    return value.decode();
}

/// Momentum-space oscillator radial function: the position form with lambda -> 1/lambda.
inline double oscillator_radial_momentum(int n, int l, double strength, double p)
{
    OscillatorState{n, l, 0, strength}.validate();
    const double log_prefactor =
        0.5 * (std::numbers::ln2 + log_factorial(n) - (l + 1.5) * std::log(strength) - log_gamma(n + l + 1.5));
    if (l > 0 && p == 0.0)
        return 0.0;
    const double log_power = l > 0 ? l * std::log(p) : 0.0;
    const double x = p * p / strength;
    const LogScaled value = LogScaled::from_log(log_prefactor + log_power - 0.5 * x) *
                            LogScaled::from_double(assoc_laguerre(n, l + 0.5, x));
    return value.decode();
}

inline Density oscillator_density(const OscillatorState& s)
{
    s.validate();
    const int n = s.n;
    const int l = s.l;
    const int m = s.m;
    const double lambda = s.strength;
    const double turning = std::sqrt(2.0 * s.shell() + 3.0);
    const std::string name = std::string("oscillator (") + std::to_string(n) + "," + std::to_string(l) + "," +
                             std::to_string(m) + ") " + to_string(s.space);
    Profile angular = [l, m](double theta) { return sph_harmonic_modsq(l, m, theta); };
    if (s.space == Space::Position) {
        Profile radial = [n, l, lambda](double r) {
            const double v = oscillator_radial_position(n, l, lambda, r);
            return v * v;
        };
        return Density::spherical(std::move(radial), std::move(angular), std::numeric_limits<double>::infinity(),
                                  turning / std::sqrt(lambda), name);
    }
    Profile radial = [n, l, lambda](double p) {
        const double v = oscillator_radial_momentum(n, l, lambda, p);
        return v * v;
    };
    return Density::spherical(std::move(radial), std::move(angular), std::numeric_limits<double>::infinity(),
                              turning * std::sqrt(lambda), name);
}

/// All (n, l) with 2n + l = e, highest l first.
inline std::vector<std::pair<int, int>> oscillator_shell(int e)
{
    if (e < 0)
        throw DomainError("oscillator_shell: e must be nonnegative");
    std::vector<std::pair<int, int>> out;
    for (int l = e; l >= 0; l -= 2)
        out.emplace_back((e - l) / 2, l);
    return out;
}

/// (2/L) sin^2(k pi x / L) on [0, L]. The interior nodes are passed as
/// breakpoints so fractional powers of the density integrate cleanly.
inline Density square_well_density(const SquareWellState& s)
{
    s.validate();
    if (s.dimensions != 1)
        throw DomainError("square_well_density: only the 1-D density is evaluable");
    const int k = s.k;
    const double width = s.width;
    std::vector<double> nodes;
    for (int j = 1; j < k; ++j)
        nodes.push_back(j * width / k);
    return Density::line(
        [k, width](double x) {
            const double v = std::sin(k * std::numbers::pi * x / width);
            return 2.0 / width * v * v;
        },
        0.0, width, std::move(nodes), width, "square well k=" + std::to_string(k));
}

// g(alpha) = exp(R^(alpha)) of the square-well density with L as the unit of
// length, from the single-arch integral over t in [0, pi]; independent of k.
inline double square_well_g(const OrderParam& alpha, const QuadratureSpec& s = QuadratureSpec{32, 1e-13})
{
    switch (alpha.kind()) {
    case OrderParam::Kind::ZeroLimit:
        return 1.0;
    case OrderParam::Kind::InfinityLimit:
        return 0.5;
    case OrderParam::Kind::ShannonLimit: {
        auto h = [](double t) {
            const double f = 2.0 * std::sin(t) * std::sin(t);
            return f > 0.0 ? f * std::log(f) : 0.0;
        };
        const double entropy = -integrate(h, 0.0, std::numbers::pi, s).value / std::numbers::pi;
        return std::exp(entropy);
    }
    case OrderParam::Kind::Finite:
        break;
    }
    const double a = alpha.value();
    auto h = [a](double t) { return std::pow(std::sin(t), 2.0 * a); };
    const double integral = integrate(h, 0.0, std::numbers::pi, s).value;
    return std::exp((a * std::numbers::ln2 - std::log(std::numbers::pi) + std::log(integral)) / (1.0 - a));
}

/// C^(alpha,inf) of any eigenstate of a d-dimensional cubic box: (2 g(alpha))^d.
inline double box_complexity(const OrderParam& alpha, int dimensions)
{
    if (dimensions < 1)
        throw DomainError("box_complexity: dimensions must be >= 1");
    return std::pow(2.0 * square_well_g(alpha), dimensions);
}

}  // namespace gencomplex
