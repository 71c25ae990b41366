#pragma once

// Renyi entropy of a Density for any extended order, and the two-parameter
// complexity exp(R^(alpha) - R^(beta)).

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gencomplex/densities.hpp"
#include "gencomplex/errors.hpp"
#include "gencomplex/order.hpp"
#include "gencomplex/quadrature.hpp"

namespace gencomplex {

struct EntropyResult {
    double value = 0.0;    // nats; +inf for the zero limit on unbounded support
    double error_estimate = 0.0;
    OrderParam order = OrderParam::shannon();
    bool converged = true;    // every underlying quadrature met its tolerance
};

struct ComplexityResult {
    double value = 0.0;
    double error_estimate = 0.0;
    EntropyResult r_alpha;
    EntropyResult r_beta;

    bool converged() const { return r_alpha.converged && r_beta.converged; }
};

namespace detail {

// Integral over the profile domain of a piece of h(u(s)) * jacobian(s),
// split at breakpoints and handing infinite ends to the semi-infinite rule.
template <class H>
IntegrationResult integrate_profile(const DensityPiece& p, const H& h, const QuadratureSpec& spec)
{
    auto integrand = [&](double s) {
        double y = h(p.profile(s));
        if (p.geometry != Geometry::Line && p.dimension > 1)
            y *= std::pow(s, p.dimension - 1);
        return y;
    };
    // Line pieces are integrated in absolute coordinates through evaluate(),
    // so any shift of the center is exercised numerically.
    const double offset = p.geometry == Geometry::Line ? p.center[0] : 0.0;
    auto absolute = [&](double x) {
        if (p.geometry == Geometry::Line) {
            const double point[1] = {x};
            return h(p.evaluate(point));
        }
        return integrand(x);
    };

    std::vector<double> edges;
    for (double b : p.breakpoints)
        if (b > p.lo && b < p.hi)
            edges.push_back(b + offset);
    std::sort(edges.begin(), edges.end());

    IntegrationResult total{0.0, 0.0, 0, true};
    auto add = [&total](const IntegrationResult& part) {
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.panels_used += part.panels_used;
        total.converged = total.converged && part.converged;
    };

    const double lo = p.lo + offset;
    const double hi = p.hi + offset;
    const double first = std::isfinite(lo) ? lo : (edges.empty() ? (std::isfinite(hi) ? hi : offset) : edges.front());
    const double last = std::isfinite(hi) ? hi : (edges.empty() ? first : edges.back());

    if (!std::isfinite(lo)) {
        auto mirrored = [&](double t) { return absolute(first - t); };
        add(integrate_semi_infinite(mirrored, 0.0, p.length_scale, spec));
    }
    if (first < last) {
        std::vector<double> inner;
        for (double e : edges)
            if (e > first && e < last)
                inner.push_back(e);
        add(integrate_piecewise(absolute, first, last, inner, spec));
    }
    if (!std::isfinite(hi))
        add(integrate_semi_infinite(absolute, last, p.length_scale, spec));
    return total;
}

template <class H>
IntegrationResult integrate_angular(const DensityPiece& p, const H& h, const QuadratureSpec& spec)
{
    auto integrand = [&](double theta) { return 2.0 * std::numbers::pi * h(p.angular(theta)) * std::sin(theta); };
    return integrate(integrand, 0.0, std::numbers::pi, spec);
}

inline double surface_factor(const DensityPiece& p)
{
    if (p.geometry == Geometry::Radial)
        return p.dimension * unit_ball_volume(p.dimension);
    return 1.0;
}

inline double xlogx(double u) { return u > 0.0 ? u * std::log(u) : 0.0; }

struct Moment {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

// Integral over all space of h(f) for h(0) = 0 and h multiplicative
// (power kernel), piece by piece.
inline Moment power_moment(const Density& f, double alpha, const QuadratureSpec& spec)
{
    auto h = [alpha](double u) { return u > 0.0 ? std::pow(u, alpha) : 0.0; };
    Moment total;
    for (const auto& p : f.pieces()) {
        const auto radial = integrate_profile(p, h, spec);
        total.converged = total.converged && radial.converged;
        double value = radial.value * surface_factor(p);
        double error = radial.error_estimate * surface_factor(p);
        if (p.geometry == Geometry::Spherical) {
            const auto ang = integrate_angular(p, h, spec);
            total.converged = total.converged && ang.converged;
            error = std::abs(radial.value) * ang.error_estimate + radial.error_estimate * std::abs(ang.value);
            value = radial.value * ang.value;
        }
        total.value += value;
        total.error += error;
    }
    return total;
}

// Integral of f ln f.
inline Moment entropy_moment(const Density& f, const QuadratureSpec& spec)
{
    auto one = [](double u) { return u; };
    Moment total;
    for (const auto& p : f.pieces()) {
        const auto ulogu = integrate_profile(p, xlogx, spec);
        total.converged = total.converged && ulogu.converged;
        if (p.geometry != Geometry::Spherical) {
            total.value += ulogu.value * surface_factor(p);
            total.error += ulogu.error_estimate * surface_factor(p);
            continue;
        }
        // f ln f = u w (ln u + ln w)
        const auto u1 = integrate_profile(p, one, spec);
        const auto w1 = integrate_angular(p, one, spec);
        const auto wlogw = integrate_angular(p, xlogx, spec);
        total.converged = total.converged && u1.converged && w1.converged && wlogw.converged;
        total.value += ulogu.value * w1.value + u1.value * wlogw.value;
        total.error += ulogu.error_estimate * std::abs(w1.value) + std::abs(ulogu.value) * w1.error_estimate +
                       u1.error_estimate * std::abs(wlogw.value) + std::abs(u1.value) * wlogw.error_estimate;
    }
    return total;
}

inline MaximizeResult maximize_profile(const DensityPiece& p, const Profile& u, double lo, double hi,
                                       const std::vector<double>& breakpoints)
{
    std::vector<double> edges{lo};
    for (double b : breakpoints)
        if (b > lo && b < hi)
            edges.push_back(b);
    edges.push_back(hi);
    std::sort(edges.begin(), edges.end());
    MaximizeResult best{lo, -std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i] < edges[i + 1]))
            continue;
        // stay strictly inside each constant-or-smooth segment
        const double eps = 1e-12 * std::max(1.0, std::abs(edges[i + 1] - edges[i]));
        const double a = i == 0 ? edges[i] : edges[i] + eps;
        const double b = i + 2 == edges.size() ? edges[i + 1] : edges[i + 1] - eps;
        const auto r = maximize(u, a, b, kDefaultMaximizeGrid, 1e-12 * std::max(1.0, p.length_scale));
        if (r.max_value > best.max_value)
            best = r;
    }
    return best;
}

}  // namespace detail

/// Supremum of the density.
inline double sup_norm(const Density& f)
{
    double best = 0.0;
    for (const auto& p : f.pieces()) {
        // Unbounded profiles are scanned over twice their length scale.
        double lo = p.lo;
        double hi = p.hi;
        if (!std::isfinite(lo))
            lo = (std::isfinite(hi) ? hi : 0.0) - 2.0 * p.length_scale;
        if (!std::isfinite(hi))
            hi = lo + 2.0 * p.length_scale;
        double value = detail::maximize_profile(p, p.profile, lo, hi, p.breakpoints).max_value;
        if (p.geometry == Geometry::Spherical)
            value *= maximize(p.angular, 0.0, std::numbers::pi, kDefaultMaximizeGrid, 1e-12).max_value;
        best = std::max(best, value);
    }
    return best;
}

/// Integral of f over all space.
inline IntegrationResult normalization(const Density& f, const QuadratureSpec& spec = {})
{
    const auto m = detail::power_moment(f, 1.0, spec);
    return {m.value, m.error, 0, m.converged};
}

inline void check_normalization(const Density& f, const QuadratureSpec& spec)
{
    const double mass = normalization(f, spec).value;
    if (std::abs(mass - 1.0) > 1e-9)
        throw DomainError("density '" + f.name() + "' is not normalized: integral = " + std::to_string(mass));
}

inline EntropyResult renyi(const Density& f, const OrderParam& order, const QuadratureSpec& spec = {})
{
    if (f.validate())
        check_normalization(f, spec);

    EntropyResult result;
    result.order = order;
    switch (order.kind()) {
    case OrderParam::Kind::ZeroLimit:
        result.value = std::log(f.support().measure);
        return result;
    case OrderParam::Kind::InfinityLimit:
        result.value = -std::log(sup_norm(f));
        // golden-section refinement leaves only round-off in the maximum
        result.error_estimate = 1e-12;
        return result;
    case OrderParam::Kind::ShannonLimit: {
        const auto m = detail::entropy_moment(f, spec);
        result.value = -m.value;
        result.error_estimate = m.error;
        result.converged = m.converged;
        return result;
    }
    case OrderParam::Kind::Finite:
        break;
    }
    const double alpha = order.value();
    const auto m = detail::power_moment(f, alpha, spec);
    if (!(m.value > 0.0))
        throw DomainError("renyi: integral of f^alpha is not positive");
    result.value = std::log(m.value) / (1.0 - alpha);
    result.error_estimate = m.error / (std::abs(1.0 - alpha) * m.value);
    result.converged = m.converged;
    return result;
}

/// Renyi entropy of a spherical density by nested (r, theta) quadrature of
/// evaluate(); independent of the separable fast path. Finite orders only.
inline EntropyResult renyi_by_cubature(const Density& f, const OrderParam& order, const QuadratureSpec& spec = {})
{
    if (!order.is_finite())
        throw DomainError("renyi_by_cubature: finite orders only");
    if (f.dimension() != 3)
        throw DomainError("renyi_by_cubature: three-dimensional densities only");
    const double alpha = order.value();
    double total = 0.0;
    double error = 0.0;
    for (const auto& p : f.pieces()) {
        auto shell = [&](double r) {
            auto ring = [&](double theta) {
                const double point[3] = {p.center[0] + r * std::sin(theta), p.center[1],
                                         p.center[2] + r * std::cos(theta)};
                const double v = f.evaluate(point);
                return (v > 0.0 ? std::pow(v, alpha) : 0.0) * std::sin(theta);
            };
            return 2.0 * std::numbers::pi * r * r * integrate(ring, 0.0, std::numbers::pi, spec).value;
        };
        const auto res = std::isfinite(p.hi) ? integrate(shell, p.lo, p.hi, spec)
                                             : integrate_semi_infinite(shell, p.lo, p.length_scale, spec);
        total += res.value;
        error += res.error_estimate;
    }
    return {std::log(total) / (1.0 - alpha), error / (std::abs(1.0 - alpha) * total), order};
}

inline ComplexityResult complexity(const Density& f, const OrderParam& alpha, const OrderParam& beta,
                                   const QuadratureSpec& spec = {})
{
    ComplexityResult out;
    out.r_alpha = renyi(f, alpha, spec);
    if (alpha == beta) {
        out.r_beta = out.r_alpha;
        out.value = 1.0;
        return out;
    }
    out.r_beta = renyi(f, beta, spec);
    const double a = out.r_alpha.value;
    const double b = out.r_beta.value;
    if (std::isinf(b) && b > 0)
        out.value = std::isinf(a) ? 1.0 : 0.0;
    else if (std::isinf(a) && a > 0)
        out.value = std::numeric_limits<double>::infinity();
    else
        out.value = std::exp(a - b);
    out.error_estimate = std::isfinite(out.value)
                             ? out.value * (out.r_alpha.error_estimate + out.r_beta.error_estimate)
                             : 0.0;
    return out;
}

}  // namespace gencomplex
