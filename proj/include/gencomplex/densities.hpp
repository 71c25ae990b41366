#pragma once

// Probability densities in D dimensions.
//
// A Density is a list of disjoint pieces. Each piece is one of
//   Line      D = 1, f(x) = u(x - c) for x - c in [lo, hi]
//   Radial    isotropic, f(r) = u(|r - c|) for |r - c| in [lo, hi]
//   Spherical D = 3, f(r) = u(|r - c|) * w(theta) with theta the polar angle
// so every integral of a pointwise functional of f reduces to 1-D quadrature
// over u (and w). Composite densities come from replicate().

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gencomplex/errors.hpp"
#include "gencomplex/order.hpp"
#include "gencomplex/specfun.hpp"

namespace gencomplex {

using Profile = std::function<double(double)>;

inline std::string short_real(double x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

enum class Geometry { Line, Radial, Spherical };

enum class SupportKind { FiniteRadius, HalfLineRadial, FullSpace };

struct SupportDescriptor {
    SupportKind kind = SupportKind::FiniteRadius;
    double measure = 0.0;    // Lebesgue measure; +inf when unbounded
};

/// c_D, the volume of the unit ball in D dimensions.
inline double unit_ball_volume(int dimension)
{
    if (dimension < 1)
        throw DomainError("unit_ball_volume: dimension must be positive");
    const double half = 0.5 * dimension;
    return std::exp(std::numbers::ln2 + half * std::log(std::numbers::pi) - std::log(double(dimension)) -
                    log_gamma(half));
}

struct DensityPiece {
    Geometry geometry = Geometry::Line;
    int dimension = 1;
    Profile profile;                 // u
    Profile angular;                 // w(theta), Spherical only
    double lo = 0.0;                 // profile domain
    double hi = 0.0;
    std::vector<double> breakpoints; // interior discontinuities or kinks of u
    double length_scale = 1.0;
    std::vector<double> center;

    double evaluate(std::span<const double> point) const
    {
        if (geometry == Geometry::Line) {
            const double x = point[0] - center[0];
            return (x < lo || x > hi) ? 0.0 : profile(x);
        }
        double r2 = 0.0;
        for (int i = 0; i < dimension; ++i) {
            const double d = point[i] - center[i];
            r2 += d * d;
        }
        const double r = std::sqrt(r2);
        if (r < lo || r > hi)
            return 0.0;
        if (geometry == Geometry::Radial)
            return profile(r);
        const double z = point[2] - center[2];
        const double theta = r > 0.0 ? std::acos(std::clamp(z / r, -1.0, 1.0)) : 0.0;
        return profile(r) * angular(theta);
    }

    bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

    double support_measure() const
    {
        if (!bounded())
            return std::numeric_limits<double>::infinity();
        if (geometry == Geometry::Line)
            return hi - lo;
        return unit_ball_volume(dimension) * (std::pow(hi, dimension) - std::pow(lo, dimension));
    }

    /// Conservative bounding interval along each axis: [c - extent, c + extent]
    /// for balls, the exact interval for lines.
    std::pair<double, double> bounding_interval(int axis) const
    {
        if (geometry == Geometry::Line)
            return {center[0] + lo, center[0] + hi};
        return {center[axis] - hi, center[axis] + hi};
    }
};

class Density {
public:
    Density() = default;

    explicit Density(std::vector<DensityPiece> pieces, std::string name = {})
        : pieces_(std::make_shared<const std::vector<DensityPiece>>(std::move(pieces))), name_(std::move(name))
    {
        if (pieces_->empty())
            throw DomainError("Density: no pieces");
        const int d = pieces_->front().dimension;
        for (const auto& p : *pieces_) {
            if (p.dimension != d || static_cast<int>(p.center.size()) != d)
                throw DomainError("Density: inconsistent dimension");
            if (p.geometry == Geometry::Spherical && (d != 3 || !p.angular))
                throw DomainError("Density: spherical pieces need D = 3 and an angular profile");
            if (p.geometry == Geometry::Line && d != 1)
                throw DomainError("Density: line pieces need D = 1");
            if (!(p.lo < p.hi) || (p.geometry != Geometry::Line && p.lo < 0.0))
                throw DomainError("Density: invalid profile domain");
        }
    }

    /// 1-D density u(x) on [lo, hi] (either end may be infinite).
    static Density line(Profile u, double lo, double hi, std::vector<double> breakpoints = {},
                        double length_scale = 1.0, std::string name = {})
    {
        DensityPiece p;
        p.geometry = Geometry::Line;
        p.dimension = 1;
        p.profile = std::move(u);
        p.lo = lo;
        p.hi = hi;
        p.breakpoints = std::move(breakpoints);
        p.length_scale = length_scale;
        p.center = {0.0};
        return Density({std::move(p)}, std::move(name));
    }

    /// Isotropic density u(|r|) for |r| in [lo, hi].
    static Density radial(int dimension, Profile u, double lo, double hi, std::vector<double> breakpoints = {},
                          double length_scale = 1.0, std::string name = {})
    {
        DensityPiece p;
        p.geometry = Geometry::Radial;
        p.dimension = dimension;
        p.profile = std::move(u);
        p.lo = lo;
        p.hi = hi;
        p.breakpoints = std::move(breakpoints);
        p.length_scale = length_scale;
        p.center.assign(dimension, 0.0);
        return Density({std::move(p)}, std::move(name));
    }

    /// 3-D density u(r) * w(theta) on r in [0, hi).
    static Density spherical(Profile u, Profile w, double hi, double length_scale, std::string name = {})
    {
        DensityPiece p;
        p.geometry = Geometry::Spherical;
        p.dimension = 3;
        p.profile = std::move(u);
        p.angular = std::move(w);
        p.lo = 0.0;
        p.hi = hi;
        p.length_scale = length_scale;
        p.center.assign(3, 0.0);
        return Density({std::move(p)}, std::move(name));
    }

    int dimension() const { return pieces_->front().dimension; }
    const std::vector<DensityPiece>& pieces() const { return *pieces_; }
    const std::string& name() const { return name_; }
    double length_scale() const { return pieces_->front().length_scale; }

    double evaluate(std::span<const double> point) const
    {
        if (static_cast<int>(point.size()) != dimension())
            throw DomainError("Density::evaluate: point has wrong dimension");
        double total = 0.0;
        for (const auto& p : *pieces_)
            total += p.evaluate(point);
        return total;
    }

    double operator()(std::initializer_list<double> point) const
    {
        return evaluate(std::span<const double>(point.begin(), point.size()));
    }

    /// Radial and angular profiles when the density is a single separable piece.
    std::optional<std::pair<Profile, Profile>> separable_parts() const
    {
        if (pieces_->size() != 1 || pieces_->front().geometry == Geometry::Radial)
            return std::nullopt;
        const auto& p = pieces_->front();
        return std::pair{p.profile, p.angular};
    }

    SupportDescriptor support() const
    {
        SupportDescriptor s;
        s.measure = 0.0;
        for (const auto& p : *pieces_) {
            s.measure += p.support_measure();
            if (!p.bounded())
                s.kind = p.geometry == Geometry::Line ? SupportKind::FullSpace : SupportKind::HalfLineRadial;
        }
        return s;
    }

    /// When set, the entropy pipeline checks normalization to 1e-9 first.
    bool validate() const { return validate_; }
    Density with_validation(bool on = true) const
    {
        Density d = *this;
        d.validate_ = on;
        return d;
    }

    Density renamed(std::string name) const
    {
        Density d = *this;
        d.name_ = std::move(name);
        return d;
    }

private:
    std::shared_ptr<const std::vector<DensityPiece>> pieces_;
    std::string name_;
    bool validate_ = false;
};

namespace detail {

inline DensityPiece transform_piece(const DensityPiece& p, double a, std::span<const double> shift, double weight)
{
    DensityPiece out = p;
    const double factor = weight * std::pow(a, p.dimension);
    out.profile = [u = p.profile, a, factor](double s) { return factor * u(a * s); };
    out.lo = p.lo / a;
    out.hi = p.hi / a;
    for (auto& b : out.breakpoints)
        b /= a;
    out.length_scale = p.length_scale / a;
    for (int i = 0; i < p.dimension; ++i)
        out.center[i] = shift[i] + p.center[i] / a;
    return out;
}

inline bool pieces_overlap(const DensityPiece& x, const DensityPiece& y)
{
    if (!x.bounded() || !y.bounded())
        return true;
    if (x.dimension == 1) {
        const auto [a0, a1] = x.bounding_interval(0);
        const auto [b0, b1] = y.bounding_interval(0);
        return std::min(a1, b1) > std::max(a0, b0);
    }
    double d2 = 0.0;
    for (int i = 0; i < x.dimension; ++i) {
        const double d = x.center[i] - y.center[i];
        d2 += d * d;
    }
    return std::sqrt(d2) < x.hi + y.hi;
}

}  // namespace detail

/// f_ab(r) = a^D f(a (r - b)).
inline Density scale_translate(const Density& f, double a, std::span<const double> b)
{
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("scale_translate: scale must be positive");
    if (static_cast<int>(b.size()) != f.dimension())
        throw DomainError("scale_translate: shift has wrong dimension");
    std::vector<DensityPiece> pieces;
    for (const auto& p : f.pieces())
        pieces.push_back(detail::transform_piece(p, a, b, 1.0));
    return Density(std::move(pieces), f.name()).with_validation(f.validate());
}

inline Density scale_translate(const Density& f, double a, std::initializer_list<double> b)
{
    return scale_translate(f, a, std::span<const double>(b.begin(), b.size()));
}

// q(r) = sum_m n^{D/2-1} f(sqrt(n) (r - b_m)): n shrunken copies, each of mass
// 1/n. The copies must have pairwise disjoint supports, judged from
// bounding intervals (D = 1) or bounding balls.
inline Density replicate(const Density& f, int n, const std::vector<std::vector<double>>& centers)
{
    if (n < 1 || static_cast<int>(centers.size()) != n)
        throw DomainError("replicate: need n >= 1 and exactly n centers");
    const double a = std::sqrt(double(n));
    std::vector<DensityPiece> pieces;
    std::vector<int> copy_of;
    for (int m = 0; m < n; ++m) {
        if (static_cast<int>(centers[m].size()) != f.dimension())
            throw DomainError("replicate: center has wrong dimension");
        for (const auto& p : f.pieces()) {
            pieces.push_back(detail::transform_piece(p, a, centers[m], 1.0 / n));
            copy_of.push_back(m);
        }
    }
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (copy_of[i] != copy_of[j] && detail::pieces_overlap(pieces[i], pieces[j]))
                throw DomainError("replicate: copy supports overlap");
    return Density(std::move(pieces), f.name() + " x" + std::to_string(n)).with_validation(f.validate());
}

/// chi(r) = 1/c_D inside the unit ball.
inline Density make_rectangular(int dimension)
{
    if (dimension < 1 || dimension > 3)
        throw DomainError("make_rectangular: dimension must be 1, 2 or 3");
    const double level = 1.0 / unit_ball_volume(dimension);
    return Density::radial(dimension, [level](double) { return level; }, 0.0, 1.0, {}, 1.0,
                           "rectangular D=" + std::to_string(dimension));
}

/// Two-level radial density g_{delta,B}: (1-delta)/c_D inside the unit ball,
/// delta/(c_D (B^D - 1)) on the shell 1 < |r| < B.
inline Density make_ring(double delta, double outer_radius, int dimension)
{
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("make_ring: delta must lie in (0, 1)");
    if (!(outer_radius > 1.0) || !std::isfinite(outer_radius))
        throw DomainError("make_ring: B must exceed 1");
    if (dimension < 1)
        throw DomainError("make_ring: dimension must be positive");
    const double c = unit_ball_volume(dimension);
    const double inner = (1.0 - delta) / c;
    const double outer = delta / (c * (std::pow(outer_radius, dimension) - 1.0));
    return Density::radial(
        dimension, [inner, outer](double r) { return r <= 1.0 ? inner : outer; }, 0.0, outer_radius, {1.0},
        outer_radius, "ring delta=" + short_real(delta) + " B=" + short_real(outer_radius));
}

/// Closed-form Renyi entropy of g_{delta,B} for finite alpha != 1.
inline double ring_renyi_closed(double alpha, double delta, double outer_radius, int dimension)
{
    if (!(delta > 0.0 && delta < 1.0) || !(outer_radius > 1.0) || dimension < 1)
        throw DomainError("ring_renyi_closed: parameters out of range");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("ring_renyi_closed: alpha must be a positive real");
    if (std::abs(alpha - 1.0) < OrderParam::kShannonWindow)
        throw DomainError("ring_renyi_closed: alpha = 1 has no closed form here; use the Shannon path");
    const double shell = std::pow(outer_radius, dimension) - 1.0;
    const double sum = std::pow(1.0 - delta, alpha) + std::pow(delta, alpha) / std::pow(shell, alpha - 1.0);
    return std::log(sum) / (1.0 - alpha) + std::log(unit_ball_volume(dimension));
}

/// Piecewise-constant density described by (level, measure) pairs only.
class StepDensity {
public:
    struct Step {
        double level;
        double measure;
    };

    explicit StepDensity(std::vector<Step> steps) : steps_(std::move(steps))
    {
        if (steps_.empty())
            throw DomainError("StepDensity: no steps");
        double mass = 0.0;
        for (const auto& s : steps_) {
            if (!(s.level > 0.0) || !(s.measure > 0.0))
                throw DomainError("StepDensity: levels and measures must be positive");
            mass += s.level * s.measure;
        }
        if (std::abs(mass - 1.0) > 1e-12)
            throw DomainError("StepDensity: sum of level*measure must be 1");
    }

    /// Rescales the levels so that sum level*measure = 1.
    static StepDensity normalized(std::vector<Step> steps)
    {
        double mass = 0.0;
        for (const auto& s : steps)
            mass += s.level * s.measure;
        if (!(mass > 0.0))
            throw DomainError("StepDensity: zero mass");
        for (auto& s : steps)
            s.level /= mass;
        return StepDensity(std::move(steps));
    }

    const std::vector<Step>& steps() const { return steps_; }

private:
    std::vector<Step> steps_;
};

/// Renyi entropy of a step density from its levels and measures alone.
inline double step_renyi(const StepDensity& sd, const OrderParam& order)
{
    const auto& steps = sd.steps();
    switch (order.kind()) {
    case OrderParam::Kind::ZeroLimit: {
        double total = 0.0;
        for (const auto& s : steps)
            total += s.measure;
        return std::log(total);
    }
    case OrderParam::Kind::ShannonLimit: {
        double total = 0.0;
        for (const auto& s : steps)
            total -= s.level * std::log(s.level) * s.measure;
        return total;
    }
    case OrderParam::Kind::InfinityLimit: {
        double top = 0.0;
        for (const auto& s : steps)
            top = std::max(top, s.level);
        return -std::log(top);
    }
    case OrderParam::Kind::Finite:
        break;
    }
    const double alpha = order.value();
    // log-sum-exp over ln(level^alpha * measure)
    std::vector<double> terms;
    terms.reserve(steps.size());
    for (const auto& s : steps)
        terms.push_back(alpha * std::log(s.level) + std::log(s.measure));
    const double top = *std::max_element(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms)
        sum += std::exp(t - top);
    return (top + std::log(sum)) / (1.0 - alpha);
}

/// 1-D realization: consecutive intervals of length measure_k carrying level_k, starting at 0.
inline Density realize_step_density_1d(const StepDensity& sd)
{
    std::vector<double> edges{0.0};
    std::vector<double> levels;
    for (const auto& s : sd.steps()) {
        edges.push_back(edges.back() + s.measure);
        levels.push_back(s.level);
    }
    std::vector<double> breaks(edges.begin() + 1, edges.end() - 1);
    const double end = edges.back();
    return Density::line(
        [edges, levels](double x) {
            const auto it = std::upper_bound(edges.begin() + 1, edges.end() - 1, x);
            return levels[static_cast<std::size_t>(it - edges.begin()) - 1];
        },
        0.0, end, std::move(breaks), end, "step density");
}

}  // namespace gencomplex
