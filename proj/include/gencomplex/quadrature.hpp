#pragma once

// Adaptive Gauss-Legendre quadrature on finite and semi-infinite intervals,
// and grid-plus-golden-section maximization.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <span>
#include <tuple>
#include <vector>

#include "gencomplex/errors.hpp"

namespace gencomplex {

struct QuadratureSpec {
    int panel_order = 32;          // Gauss-Legendre nodes per panel
    double rel_tol = 1e-10;
    int max_panels = 4096;
    double tail_rel_bound = 1e-14;
    int initial_panels = 8;        // equal panels before adaptive bisection

    void validate() const
    {
        if (panel_order < 2 || !(rel_tol > 0.0) || max_panels < 1 || !(tail_rel_bound > 0.0) ||
            initial_panels < 1)
            throw DomainError("QuadratureSpec: invalid parameters");
    }
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels_used = 0;
    bool converged = false;
};

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;

    explicit GaussLegendreRule(int order) : nodes(order), weights(order)
    {
        const int n = order;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                if (n == 1) {
                    p0 = 1.0;
                    p1 = x;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) <= 1e-16 * std::abs(x) + 1e-300)
                    break;
            }
            // recompute derivative at the converged node
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if (n % 2 == 1)
            nodes[n / 2] = 0.0;
    }
};

/// Cached rule of the given order; safe to call concurrently.
inline const GaussLegendreRule& gauss_legendre(int order)
{
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, GaussLegendreRule(order)).first;
    return it->second;
}

namespace detail {

struct Panel {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
double apply_rule(const F& f, const GaussLegendreRule& rule, double a, double b)
{
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = mid + half * rule.nodes[i];
        const double y = f(x);
        if (!std::isfinite(y))
            throw EvaluationError("non-finite integrand", x);
        sum += rule.weights[i] * y;
    }
    return half * sum;
}

template <class F>
Panel make_panel(const F& f, const GaussLegendreRule& coarse, const GaussLegendreRule& fine, double a,
                 double b)
{
    const double g1 = apply_rule(f, coarse, a, b);
    const double g2 = apply_rule(f, fine, a, b);
    return {a, b, g2, std::abs(g2 - g1)};
}

// Adaptive integration; converged when the summed estimate is below
// max(rel_tol * |value|, abs_floor).
template <class F>
IntegrationResult integrate_adaptive(const F& f, double a, double b, const QuadratureSpec& spec,
                                     double abs_floor, int panel_budget)
{
    const auto& coarse = gauss_legendre(spec.panel_order);
    const auto& fine = gauss_legendre(2 * spec.panel_order);
    const double guard = std::numeric_limits<double>::min();

    std::priority_queue<Panel> heap;
    const int initial = std::max(1, std::min(spec.initial_panels, panel_budget));
    const double width = (b - a) / initial;
    for (int i = 0; i < initial; ++i) {
        const double lo = a + i * width;
        const double hi = (i + 1 == initial) ? b : a + (i + 1) * width;
        heap.push(make_panel(f, coarse, fine, lo, hi));
    }

    auto totals = [&heap]() {
        // std::priority_queue hides its container; copy is cheap at these sizes
        auto copy = heap;
        double value = 0.0;
        double error = 0.0;
        while (!copy.empty()) {
            value += copy.top().value;
            error += copy.top().error;
            copy.pop();
        }
        return std::pair{value, error};
    };

    double value = 0.0;
    double error = 0.0;
    std::tie(value, error) = totals();

    bool converged = false;
    int since_resum = 0;
    while (true) {
        if (error <= std::max({spec.rel_tol * std::abs(value), abs_floor, guard})) {
            converged = true;
            break;
        }
        if (static_cast<int>(heap.size()) + 1 > panel_budget)
            break;
        const Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            break;
        heap.pop();
        const Panel left = make_panel(f, coarse, fine, worst.a, mid);
        const Panel right = make_panel(f, coarse, fine, mid, worst.b);
        heap.push(left);
        heap.push(right);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        if (++since_resum == 256) {
            std::tie(value, error) = totals();
            since_resum = 0;
        }
    }
    std::tie(value, error) = totals();
    if (converged && error > std::max({spec.rel_tol * std::abs(value), abs_floor, guard}))
        converged = false;
    return {value, error, static_cast<int>(heap.size()), converged};
}

}  // namespace detail

/// Integral of f over [a, b] by globally adaptive bisection. Each panel is
/// estimated with panel_order and 2*panel_order point rules; the finer value
/// is kept and their difference is the panel error.
template <class F>
IntegrationResult integrate(const F& f, double a, double b, const QuadratureSpec& spec = {})
{
    spec.validate();
    if (!(a < b))
        throw DomainError("integrate: require a < b");
    return detail::integrate_adaptive(f, a, b, spec, 0.0, spec.max_panels);
}

/// Integral over [a, b] split at the given interior breakpoints.
template <class F>
IntegrationResult integrate_piecewise(const F& f, double a, double b, std::span<const double> breakpoints,
                                      const QuadratureSpec& spec = {})
{
    std::vector<double> edges{a};
    for (double x : breakpoints)
        if (x > a && x < b)
            edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    IntegrationResult total{0.0, 0.0, 0, true};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i] < edges[i + 1]))
            continue;
        const auto part = integrate(f, edges[i], edges[i + 1], spec);
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.panels_used += part.panels_used;
        total.converged = total.converged && part.converged;
    }
    return total;
}

// Integral of f over [start, inf).
//
// [start, start + 8*decay_scale] is integrated first; the cut-off then
// doubles, adding [R, 2R] each time, until the newest slice contributes
// less than tail_rel_bound of the running total. Three consecutive slices
// that fail to shrink raise DivergenceError.
template <class F>
IntegrationResult integrate_semi_infinite(const F& f, double start, double decay_scale,
                                          const QuadratureSpec& spec = {})
{
    spec.validate();
    if (!(decay_scale > 0.0))
        throw DomainError("integrate_semi_infinite: decay_scale must be positive");

    double cut = 8.0 * decay_scale;
    IntegrationResult total = detail::integrate_adaptive(f, start, start + cut, spec, 0.0, spec.max_panels);

    double previous_slice = std::abs(total.value);
    int non_shrinking = 0;
    while (true) {
        const int budget = spec.max_panels - total.panels_used;
        if (budget < 1 || !(start + 2.0 * cut < 1e300)) {
            total.converged = false;
            return total;
        }
        const double floor = 0.1 * spec.rel_tol * std::abs(total.value);
        const auto slice = detail::integrate_adaptive(f, start + cut, start + 2.0 * cut, spec, floor, budget);
        total.value += slice.value;
        total.error_estimate += slice.error_estimate;
        total.panels_used += slice.panels_used;
        total.converged = total.converged && slice.converged;

        const double magnitude = std::abs(slice.value);
        if (magnitude <= spec.tail_rel_bound * std::abs(total.value))
            return total;

        if (magnitude >= previous_slice) {
            if (++non_shrinking >= 3)
                throw DivergenceError("integrate_semi_infinite: suspected divergence, tail slices grow beyond R = " +
                                      std::to_string(start + 2.0 * cut));
        } else {
            non_shrinking = 0;
        }
        previous_slice = magnitude;
        cut *= 2.0;
    }
}

template <class F>
IntegrationResult integrate_semi_infinite(const F& f, double decay_scale, const QuadratureSpec& spec = {})
{
    return integrate_semi_infinite(f, 0.0, decay_scale, spec);
}

struct MaximizeResult {
    double argmax = 0.0;
    double max_value = 0.0;
};

inline constexpr int kDefaultMaximizeGrid = 2048;

/// Maximum of f on [a, b]: best point of a uniform grid, refined by golden
/// section inside its neighbouring grid cells.
template <class F>
MaximizeResult maximize(const F& f, double a, double b, int grid_points = kDefaultMaximizeGrid,
                        double tol = 1e-10)
{
    if (!(a < b))
        throw DomainError("maximize: require a < b");
    if (grid_points < 3)
        throw DomainError("maximize: grid_points must be >= 3");
    if (!(tol > 0.0))
        throw DomainError("maximize: tol must be positive");

    auto eval = [&f](double x) {
        const double y = f(x);
        if (!std::isfinite(y))
            throw EvaluationError("non-finite objective", x);
        return y;
    };

    const double h = (b - a) / (grid_points - 1);
    int best = 0;
    double best_value = eval(a);
    for (int i = 1; i < grid_points; ++i) {
        const double x = (i + 1 == grid_points) ? b : a + i * h;
        const double y = eval(x);
        if (y > best_value) {
            best_value = y;
            best = i;
        }
    }
    const double best_x = (best + 1 == grid_points) ? b : a + best * h;

    double lo = std::max(a, best_x - h);
    double hi = std::min(b, best_x + h);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double y1 = eval(x1);
    double y2 = eval(x2);
    while (hi - lo > tol) {
        if (y1 < y2) {
            lo = x1;
            x1 = x2;
            y1 = y2;
            x2 = lo + inv_phi * (hi - lo);
            y2 = eval(x2);
        } else {
            hi = x2;
            x2 = x1;
            y2 = y1;
            x1 = hi - inv_phi * (hi - lo);
            y1 = eval(x1);
        }
    }
    const double refined_x = 0.5 * (lo + hi);
    const double refined = eval(refined_x);

    MaximizeResult result{best_x, best_value};
    for (auto [x, y] : {std::pair{x1, y1}, std::pair{x2, y2}, std::pair{refined_x, refined}})
        if (y > result.max_value)
            result = {x, y};
    return result;
}

}  // namespace gencomplex
