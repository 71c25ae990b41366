#pragma once

// Property-verification suites behind `gencomplex verify`. Each check
// reports the measured quantity and the tolerance it is held to.

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gencomplex/complexity.hpp"
#include "gencomplex/densities.hpp"
#include "gencomplex/figures.hpp"
#include "gencomplex/quantum.hpp"

namespace gencomplex {

enum class Suite { Symmetry, Bounds, Scaling, Replica, NearContinuity, Extremal, Quantum, All };

inline std::optional<Suite> parse_suite(const std::string& s)
{
    if (s == "symmetry") return Suite::Symmetry;
    if (s == "bounds") return Suite::Bounds;
    if (s == "scaling") return Suite::Scaling;
    if (s == "replica") return Suite::Replica;
    if (s == "nearcont") return Suite::NearContinuity;
    if (s == "extremal") return Suite::Extremal;
    if (s == "quantum") return Suite::Quantum;
    if (s == "all") return Suite::All;
    return std::nullopt;
}

struct Check {
    enum class Kind { AtMost, Below, Above };    // measured <= tol, < tol, > tol

    std::string name;
    double measured = 0.0;
    double tol = 0.0;
    Kind kind = Kind::AtMost;

    bool pass() const
    {
        if (std::isnan(measured))
            return false;
        switch (kind) {
        case Kind::AtMost:
            return measured <= tol;
        case Kind::Below:
            return measured < tol;
        case Kind::Above:
            break;
        }
        return measured > tol;
    }
};

inline void print_check(std::ostream& os, const Check& c)
{
    os << (c.pass() ? "PASS " : "FAIL ") << c.name << ' ' << format_real(c.measured) << ' ' << format_real(c.tol)
       << '\n';
}

/// Densities the property suites run over.
inline std::vector<Density> verification_corpus()
{
    return {
        make_rectangular(3),
        make_rectangular(1),
        make_ring(0.1, 2.0, 3),
        make_ring(0.01, 2.0, 3),
        hydrogen_density({1, 0, 0, Space::Position}),
        hydrogen_density({2, 1, 0, Space::Position}),
        oscillator_density({0, 0, 0, 1.0, Space::Position}),
        square_well_density({2, 1.0, 1}),
    };
}

/// Random normalized step density; `distinct` forces at least two levels
/// differing by 5% or more.
inline StepDensity random_step_density(std::mt19937_64& rng, bool distinct = true)
{
    std::uniform_int_distribution<int> count(distinct ? 2 : 1, 6);
    std::uniform_real_distribution<double> level(0.2, 5.0);
    std::uniform_real_distribution<double> measure(0.1, 2.0);
    const int k = count(rng);
    std::vector<StepDensity::Step> steps;
    for (int i = 0; i < k; ++i)
        steps.push_back({level(rng), measure(rng)});
    if (distinct) {
        auto [lo, hi] = std::minmax_element(steps.begin(), steps.end(),
                                            [](auto a, auto b) { return a.level < b.level; });
        if (hi->level < 1.05 * lo->level)
            hi->level = 1.05 * lo->level;
    }
    return StepDensity::normalized(std::move(steps));
}

namespace detail {

inline std::vector<OrderParam> orders(std::initializer_list<double> values)
{
    std::vector<OrderParam> out;
    for (double v : values)
        out.push_back(OrderParam::from_value(v));
    return out;
}

inline std::string pair_label(const OrderParam& a, const OrderParam& b)
{
    return "(" + a.to_string() + "," + b.to_string() + ")";
}

inline void symmetry_checks(std::vector<Check>& out)
{
    const auto pool = orders({0.5, 1.0, 2.0, INFINITY});
    for (const auto& f : verification_corpus()) {
        double worst = 0.0;
        for (const auto& a : pool)
            for (const auto& b : pool) {
                const double prod = complexity(f, a, b).value * complexity(f, b, a).value;
                worst = std::max(worst, std::abs(prod - 1.0));
            }
        out.push_back({"symmetry[" + f.name() + "]", worst, 1e-10});
    }
}

inline void bounds_checks(std::vector<Check>& out)
{
    const auto pool = orders({0.25, 0.5, 1.0, 2.0, 4.0, INFINITY});
    const auto path = orders({0.25, 0.5, 0.75, 2.0, 4.0, 8.0});
    for (const auto& f : verification_corpus()) {
        double violation = 0.0;
        for (const auto& a : pool)
            for (const auto& b : pool) {
                const double c = complexity(f, a, b).value;
                if (a < b)
                    violation = std::max(violation, 1.0 - c);
                else if (b < a)
                    violation = std::max(violation, c - 1.0);
            }
        out.push_back({"bounds[" + f.name() + "]", violation, 1e-9});

        // nonincreasing in alpha for fixed beta, nondecreasing in beta for fixed alpha
        double rise = 0.0;
        for (const auto& fixed : orders({0.5, 2.0, INFINITY})) {
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                const double c0 = complexity(f, path[i], fixed).value;
                const double c1 = complexity(f, path[i + 1], fixed).value;
                rise = std::max(rise, (c1 - c0) / c0);
                const double d0 = complexity(f, fixed, path[i]).value;
                const double d1 = complexity(f, fixed, path[i + 1]).value;
                rise = std::max(rise, (d0 - d1) / d0);
            }
        }
        out.push_back({"monotonicity[" + f.name() + "]", rise, 1e-9});
    }
}

inline void scaling_checks(std::vector<Check>& out)
{
    const std::vector<std::pair<OrderParam, OrderParam>> pairs = {
        {OrderParam::finite(0.5), OrderParam::finite(2.0)},
        {OrderParam::finite(2.0), OrderParam::infinity()},
        {OrderParam::shannon(), OrderParam::finite(2.0)},
    };
    const double shift[3] = {0.7, -1.3, 2.1};
    for (const auto& f : verification_corpus()) {
        const int dim = f.dimension();
        double entropy_dev = 0.0;
        double complexity_dev = 0.0;
        for (double a : {0.5, 3.0}) {
            const auto g = scale_translate(f, a, std::span<const double>(shift, dim));
            for (const auto& [alpha, beta] : pairs) {
                const auto cf = complexity(f, alpha, beta);
                const auto cg = complexity(g, alpha, beta);
                complexity_dev = std::max(complexity_dev, std::abs(cg.value - cf.value));
                entropy_dev = std::max(entropy_dev,
                                       std::abs(cg.r_alpha.value - (cf.r_alpha.value - dim * std::log(a))));
            }
        }
        out.push_back({"scaling-entropy-shift[" + f.name() + "]", entropy_dev, 1e-8});
        out.push_back({"scaling-complexity[" + f.name() + "]", complexity_dev, 1e-8});
    }
}

inline std::vector<Density> one_dimensional_corpus()
{
    std::mt19937_64 rng(20240611);
    return {make_rectangular(1), make_ring(0.1, 2.0, 1), square_well_density({2, 1.0, 1}),
            realize_step_density_1d(random_step_density(rng))};
}

inline void replica_checks(std::vector<Check>& out)
{
    const auto pool = orders({0.5, 1.0, 2.0, INFINITY});
    for (const auto& f : one_dimensional_corpus()) {
        for (int n : {2, 3}) {
            std::vector<std::vector<double>> centers;
            for (int m = 0; m < n; ++m)
                centers.push_back({20.0 * m});
            const auto q = replicate(f, n, centers);
            double shift_dev = 0.0;
            double c_dev = 0.0;
            for (const auto& a : pool) {
                const double expected = renyi(f, a).value - (0.5 - 1.0) * std::log(double(n));
                shift_dev = std::max(shift_dev, std::abs(renyi(q, a).value - expected));
                for (const auto& b : pool)
                    c_dev = std::max(c_dev, std::abs(complexity(q, a, b).value - complexity(f, a, b).value));
            }
            const std::string tag = f.name() + ",n=" + std::to_string(n);
            out.push_back({"replica-shift[" + tag + "]", shift_dev, 1e-7});
            out.push_back({"replica-complexity[" + tag + "]", c_dev, 1e-7});
        }
    }
    // D = 2: the shift coefficient vanishes
    const auto disk = make_rectangular(2);
    const auto q = replicate(disk, 3, {{0.0, 0.0}, {5.0, 0.0}, {0.0, 5.0}});
    double dev = 0.0;
    for (const auto& a : pool)
        dev = std::max(dev, std::abs(renyi(q, a).value - renyi(disk, a).value));
    out.push_back({"replica-shift[rectangular D=2,n=3]", dev, 1e-7});
}

inline void nearcont_checks(std::vector<Check>& out)
{
    for (int dim : {1, 2, 3}) {
        double dev = 0.0;
        for (double delta : {0.1, 0.01, 0.001})
            for (double alpha : {0.5, 2.0, 3.0}) {
                const auto g = make_ring(delta, 2.0, dim);
                dev = std::max(dev, std::abs(renyi(g, OrderParam::finite(alpha)).value -
                                             ring_renyi_closed(alpha, delta, 2.0, dim)));
            }
        out.push_back({"ring-closed-form[D=" + std::to_string(dim) + "]", dev, 1e-8});
    }
    const std::vector<std::pair<OrderParam, OrderParam>> pairs = {
        {OrderParam::finite(0.5), OrderParam::finite(2.0)},
        {OrderParam::finite(2.0), OrderParam::finite(0.5)},
        {OrderParam::shannon(), OrderParam::infinity()},
    };
    for (const auto& [a, b] : pairs) {
        // largest ratio of successive distances |C - 1| along delta -> 0
        double ratio = 0.0;
        double previous = NAN;
        for (double delta : {0.1, 0.01, 0.001}) {
            const double gap = std::abs(complexity(make_ring(delta, 2.0, 3), a, b).value - 1.0);
            if (!std::isnan(previous))
                ratio = std::max(ratio, gap / previous);
            previous = gap;
        }
        out.push_back({"ring-convergence" + pair_label(a, b), ratio, 1.0, Check::Kind::Below});
    }
    double rect = 0.0;
    for (int dim : {1, 2, 3})
        for (double alpha : {0.5, 2.0, 3.0})
            rect = std::max(rect, std::abs(renyi(make_rectangular(dim), OrderParam::finite(alpha)).value -
                                           std::log(unit_ball_volume(dim))));
    out.push_back({"rectangular-entropy", rect, 1e-10});
}

inline void extremal_checks(std::vector<Check>& out)
{
    std::mt19937_64 rng(7);
    const auto pool = orders({0.0, 0.25, 0.5, 1.0, 2.0, 4.0, INFINITY});
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    double min_log_c = INFINITY;
    for (int i = 0; i < 200; ++i) {
        const auto sd = random_step_density(rng);
        std::size_t x = pick(rng);
        std::size_t y = pick(rng);
        while (y == x)
            y = pick(rng);
        const auto& a = pool[std::min(x, y)];
        const auto& b = pool[std::max(x, y)];
        min_log_c = std::min(min_log_c, step_renyi(sd, a) - step_renyi(sd, b));
    }
    out.push_back({"extremal-strict-positive", min_log_c, 0.0, Check::Kind::Above});

    double uniform_dev = 0.0;
    std::uniform_real_distribution<double> measure(0.1, 2.0);
    for (int i = 0; i < 50; ++i) {
        std::vector<StepDensity::Step> steps;
        const int k = 1 + i % 5;
        for (int j = 0; j < k; ++j)
            steps.push_back({1.0, measure(rng)});
        const auto sd = StepDensity::normalized(std::move(steps));
        for (const auto& a : pool)
            for (const auto& b : pool)
                uniform_dev = std::max(uniform_dev, std::abs(step_renyi(sd, a) - step_renyi(sd, b)));
    }
    out.push_back({"extremal-uniform-attains-1", uniform_dev, 1e-12});

    double rect = 0.0;
    for (int dim : {1, 2, 3})
        for (const auto& a : pool)
            for (const auto& b : pool)
                rect = std::max(rect, std::abs(complexity(make_rectangular(dim), a, b).value - 1.0));
    out.push_back({"extremal-rectangular", rect, 1e-9});
}

inline void quantum_checks(std::vector<Check>& out)
{
    const auto inf = OrderParam::infinity();

    double norm_dev = 0.0;
    for (auto space : {Space::Position, Space::Momentum}) {
        for (auto [n, l, m] : {std::tuple{1, 0, 0}, {2, 1, 1}, {15, 5, 3}, {15, 14, 14}})
            norm_dev = std::max(norm_dev, std::abs(normalization(hydrogen_density({n, l, m, space})).value - 1.0));
        for (auto [n, l, m] : {std::tuple{0, 0, 0}, {1, 13, 4}, {0, 15, 15}, {7, 1, 0}})
            norm_dev = std::max(norm_dev,
                                std::abs(normalization(oscillator_density({n, l, m, 1.0, space})).value - 1.0));
    }
    for (int k = 1; k <= 5; ++k)
        norm_dev = std::max(norm_dev, std::abs(normalization(square_well_density({k, 1.0, 1})).value - 1.0));
    out.push_back({"normalization", norm_dev, 1e-9});

    const auto h1s = hydrogen_density({1, 0, 0, Space::Position});
    out.push_back({"hydrogen-1s-C(2,inf)=8",
                   std::abs(complexity(h1s, OrderParam::finite(2.0), inf).value / 8.0 - 1.0), 1e-6});
    out.push_back({"hydrogen-1s-C(0.5,inf)=64",
                   std::abs(complexity(h1s, OrderParam::finite(0.5), inf).value / 64.0 - 1.0), 1e-6});

    double duality = 0.0;
    double strength = 0.0;
    const auto pool = orders({0.5, 2.0});
    for (auto [n, l, m] : {std::tuple{0, 0, 0}, {1, 2, 1}, {2, 3, 3}}) {
        for (const auto& a : pool)
            for (const auto& b : pool) {
                const double pos = complexity(oscillator_density({n, l, m, 1.0, Space::Position}), a, b).value;
                const double mom = complexity(oscillator_density({n, l, m, 1.0, Space::Momentum}), a, b).value;
                duality = std::max(duality, std::abs(pos - mom));
            }
        const double ref = complexity(oscillator_density({n, l, m, 1.0, Space::Position}), pool[1], inf).value;
        for (double lambda : {0.5, 4.0}) {
            const double c = complexity(oscillator_density({n, l, m, lambda, Space::Position}), pool[1], inf).value;
            strength = std::max(strength, std::abs(c / ref - 1.0));
        }
    }
    out.push_back({"oscillator-position-equals-momentum", duality, 1e-7});
    out.push_back({"oscillator-strength-invariance", strength, 1e-8});

    double degeneracy = 0.0;
    for (double alpha : {0.5, 2.0, 3.0}) {
        const auto a = OrderParam::finite(alpha);
        const double ref = 2.0 * square_well_g(a);
        for (int k = 1; k <= 5; ++k)
            degeneracy = std::max(degeneracy,
                                  std::abs(complexity(square_well_density({k, 1.0, 1}), a, inf).value - ref));
    }
    out.push_back({"square-well-degeneracy", degeneracy, 1e-9});

    for (FigureId id : kAllFigures) {
        const auto rows = compute_figure(id);
        const int top_l = figure_definition(id).system == FigureDefinition::System::Hydrogen ? 14 : 15;
        const auto best = std::min_element(rows.begin(), rows.end(),
                                           [](const auto& a, const auto& b) { return a.value < b.value; });
        double smallest = INFINITY;
        for (const auto& r : rows)
            smallest = std::min(smallest, r.value);
        out.push_back({"figure-min-at-highest-l[" + to_string(id) + "]", double(std::abs(best->l - top_l)), 0.0});
        out.push_back({"figure-values-exceed-1[" + to_string(id) + "]", smallest, 1.0, Check::Kind::Above});
    }
}

}  // namespace detail

inline std::vector<Check> run_suite(Suite suite, std::optional<double> tol_override = std::nullopt)
{
    std::vector<Check> out;
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Symmetry)
        detail::symmetry_checks(out);
    if (all || suite == Suite::Bounds)
        detail::bounds_checks(out);
    if (all || suite == Suite::Scaling)
        detail::scaling_checks(out);
    if (all || suite == Suite::Replica)
        detail::replica_checks(out);
    if (all || suite == Suite::NearContinuity)
        detail::nearcont_checks(out);
    if (all || suite == Suite::Extremal)
        detail::extremal_checks(out);
    if (all || suite == Suite::Quantum)
        detail::quantum_checks(out);
    if (tol_override)
        for (auto& c : out)
            if (c.kind == Check::Kind::AtMost && c.tol > 0.0)
                c.tol = *tol_override;
    return out;
}

}  // namespace gencomplex
