#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gencomplex/quantum.hpp"

using namespace gencomplex;

namespace {

constexpr double kPi = std::numbers::pi;

double radial_norm(const std::function<double(double)>& radial, double scale)
{
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    return integrate_semi_infinite([&](double r) { return std::pow(radial(r), 2) * r * r; }, scale, spec).value;
}

}  // namespace

TEST(HydrogenRadial, WorkedValues)
{
    EXPECT_NEAR(hydrogen_radial_position(1, 0, 0.0), 2.0, 1e-15);
    EXPECT_NEAR(hydrogen_radial_position(2, 1, 2.0), std::exp(-1.0) / std::sqrt(6.0), 1e-15);
    EXPECT_NEAR(hydrogen_radial_position(2, 1, 2.0), 0.1501861530, 1e-10);
}

TEST(HydrogenRadial, MatchesTextbookClosedForms)
{
    for (double r : {0.0, 0.3, 1.0, 2.5, 7.0, 20.0}) {
        EXPECT_NEAR(hydrogen_radial_position(1, 0, r), 2.0 * std::exp(-r), 1e-15);
        EXPECT_NEAR(hydrogen_radial_position(2, 0, r), (1.0 - r / 2.0) * std::exp(-r / 2.0) / std::sqrt(2.0), 1e-15);
        EXPECT_NEAR(hydrogen_radial_position(3, 2, r), 4.0 / (81.0 * std::sqrt(30.0)) * r * r * std::exp(-r / 3.0),
                    1e-15);
    }
}

TEST(HydrogenRadial, NormalizedForHighStates)
{
    for (auto [n, l] : {std::pair{15, 5}, std::pair{15, 14}, std::pair{15, 0}, std::pair{20, 7}})
        EXPECT_NEAR(radial_norm([n, l](double r) { return hydrogen_radial_position(n, l, r); }, 2.0 * n * n), 1.0,
                    1e-10)
            << n << "," << l;
}

TEST(HydrogenMomentum, WorkedValues)
{
    EXPECT_NEAR(hydrogen_radial_momentum(1, 0, 0.0), 3.1915382432114614235, 1e-14);
    const auto gamma = hydrogen_density({1, 0, 0, Space::Momentum});
    EXPECT_NEAR(gamma({0.0, 0.0, 0.0}), 0.81056946913870217155 / 1.0, 1e-15);
    for (double p : {0.2, 1.0, 3.0}) {
        const double expected = 8.0 / (kPi * kPi * std::pow(1.0 + p * p, 4));
        EXPECT_NEAR(gamma({0.0, p, 0.0}), expected, 1e-15);
    }
}

TEST(HydrogenMomentum, NormalizedForHighStates)
{
    for (auto [n, l] : {std::pair{15, 14}, std::pair{15, 5}, std::pair{3, 1}})
        EXPECT_NEAR(radial_norm([n, l](double p) { return hydrogen_radial_momentum(n, l, p); }, 2.0 / n), 1.0,
                    1e-10)
            << n << "," << l;
}

TEST(HydrogenDensity, OriginValueSupNormAndNormalization)
{
    const auto rho = hydrogen_density({1, 0, 0, Space::Position});
    EXPECT_NEAR(rho({0.0, 0.0, 0.0}), 1.0 / kPi, 1e-15);
    EXPECT_NEAR(sup_norm(rho), 1.0 / kPi, 1e-14);
    for (const auto& s : {HydrogenState{15, 14, 7, Space::Position}, HydrogenState{15, 10, 0, Space::Momentum},
                          HydrogenState{4, 2, -1, Space::Position}})
        EXPECT_NEAR(normalization(hydrogen_density(s)).value, 1.0, 1e-9);
}

TEST(HydrogenDensity, RejectsInvalidStates)
{
    EXPECT_THROW(hydrogen_density({0, 0, 0}), DomainError);
    EXPECT_THROW(hydrogen_density({2, 2, 0}), DomainError);
    EXPECT_THROW(hydrogen_density({3, 1, 2}), DomainError);
    EXPECT_THROW(hydrogen_radial_position(1, 1, 0.5), DomainError);
}

TEST(OscillatorRadial, WorkedValues)
{
    EXPECT_NEAR(oscillator_radial_position(0, 0, 1.0, 0.0), 2.0 / std::pow(kPi, 0.25), 1e-15);
    EXPECT_NEAR(oscillator_radial_momentum(0, 0, 1.0, 0.0), 2.0 / std::pow(kPi, 0.25), 1e-15);
    EXPECT_EQ(oscillator_radial_position(2, 3, 1.0, 0.0), 0.0);
    const auto rho = oscillator_density({0, 0, 0, 1.0, Space::Position});
    EXPECT_NEAR(rho({0.0, 0.0, 0.0}), std::pow(kPi, -1.5), 1e-15);
}

TEST(OscillatorRadial, MomentumIsPositionWithInverseStrength)
{
    for (auto [n, l] : {std::pair{0, 0}, std::pair{1, 13}, std::pair{3, 2}, std::pair{7, 1}})
        for (double lambda : {0.5, 1.0, 4.0})
            for (double p : {0.0, 0.4, 1.3, 3.7}) {
                const double a = oscillator_radial_momentum(n, l, lambda, p);
                const double b = oscillator_radial_position(n, l, 1.0 / lambda, p);
                EXPECT_NEAR(a, b, 1e-13 * std::max(1.0, std::abs(b)));
            }
}

TEST(OscillatorRadial, Normalized)
{
    for (auto [n, l] : {std::pair{0, 15}, std::pair{1, 13}, std::pair{7, 1}, std::pair{5, 5}})
        for (double lambda : {0.5, 4.0}) {
            const double scale = std::sqrt((4.0 * n + 2.0 * l + 3.0) / lambda);
            EXPECT_NEAR(radial_norm([=](double r) { return oscillator_radial_position(n, l, lambda, r); }, scale), 1.0,
                        1e-10);
            EXPECT_NEAR(
                radial_norm([=](double p) { return oscillator_radial_momentum(n, l, lambda, p); }, scale * lambda),
                1.0, 1e-10);
        }
}

TEST(OscillatorDensity, GroundStateComplexityIsStrengthAndSpaceFree)
{
    const double expected = std::pow(2.0, 1.5);
    for (double lambda : {0.5, 1.0, 4.0})
        for (Space sp : {Space::Position, Space::Momentum}) {
            const auto f = oscillator_density({0, 0, 0, lambda, sp});
            EXPECT_NEAR(normalization(f).value, 1.0, 1e-12);
            EXPECT_NEAR(complexity(f, OrderParam::finite(2.0), OrderParam::infinity()).value / expected, 1.0, 1e-9);
        }
}

TEST(OscillatorDensity, PositionMomentumDuality)
{
    for (const auto& [n, l, m] : {std::tuple{1, 2, 1}, std::tuple{0, 3, 3}, std::tuple{2, 0, 0}})
        for (auto [a, b] : {std::pair{0.5, 2.0}, std::pair{2.0, 0.5}}) {
            const auto pos = oscillator_density({n, l, m, 1.0, Space::Position});
            const auto mom = oscillator_density({n, l, m, 1.0, Space::Momentum});
            const auto oa = OrderParam::finite(a);
            const auto ob = OrderParam::finite(b);
            EXPECT_NEAR(complexity(pos, oa, ob).value, complexity(mom, oa, ob).value, 1e-7);
        }
}

TEST(OscillatorShell, Enumeration)
{
    using V = std::vector<std::pair<int, int>>;
    EXPECT_EQ(oscillator_shell(0), (V{{0, 0}}));
    EXPECT_EQ(oscillator_shell(2), (V{{0, 2}, {1, 0}}));
    EXPECT_EQ(oscillator_shell(15), (V{{0, 15}, {1, 13}, {2, 11}, {3, 9}, {4, 7}, {5, 5}, {6, 3}, {7, 1}}));
    EXPECT_THROW(oscillator_shell(-1), DomainError);
}

TEST(SquareWell, DensityValues)
{
    const auto f = square_well_density({2, 1.0, 1});
    EXPECT_NEAR(f({0.5}), 0.0, 1e-15);
    EXPECT_NEAR(f({0.25}), 2.0, 1e-15);
    EXPECT_EQ(f({1.5}), 0.0);
    EXPECT_NEAR(normalization(f).value, 1.0, 1e-13);
    EXPECT_NEAR(sup_norm(square_well_density({1, 1.0, 1})), 2.0, 1e-14);
    EXPECT_THROW(square_well_density({0, 1.0, 1}), DomainError);
    EXPECT_THROW(square_well_density({1, 1.0, 2}), DomainError);
}

TEST(SquareWell, ComplexityDegenerateAcrossLevels)
{
    const double reference = 2.0 * square_well_g(OrderParam::finite(2.0));
    for (int k = 1; k <= 5; ++k) {
        const auto f = square_well_density({k, 1.0, 1});
        EXPECT_NEAR(complexity(f, OrderParam::finite(2.0), OrderParam::infinity()).value, reference, 1e-9) << k;
    }
    // width is irrelevant too
    const auto wide = square_well_density({3, 7.5, 1});
    EXPECT_NEAR(complexity(wide, OrderParam::finite(2.0), OrderParam::infinity()).value, 4.0 / 3.0, 1e-9);
}

TEST(SquareWellG, Endpoints)
{
    EXPECT_EQ(square_well_g(OrderParam::zero()), 1.0);
    EXPECT_NEAR(square_well_g(OrderParam::finite(2.0)), 2.0 / 3.0, 1e-14);
    EXPECT_EQ(square_well_g(OrderParam::infinity()), 0.5);
    EXPECT_NEAR(square_well_g(OrderParam::finite(1e4)), 0.5, 1e-3);
}

TEST(SquareWellG, MatchesWallisOracle)
{
    for (double a : {0.5, 1.5, 2.0, 3.0, 6.25}) {
        const double wallis = std::exp(0.5 * std::log(kPi) + std::lgamma(a + 0.5) - std::lgamma(a + 1.0));
        const double oracle = std::pow(std::pow(2.0, a) / kPi * wallis, 1.0 / (1.0 - a));
        EXPECT_NEAR(square_well_g(OrderParam::finite(a)), oracle, 1e-10 * oracle) << a;
    }
}

TEST(SquareWellG, ShannonLimitIsContinuous)
{
    const double s = square_well_g(OrderParam::shannon());
    // closed form: S = ln 2 - 1, so g = 2 / e
    EXPECT_NEAR(s, 2.0 / std::exp(1.0), 1e-12);
    EXPECT_NEAR(square_well_g(OrderParam::finite(1.0 + 1e-4)), s, 1e-4);
}

TEST(SquareWellG, DecreasesMonotonicallyTowardHalf)
{
    double previous = std::numeric_limits<double>::infinity();
    for (double a : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
        const double c = 2.0 * square_well_g(OrderParam::from_value(a));
        EXPECT_LT(c, previous);
        EXPECT_GT(c, 1.0);
        previous = c;
    }
}

TEST(BoxComplexity, Values)
{
    EXPECT_NEAR(box_complexity(OrderParam::finite(2.0), 1), 4.0 / 3.0, 1e-13);
    EXPECT_NEAR(box_complexity(OrderParam::finite(2.0), 3), 64.0 / 27.0, 1e-13);
    for (int d = 1; d <= 4; ++d)
        EXPECT_EQ(box_complexity(OrderParam::zero(), d), std::pow(2.0, d));
    EXPECT_THROW(box_complexity(OrderParam::zero(), 0), DomainError);
}
