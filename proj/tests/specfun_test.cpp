#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gencomplex/quadrature.hpp"
#include "gencomplex/specfun.hpp"

using namespace gencomplex;

namespace {

// Explicit-sum oracles, evaluated in long double.

// L_n^a(x) = sum_i (-1)^i binom(n + a, n - i) x^i / i!
long double laguerre_series(int n, long double a, long double x, long double* magnitude = nullptr)
{
    long double sum = 0.0L;
    long double mag = 0.0L;
    for (int i = 0; i <= n; ++i) {
        const long double binom = std::exp(std::lgamma(n + a + 1.0L) - std::lgamma(n - i + 1.0L) -
                                           std::lgamma(a + i + 1.0L));
        const long double term = binom * std::pow(x, i) / std::tgamma(i + 1.0L);
        sum += (i % 2 ? -term : term);
        mag += term;
    }
    if (magnitude)
        *magnitude = mag;
    return sum;
}

// C_n^a(t) = sum_k (-1)^k Gamma(n - k + a) / (Gamma(a) k! (n - 2k)!) (2t)^(n - 2k)
long double gegenbauer_series(int n, long double a, long double t, long double* magnitude = nullptr)
{
    long double sum = 0.0L;
    long double mag = 0.0L;
    for (int k = 0; 2 * k <= n; ++k) {
        const long double coef = std::exp(std::lgamma(n - k + a) - std::lgamma(a) - std::lgamma(k + 1.0L) -
                                          std::lgamma(n - 2 * k + 1.0L));
        const long double term = coef * std::pow(2.0L * t, n - 2 * k);
        sum += (k % 2 ? -term : term);
        mag += std::abs(term);
    }
    if (magnitude)
        *magnitude = mag;
    return sum;
}

}  // namespace

TEST(LogScaled, RoundTripsFiniteNonzeroReals)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> exponent(-300.0, 300.0);
    std::uniform_real_distribution<double> mantissa(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = mantissa(rng) * std::pow(10.0, exponent(rng));
        if (x == 0.0 || !std::isfinite(x))
            continue;
        const double back = LogScaled::from_double(x).decode();
        // the stored logarithm carries one ulp of |ln x|
        const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(std::log(std::abs(x))));
        EXPECT_NEAR(back / x, 1.0, slack) << x;
    }
}

TEST(LogScaled, ZeroUsesSentinel)
{
    const auto z = LogScaled::from_double(0.0);
    EXPECT_EQ(z.sign, 0);
    EXPECT_EQ(z.log_magnitude, -std::numeric_limits<double>::infinity());
    EXPECT_EQ(z.decode(), 0.0);
    EXPECT_EQ((z * LogScaled::from_double(3.0)).sign, 0);
}

TEST(LogScaled, ProductBeyondDoubleRange)
{
    // 200! / 198! = 200 * 199, each factorial far outside double range
    const auto big = LogScaled::from_log(log_factorial(200)) / LogScaled::from_log(log_factorial(198));
    EXPECT_NEAR(big.decode(), 200.0 * 199.0, 1e-8);
    EXPECT_NEAR(LogScaled::from_double(-2.0).pow(3.0).decode(), -8.0, 1e-14);
    EXPECT_THROW(LogScaled::from_double(-2.0).sqrt(), DomainError);
}

TEST(LogGamma, FrozenHighPrecisionValues)
{
    // mpmath, 30 digits
    const std::pair<double, double> cases[] = {
        {0.5, 0.5723649429247000870717},   {1.0, 0.0},
        {1.5, -0.1207822376352452223455},  {2.5, 0.2846828704729191596325},
        {7.25, 7.052185450738539444926},   {30.0, 71.25703896716800901007},
        {100.5, 361.4355404677776215553},  {200.0, 857.9336698258574368183},
    };
    for (auto [x, expected] : cases)
        EXPECT_NEAR(log_gamma(x), expected, 1e-13 * std::max(1.0, std::abs(expected))) << x;
}

TEST(LogGamma, MatchesExactFactorial)
{
    long double fact = 1.0L;
    for (int n = 1; n <= 29; ++n) {
        fact *= n;
        EXPECT_NEAR(log_gamma(n + 1.0), std::log(fact), 1e-13 * std::log(fact) + 1e-15);
    }
}

TEST(LogGamma, RejectsNonPositive)
{
    EXPECT_THROW(log_gamma(0.0), DomainError);
    EXPECT_THROW(log_gamma(-1.5), DomainError);
}

TEST(AssocLaguerre, LowDegreeValues)
{
    EXPECT_EQ(assoc_laguerre(0, 3.7, 12.0), 1.0);
    EXPECT_DOUBLE_EQ(assoc_laguerre(1, 2.0, 1.0), 2.0);
    EXPECT_DOUBLE_EQ(assoc_laguerre(2, 0.0, 0.0), 1.0);
    // L_n^a(0) = binom(n + a, n)
    EXPECT_NEAR(assoc_laguerre(5, 3.0, 0.0), 56.0, 1e-12);
}

TEST(AssocLaguerre, RecurrenceMatchesSeries)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> abscissa(0.0, 25.0);
    std::vector<double> superscripts = {0.5, 1.0};
    for (int l = 0; l <= 5; ++l)
        superscripts.push_back(2.0 * l + 1.0);
    for (int degree = 0; degree <= 12; ++degree)
        for (double a : superscripts)
            for (int i = 0; i < 20; ++i) {
                const double x = abscissa(rng);
                long double magnitude = 0.0L;
                const double ref = static_cast<double>(laguerre_series(degree, a, x, &magnitude));
                // relative to the value, floored by the cancellation scale of the sum
                const double scale = std::max<double>(std::abs(ref), 1e-6 * static_cast<double>(magnitude));
                EXPECT_NEAR(assoc_laguerre(degree, a, x), ref, 1e-10 * scale)
                    << "n=" << degree << " a=" << a << " x=" << x;
            }
}

TEST(Gegenbauer, LowDegreeValues)
{
    EXPECT_EQ(gegenbauer(0, 2.5, -0.3), 1.0);
    EXPECT_DOUBLE_EQ(gegenbauer(1, 1.0, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(gegenbauer(2, 1.0, 1.0), 3.0);
    // C_n^1 is the Chebyshev U_n: U_n(1) = n + 1
    EXPECT_NEAR(gegenbauer(13, 1.0, 1.0), 14.0, 1e-12);
}

TEST(Gegenbauer, RecurrenceMatchesSeries)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> abscissa(-1.0, 1.0);
    std::vector<double> superscripts = {0.5, 1.0};
    for (int l = 0; l <= 5; ++l)
        superscripts.push_back(2.0 * l + 1.0);
    for (int degree = 0; degree <= 12; ++degree)
        for (double a : superscripts)
            for (int i = 0; i < 20; ++i) {
                const double t = abscissa(rng);
                long double magnitude = 0.0L;
                const double ref = static_cast<double>(gegenbauer_series(degree, a, t, &magnitude));
                const double scale = std::max<double>(std::abs(ref), 1e-6 * static_cast<double>(magnitude));
                EXPECT_NEAR(gegenbauer(degree, a, t), ref, 1e-10 * scale)
                    << "n=" << degree << " a=" << a << " t=" << t;
            }
}

TEST(Gegenbauer, RejectsArgumentOutsideInterval)
{
    EXPECT_THROW(gegenbauer(3, 1.0, 1.0001), DomainError);
    EXPECT_THROW(gegenbauer(3, 0.0, 0.5), DomainError);
    EXPECT_THROW(gegenbauer(61, 1.0, 0.5), DomainError);
}

TEST(SphericalHarmonic, KnownClosedForms)
{
    const double pi = std::numbers::pi;
    EXPECT_NEAR(sph_harmonic_modsq(0, 0, 1.234), 1.0 / (4.0 * pi), 1e-15);
    EXPECT_NEAR(sph_harmonic_modsq(1, 0, 0.0), 3.0 / (4.0 * pi), 1e-15);
    for (double theta : {0.1, 0.7, 1.5, 2.9}) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        EXPECT_NEAR(sph_harmonic_modsq(1, 1, theta), 3.0 / (8.0 * pi) * s * s, 1e-15);
        EXPECT_NEAR(sph_harmonic_modsq(2, 0, theta), 5.0 / (16.0 * pi) * std::pow(3.0 * c * c - 1.0, 2), 1e-14);
        EXPECT_NEAR(sph_harmonic_modsq(3, 3, theta), 35.0 / (64.0 * pi) * std::pow(s, 6), 1e-14);
    }
}

TEST(SphericalHarmonic, UnitNormalizationUpToL15)
{
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    for (int l = 0; l <= 15; ++l)
        for (int m = -l; m <= l; ++m) {
            auto f = [l, m](double t) { return sph_harmonic_modsq(l, m, t) * std::sin(t); };
            const double total = 2.0 * std::numbers::pi * integrate(f, 0.0, std::numbers::pi, spec).value;
            EXPECT_NEAR(total, 1.0, 1e-10) << "l=" << l << " m=" << m;
        }
}

TEST(SphericalHarmonic, SymmetricInMAndNonnegative)
{
    for (int l = 0; l <= 40; l += 3)
        for (int m = 0; m <= l; ++m)
            for (double theta = 0.0; theta <= std::numbers::pi; theta += 0.173) {
                const double v = sph_harmonic_modsq(l, m, theta);
                EXPECT_EQ(v, sph_harmonic_modsq(l, -m, theta));
                EXPECT_GE(v, 0.0);
                EXPECT_TRUE(std::isfinite(v));
            }
}

TEST(SphericalHarmonic, RejectsInvalidQuantumNumbers)
{
    EXPECT_THROW(sph_harmonic_modsq(3, 4, 0.2), DomainError);
    EXPECT_THROW(sph_harmonic_modsq(41, 0, 0.2), DomainError);
}
