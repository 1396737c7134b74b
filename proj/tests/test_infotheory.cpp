// Copyright (c) 2026 fapchan contributors
// Distributed under the MIT software license, see the accompanying
// file LICENSE or https://opensource.org/license/mit/.

#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fapchan/cdf.hpp"
#include "fapchan/infotheory.hpp"
#include "fapchan/quadrature.hpp"

using namespace fapchan;

namespace {
const ChannelParams kZero{10.0, 200.0, 0.0};
const ChannelParams kSlow{10.0, 200.0, 1e-4};
const ChannelParams kUnit{10.0, 200.0, 1.0};
const ChannelParams kFast{10.0, 200.0, 5.0};
constexpr double kPi = std::numbers::pi;
} // namespace

TEST_CASE("zero-drift noise entropy matches the closed form ln(4 pi lambda)")
{
    const double h = noise_entropy(kZero, Kernel::CauchyLimit);
    CHECK(h == doctest::Approx(std::log(4.0 * kPi * 10.0)).epsilon(1e-9));
    CHECK(h == doctest::Approx(4.8336093399533029).epsilon(1e-12));
}

TEST_CASE("subordination entropy approaches the zero-drift value as v -> 0")
{
    const double h = noise_entropy(kSlow, Kernel::Subordination);
    CHECK(h == doctest::Approx(4.8334952252260175).epsilon(1e-6));
    CHECK(std::fabs(h - std::log(4.0 * kPi * 10.0)) < 0.02);
}

TEST_CASE("drifted noise entropy sits below the Gaussian maximum-entropy bound")
{
    const double h = noise_entropy(kFast, Kernel::Subordination);
    CHECK(h == doctest::Approx(4.2071602992893959).epsilon(1e-6));
    // Same variance (400), Gaussian shape: 0.5 ln(2 pi e var).
    CHECK(h < 0.5 * std::log(2.0 * kPi * std::numbers::e * 400.0));
}

TEST_CASE("entropy rejects non-probability kernels")
{
    CHECK_THROWS_AS(noise_entropy(kFast, Kernel::Exact), std::domain_error);
    CHECK_THROWS_AS(noise_entropy(kFast, Kernel::CoreAsymptotic), std::domain_error);
    CHECK_THROWS_AS(noise_entropy(kFast, Kernel::TailAsymptotic), std::domain_error);
    CHECK_THROWS_AS(noise_entropy(kFast, Kernel::BivariateCauchy), std::domain_error);
}

TEST_CASE("noise variance reproduces sigma^2 lambda / v")
{
    CHECK(noise_variance(kFast, Kernel::Subordination)
          == doctest::Approx(400.0).epsilon(1e-7));
    CHECK(noise_variance(kUnit, Kernel::Subordination)
          == doctest::Approx(2000.0).epsilon(1e-7));

    CHECK_THROWS_AS(noise_variance(kFast, Kernel::CauchyLimit), std::domain_error);
    CHECK_THROWS_AS(noise_variance(kZero, Kernel::Subordination), std::domain_error);
    CHECK_THROWS_AS(noise_variance(kFast, Kernel::TailAsymptotic), std::domain_error);
    CHECK_THROWS_AS(noise_variance(kFast, Kernel::BivariateCauchy), std::domain_error);
}

TEST_CASE("uniform-input rate in the zero-drift limit")
{
    const double mi = mutual_information_uniform(kZero, Kernel::CauchyLimit, 200.0);
    CHECK(mi == doctest::Approx(1.4695302983957124).epsilon(2e-6));

    const double cap = cauchy_capacity(kZero, 200.0);
    CHECK(cap == doctest::Approx(std::log(20.0)).epsilon(1e-15));
    CHECK(mi > 0.0);
    CHECK(mi < cap);
    const double gap = cap - mi;
    CHECK(gap > 1.2);
    CHECK(gap < 1.8);
}

TEST_CASE("uniform-input rate vanishes continuously at small amplitude")
{
    const double mi = mutual_information_uniform(kZero, Kernel::CauchyLimit, 0.01);
    CHECK(mi >= 0.0);
    CHECK(mi <= 1e-6);
}

TEST_CASE("the mass-deficient printed kernel carries no information rate")
{
    CHECK_THROWS_AS(mutual_information_uniform(kFast, Kernel::Exact, 200.0),
                    std::domain_error);
    CHECK_THROWS_AS(mutual_information_uniform(kZero, Kernel::CauchyLimit, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(mutual_information_uniform(kZero, Kernel::CauchyLimit, -3.0),
                    std::domain_error);
}

TEST_CASE("matched-AWGN baseline is the Shannon formula for uniform-input power")
{
    CHECK(gaussian_capacity(200.0, 400.0)
          == doctest::Approx(0.5 * std::log1p(200.0 * 200.0 / (3.0 * 400.0)))
                 .epsilon(1e-15));
    // Unit SNR: amplitude^2 / 3 equals the noise variance.
    CHECK(gaussian_capacity(std::sqrt(21.0), 7.0)
          == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
    CHECK(gaussian_capacity(1.0, 1e300) < 1e-200);

    CHECK_THROWS_AS(gaussian_capacity(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(gaussian_capacity(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(gaussian_capacity(1.0, -1.0), std::domain_error);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(gaussian_capacity(nan, 1.0), std::domain_error);
    CHECK_THROWS_AS(gaussian_capacity(1.0, nan), std::domain_error);
}

TEST_CASE("zero-drift capacity baseline is the log amplitude ratio")
{
    CHECK(cauchy_capacity(kZero, 200.0) == doctest::Approx(std::log(20.0)).epsilon(1e-12));
    CHECK(cauchy_capacity(kFast, 10.0 * std::numbers::e)
          == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(cauchy_capacity(kZero, 10.0), std::domain_error);
    CHECK_THROWS_AS(cauchy_capacity(kZero, 9.0), std::domain_error);
    CHECK_THROWS_AS(cauchy_capacity(kZero, std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("shaping loss pairs the large-amplitude constant with the numeric gap")
{
    const ShapingLoss loss = shaping_loss(kZero, 200.0, 1.0);
    CHECK(loss.asymptotic_nats == doctest::Approx(std::log(2.0 * kPi)).epsilon(1e-15));
    CHECK(loss.numeric_nats
          == doctest::Approx(cauchy_capacity(kZero, 200.0) - 1.0).epsilon(1e-15));

    const double cap = cauchy_capacity(kZero, 200.0);
    CHECK(shaping_loss(kZero, 200.0, cap).numeric_nats == doctest::Approx(0.0));

    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(shaping_loss(kZero, 200.0, nan), std::domain_error);
    CHECK_THROWS_AS(shaping_loss(kZero, 200.0, std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("zero-drift interference probability has the arctangent closed form")
{
    CHECK(interference_probability(kZero, Kernel::CauchyLimit, 0.0) == 1.0);
    CHECK(interference_probability(kZero, Kernel::CauchyLimit, 10.0)
          == doctest::Approx(0.5).epsilon(1e-15));

    // Far field: p -> 2 lambda / (pi r) with relative error (lambda/r)^2 / 3.
    const double p_far = interference_probability(kZero, Kernel::CauchyLimit, 1000.0);
    CHECK(p_far == doctest::Approx(2.0 * 10.0 / (kPi * 1000.0)).epsilon(1e-3));

    CHECK_THROWS_AS(interference_probability(kZero, Kernel::CauchyLimit, -1.0),
                    std::domain_error);
    CHECK_THROWS_AS(interference_probability(kZero, Kernel::BivariateCauchy, 1.0),
                    std::domain_error);
}

TEST_CASE("drifted interference matches the tabulated cdf complement")
{
    const TabulatedCdf cdf = build_cdf(kFast, Kernel::Subordination);
    for (double r : {10.0, 40.0, 120.0}) {
        const double p = interference_probability(kFast, Kernel::Subordination, r);
        const double via_cdf = 1.0 - (cdf.eval(r) - cdf.eval(-r)) / cdf.total_mass;
        CHECK(std::fabs(p - via_cdf) <= 2e-6);
    }
}

TEST_CASE("drift suppresses interference exponentially, not algebraically")
{
    const double p_sub = interference_probability(kFast, Kernel::Subordination, 400.0);
    const double p_cauchy = interference_probability(kZero, Kernel::CauchyLimit, 400.0);
    CHECK(p_sub < p_cauchy / 10.0);

    // Successive doublings fall faster than the algebraic law's factor.
    const double sub_ratio = interference_probability(kFast, Kernel::Subordination, 80.0)
                             / interference_probability(kFast, Kernel::Subordination, 40.0);
    const double cauchy_ratio = interference_probability(kZero, Kernel::CauchyLimit, 80.0)
                                / interference_probability(kZero, Kernel::CauchyLimit, 40.0);
    CHECK(sub_ratio < cauchy_ratio);
}

TEST_CASE("planar interference uses the radial survival closed form")
{
    CHECK(bivariate_interference_probability(kZero, 0.0) == 1.0);
    CHECK(bivariate_interference_probability(kZero, 10.0)
          == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(bivariate_interference_probability(kZero, -1.0), std::domain_error);

    // The planar density integrates to 1 over the plane.
    auto radial = [](double r) { return 2.0 * kPi * r * bivariate_cauchy_pdf(kZero, r, 0.0); };
    const QuadResult mass = integrate_semi_infinite(radial, 0.0, {});
    REQUIRE(mass.converged);
    CHECK(mass.value == doctest::Approx(1.0).epsilon(1e-6));

    // And its survival at every radius equals the closed form.
    for (double r : {1.0, 10.0, 100.0}) {
        const QuadResult tail = integrate_semi_infinite(radial, r, {});
        REQUIRE(tail.converged);
        CHECK(tail.value
              == doctest::Approx(bivariate_interference_probability(kZero, r)).epsilon(1e-8));
    }
}

TEST_CASE("capacity sweep assembles consistent per-velocity rows")
{
    const std::vector<CapacityPoint> rows =
        capacity_sweep(kZero, Kernel::Subordination, {5.0}, 200.0);
    REQUIRE(rows.size() == 1);
    const CapacityPoint& row = rows[0];
    CHECK(row.v == 5.0);
    CHECK(row.n_c == 40.0);
    CHECK(row.c_cauchy_nats == doctest::Approx(std::log(20.0)).epsilon(1e-15));
    CHECK(row.noise_variance == doctest::Approx(400.0).epsilon(1e-6));
    CHECK(row.mi_exact_nats == doctest::Approx(1.87151106182).epsilon(2e-6));
    CHECK(row.c_gauss_nats
          == doctest::Approx(gaussian_capacity(200.0, row.noise_variance)).epsilon(1e-12));
    // Closed-form variance sigma^2 lambda / v gives the same baseline to 1%.
    CHECK(row.c_gauss_nats
          == doctest::Approx(gaussian_capacity(200.0, 400.0)).epsilon(0.01));

    CHECK_THROWS_AS(capacity_sweep(kZero, Kernel::Subordination, {5.0, 1.0}, 200.0),
                    std::domain_error);
    CHECK_THROWS_AS(capacity_sweep(kZero, Kernel::Subordination, {0.0, 1.0}, 200.0),
                    std::domain_error);
    CHECK_THROWS_AS(capacity_sweep(kZero, Kernel::Subordination, {-1.0}, 200.0),
                    std::domain_error);
}

TEST_CASE("capacity sweep of the zero-drift kernel is drift-independent")
{
    const std::vector<CapacityPoint> rows =
        capacity_sweep(kZero, Kernel::CauchyLimit, {1.0, 2.0}, 200.0);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].mi_exact_nats == rows[1].mi_exact_nats);
    CHECK(std::isinf(rows[0].noise_variance));
    CHECK(rows[0].c_gauss_nats == 0.0);
    CHECK(rows[0].n_c == 200.0);
    CHECK(rows[1].n_c == 100.0);
}

TEST_CASE("interference sweep prepends the zero-drift baseline once")
{
    const std::vector<double> radii{10.0, 40.0};
    const std::vector<InterferencePoint> rows = interference_sweep(
        kZero, Kernel::Subordination, {0.1, 5.0}, radii, /*include_zero_drift=*/true);
    REQUIRE(rows.size() == 6);

    // First block: the closed-form algebraic law.
    CHECK(rows[0].v == 0.0);
    CHECK(rows[0].p_int
          == doctest::Approx(interference_probability(kZero, Kernel::CauchyLimit, 10.0))
                 .epsilon(1e-15));
    CHECK(rows[1].p_int
          == doctest::Approx(interference_probability(kZero, Kernel::CauchyLimit, 40.0))
                 .epsilon(1e-15));

    // Per velocity, probability is nonincreasing in radius and in (0, 1].
    for (std::size_t i = 0; i < rows.size(); i += radii.size()) {
        for (std::size_t j = 1; j < radii.size(); ++j)
            CHECK(rows[i + j].p_int <= rows[i + j - 1].p_int);
        for (std::size_t j = 0; j < radii.size(); ++j) {
            CHECK(rows[i + j].p_int > 0.0);
            CHECK(rows[i + j].p_int <= 1.0);
        }
    }

    // An explicit leading zero is not duplicated.
    const std::vector<InterferencePoint> explicit_zero =
        interference_sweep(kZero, Kernel::Subordination, {0.0}, radii, true);
    REQUIRE(explicit_zero.size() == 2);
    CHECK(explicit_zero[0].p_int == rows[0].p_int);

    CHECK_THROWS_AS(
        interference_sweep(kZero, Kernel::Subordination, {1.0}, {40.0, 10.0}, false),
        std::domain_error);
    CHECK_THROWS_AS(
        interference_sweep(kZero, Kernel::Subordination, {-1.0}, radii, false),
        std::domain_error);
}
