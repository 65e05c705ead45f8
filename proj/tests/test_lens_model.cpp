// SPDX-License-Identifier: Apache-2.0
//
// elasim - lens-focusing antenna array link-level simulation library
// Copyright (C) 2026 The elasim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "elasim/array_geometry.hpp"
#include "elasim/lens_model.hpp"

using namespace elasim;

namespace
{
    // Composite Simpson integral of the standard normal density, used as an
    // oracle independent of the erfc-based CDF in the library.
    double simpson_normal_cdf(double x)
    {
        const double lo = -8.0;
        const int n = 4000;  // even
        const double h = (x - lo) / n;
        auto pdf = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * 3.14159265358979323846); };
        double acc = pdf(lo) + pdf(x);
        for (int k = 1; k < n; ++k)
            acc += pdf(lo + k * h) * (k % 2 == 1 ? 4.0 : 2.0);
        return acc * h / 3.0;
    }

    // Trapezoid integral of the focal density over [a, b].
    double trapezoid_density(const LensProfile& lens, double aoa_deg, double a, double b)
    {
        const int n = 20000;
        const double h = (b - a) / n;
        double acc = 0.5 * (normalized_density(a, aoa_deg, lens) + normalized_density(b, aoa_deg, lens));
        for (int k = 1; k < n; ++k)
            acc += normalized_density(a + k * h, aoa_deg, lens);
        return acc * h;
    }
} // namespace

TEST_CASE("beamwidth to variance conversion")
{
    CHECK(beamwidth_to_variance(3.0) == doctest::Approx(0.48859934853420189).epsilon(1e-14));
    CHECK(beamwidth_to_variance(0.1) == doctest::Approx(0.0005428881650380022).epsilon(1e-14));
    CHECK_THROWS_AS(beamwidth_to_variance(0.0), std::invalid_argument);
    CHECK_THROWS_AS(beamwidth_to_variance(-3.0), std::invalid_argument);
}

TEST_CASE("density at half a beamwidth from the peak sits at 10% of the peak")
{
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    const double peak = normalized_density(0.0, 0.0, lens);
    const double edge = normalized_density(0.5 * lens.beamwidth, 0.0, lens);
    CHECK(edge / peak == doctest::Approx(0.10000850966145569).epsilon(1e-12));
    CHECK(std::abs(edge / peak - 0.1) < 1e-3);
}

TEST_CASE("profile construction validates its parameters")
{
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    CHECK(lens.aperture == 20.0);
    CHECK(lens.beamwidth == 3.0);
    CHECK(lens.variance == doctest::Approx(0.48859934853420189).epsilon(1e-14));
    CHECK(lens.angular_coverage == 60.0);

    CHECK_THROWS_AS(make_lens_profile(0.0, 3.0, 60.0), std::invalid_argument);
    CHECK_THROWS_AS(make_lens_profile(-1.0, 3.0, 60.0), std::invalid_argument);
    CHECK_THROWS_AS(make_lens_profile(20.0, 0.0, 60.0), std::invalid_argument);
    CHECK_THROWS_AS(make_lens_profile(20.0, 3.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_lens_profile(20.0, 3.0, 181.0), std::invalid_argument);
}

TEST_CASE("normal CDF matches tabulated values and an independent quadrature")
{
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(normal_cdf(1.0) == doctest::Approx(0.84134474606854293).epsilon(1e-13));
    CHECK(normal_cdf(-1.0) == doctest::Approx(0.15865525393145707).epsilon(1e-13));
    CHECK(normal_cdf(2.0) == doctest::Approx(0.97724986805182079).epsilon(1e-13));
    CHECK(normal_cdf(3.0) == doctest::Approx(0.9986501019683699).epsilon(1e-13));

    for (double x : {-2.0, -0.5, 0.3, 1.7})
        CHECK(std::abs(normal_cdf(x) - simpson_normal_cdf(x)) < 1e-10);

    for (double x = -4.0; x <= 4.0; x += 0.25)
        CHECK(normal_cdf(x) + normal_cdf(-x) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("focal peak location tracks the angle of arrival")
{
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    CHECK(peak_location(0.0, lens) == 0.0);
    CHECK(peak_location(30.0, lens) == doctest::Approx(3.333333333333333).epsilon(1e-14));
    CHECK(peak_location(-30.0, lens) == doctest::Approx(-3.333333333333333).epsilon(1e-14));

    const auto wide = make_lens_profile(20.0, 3.0, 180.0);
    CHECK(peak_location(90.0, wide) == doctest::Approx(10.0).epsilon(1e-14));

    CHECK_THROWS_AS(peak_location(40.0, lens), std::invalid_argument);
    CHECK_THROWS_AS(peak_location(-31.0, lens), std::invalid_argument);
}

TEST_CASE("focal density is a unit-mass Gaussian around the peak")
{
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    const double sd = std::sqrt(lens.variance);
    CHECK(sd == doctest::Approx(0.69899881869299452).epsilon(1e-14));

    const double peak = normalized_density(peak_location(25.0, lens), 25.0, lens);
    CHECK(peak == doctest::Approx(1.0 / std::sqrt(2.0 * 3.14159265358979323846 * lens.variance))
                      .epsilon(1e-14));

    const double ybar = peak_location(25.0, lens);
    const double mass = trapezoid_density(lens, 25.0, ybar - 10.0 * sd, ybar + 10.0 * sd);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("power fractions sum to one and stay non-negative")
{
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    const auto geom = antenna_positions(20, 0.5);
    for (double aoa : {0.0, 30.0, -30.0, 17.3, -8.9})
    {
        const auto beta = power_fractions(lens, geom, aoa);
        REQUIRE(beta.fractions.size() == 20);
        CHECK(beta.aoa_deg == aoa);
        double sum = 0.0;
        for (double b : beta.fractions)
        {
            CHECK(b >= 0.0);
            sum += b;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("broadside incidence splits power symmetrically across the center pair")
{
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    const auto geom = antenna_positions(20, 0.5);
    const auto beta = power_fractions(lens, geom, 0.0);
    CHECK(beta.fractions[9] == doctest::Approx(0.26279087121234568).epsilon(1e-12));
    CHECK(beta.fractions[10] == doctest::Approx(0.26279087121234568).epsilon(1e-12));
    for (int i = 0; i < 20; ++i)
        CHECK(beta.fractions[static_cast<std::size_t>(i)] ==
              doctest::Approx(beta.fractions[static_cast<std::size_t>(19 - i)]).epsilon(1e-12));
}

TEST_CASE("oblique incidence shifts the focal spot toward the matching edge")
{
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    const auto geom = antenna_positions(20, 0.5);
    const auto beta = power_fractions(lens, geom, 30.0);
    int argmax = 0;
    for (int i = 1; i < 20; ++i)
        if (beta.fractions[static_cast<std::size_t>(i)] > beta.fractions[static_cast<std::size_t>(argmax)])
            argmax = i;
    CHECK(argmax + 1 == 17);
    CHECK(beta.fractions[static_cast<std::size_t>(argmax)] ==
          doctest::Approx(0.27750218007129623).epsilon(1e-12));
}

TEST_CASE("interior power fractions agree with direct quadrature of the density")
{
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    const auto geom = antenna_positions(20, 0.5);
    for (double aoa : {0.0, 12.5, -27.0})
    {
        const auto beta = power_fractions(lens, geom, aoa);
        for (int i : {5, 9, 10, 14})
        {
            const double y = geom.positions[static_cast<std::size_t>(i)];
            const double oracle =
                trapezoid_density(lens, aoa, y - 0.5 * geom.spacing, y + 0.5 * geom.spacing);
            CHECK(beta.fractions[static_cast<std::size_t>(i)] ==
                  doctest::Approx(oracle).epsilon(1e-8));
        }
    }
}

TEST_CASE("boundary elements absorb the full tails")
{
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    const auto geom = antenna_positions(4, 0.5);
    // With only 4 elements and a focal spot at +30 deg (ybar = 3.33), nearly
    // all power escapes past the last edge and must land on element 4.
    const auto beta = power_fractions(lens, geom, 30.0);
    CHECK(beta.fractions[3] > 0.99);
    double sum = 0.0;
    for (double b : beta.fractions)
        sum += b;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("single-element arrays collect everything")
{
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    const auto geom = antenna_positions(1, 0.5);
    const auto beta = power_fractions(lens, geom, 11.0);
    REQUIRE(beta.fractions.size() == 1);
    CHECK(beta.fractions[0] == 1.0);
}

TEST_CASE("power fractions reject out-of-coverage angles and bad geometry")
{
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    const auto geom = antenna_positions(20, 0.5);
    CHECK_THROWS_AS(power_fractions(lens, geom, 31.0), std::invalid_argument);
    CHECK_THROWS_AS(power_fractions(lens, ArrayGeometry{}, 0.0), std::invalid_argument);
}
