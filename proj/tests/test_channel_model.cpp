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
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "elasim/channel_model.hpp"
#include "elasim/lens_model.hpp"
#include "elasim/rng.hpp"

using namespace elasim;

TEST_CASE("a single path carries the whole SNR budget")
{
    const auto gains = path_gains({13.0}, 10.0);
    REQUIRE(gains.size() == 1);
    CHECK(gains[0] == 10.0);
}

TEST_CASE("path gains follow the cosine weighting and preserve the budget")
{
    const auto gains = path_gains({0.0, 60.0}, 10.0);
    CHECK(gains[0] == doctest::Approx(6.666666666666667).epsilon(1e-14));
    CHECK(gains[1] == doctest::Approx(3.3333333333333339).epsilon(1e-14));

    auto rng = trial_rng(7, 0);
    std::uniform_real_distribution<double> angle(-80.0, 80.0);
    for (int rep = 0; rep < 50; ++rep)
    {
        std::vector<double> aoas(5);
        for (auto& a : aoas)
            a = angle(rng);
        const auto g = path_gains(aoas, 3.7);
        double sum = 0.0;
        for (std::size_t l = 0; l < g.size(); ++l)
        {
            sum += g[l];
            CHECK(g[l] > 0.0);
            // heavier weight for the path closer to broadside
            for (std::size_t k = 0; k < g.size(); ++k)
                if (std::abs(aoas[l]) < std::abs(aoas[k]))
                    CHECK(g[l] >= g[k]);
        }
        CHECK(sum == doctest::Approx(3.7).epsilon(1e-12));
    }
}

TEST_CASE("path gain inputs are validated")
{
    CHECK_THROWS_AS(path_gains({}, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(path_gains({0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(path_gains({0.0}, -1.0), std::invalid_argument);
}

TEST_CASE("multipath draws stay inside the angular spread with full phase range")
{
    auto rng = trial_rng(42, 3);
    const auto real = draw_multipath(64, 60.0, 10.0, 4, rng);
    REQUIRE(real.paths.size() == 64);
    CHECK(real.snr_budget == 10.0);

    double gain_sum = 0.0;
    for (const auto& p : real.paths)
    {
        CHECK(p.aoa_deg >= -30.0);
        CHECK(p.aoa_deg <= 30.0);
        CHECK(p.arrival_phase >= 0.0);
        CHECK(p.arrival_phase < 2.0 * 3.14159265358979323846);
        REQUIRE(p.lens_phases.size() == 4);
        for (double eta : p.lens_phases)
        {
            CHECK(eta >= 0.0);
            CHECK(eta < 2.0 * 3.14159265358979323846);
        }
        gain_sum += p.gain;
    }
    CHECK(gain_sum == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("identical substreams reproduce identical realizations")
{
    auto rng_a = trial_rng(42, 17);
    auto rng_b = trial_rng(42, 17);
    const auto a = draw_multipath(3, 60.0, 10.0, 8, rng_a);
    const auto b = draw_multipath(3, 60.0, 10.0, 8, rng_b);
    for (std::size_t l = 0; l < 3; ++l)
    {
        CHECK(a.paths[l].aoa_deg == b.paths[l].aoa_deg);
        CHECK(a.paths[l].arrival_phase == b.paths[l].arrival_phase);
        CHECK(a.paths[l].lens_phases == b.paths[l].lens_phases);
    }

    auto rng_c = trial_rng(42, 18);
    const auto c = draw_multipath(3, 60.0, 10.0, 8, rng_c);
    CHECK(a.paths[0].aoa_deg != c.paths[0].aoa_deg);
}

TEST_CASE("drawn angles average to broadside over many paths")
{
    auto rng = trial_rng(5, 0);
    double sum = 0.0;
    const int n = 30000;
    for (int k = 0; k < n / 100; ++k)
    {
        const auto real = draw_multipath(100, 60.0, 1.0, 1, rng);
        for (const auto& p : real.paths)
            sum += p.aoa_deg;
    }
    CHECK(std::abs(sum / n) < 0.5);
}

TEST_CASE("multipath draw inputs are validated")
{
    auto rng = trial_rng(1, 1);
    CHECK_THROWS_AS(draw_multipath(0, 60.0, 10.0, 4, rng), std::invalid_argument);
    CHECK_THROWS_AS(draw_multipath(2, 0.0, 10.0, 4, rng), std::invalid_argument);
    CHECK_THROWS_AS(draw_multipath(2, 181.0, 10.0, 4, rng), std::invalid_argument);
    CHECK_THROWS_AS(draw_multipath(2, 60.0, 0.0, 4, rng), std::invalid_argument);
    CHECK_THROWS_AS(draw_multipath(2, 60.0, 10.0, 0, rng), std::invalid_argument);
}

TEST_CASE("single-path bare-array coefficients all carry the budget amplitude")
{
    const auto geom = antenna_positions(20, 0.5);
    MultipathRealization real;
    real.snr_budget = 10.0;
    real.paths.push_back({30.0, 10.0, 0.7, std::vector<double>(20, 0.0)});

    const auto ch = conventional_channel(real, geom);
    REQUIRE(ch.coefficients.size() == 20);
    CHECK_FALSE(ch.lensed);
    for (const auto& h : ch.coefficients)
        CHECK(std::abs(h) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-12));

    // phase advances by 2 pi d sin(theta) per element: pi/2 at d = 0.5, theta = 30
    for (std::size_t i = 0; i + 1 < 20; ++i)
    {
        const std::complex<double> ratio = ch.coefficients[i + 1] / ch.coefficients[i];
        CHECK(ratio.real() == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(ratio.imag() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("single-path lens coefficients follow the power fractions")
{
    const auto geom = antenna_positions(20, 0.5);
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    MultipathRealization real;
    real.snr_budget = 10.0;
    real.paths.push_back({-12.0, 10.0, 1.3, std::vector<double>(20, 0.0)});

    const auto ch = lens_channel(real, geom, lens);
    const auto beta = power_fractions(lens, geom, -12.0);
    CHECK(ch.lensed);
    double total = 0.0;
    for (std::size_t i = 0; i < 20; ++i)
    {
        const double power = std::norm(ch.coefficients[i]);
        CHECK(power == doctest::Approx(20.0 * 10.0 * beta.fractions[i]).epsilon(1e-12));
        total += power;
    }
    CHECK(total == doctest::Approx(20.0 * 10.0).epsilon(1e-9));
}

TEST_CASE("lens coefficients include the per-element phase shifts")
{
    const auto geom = antenna_positions(4, 0.5);
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    MultipathRealization real;
    real.snr_budget = 2.0;
    real.paths.push_back({0.0, 2.0, 0.0, {0.0, 0.5, 1.0, 1.5}});

    const auto ch = lens_channel(real, geom, lens);
    const auto beta = power_fractions(lens, geom, 0.0);
    for (std::size_t i = 0; i < 4; ++i)
    {
        const double amp = std::sqrt(4.0 * 2.0 * beta.fractions[i]);
        const std::complex<double> expected = std::polar(amp, 0.5 * static_cast<double>(i));
        CHECK(std::abs(ch.coefficients[i] - expected) < 1e-12);
    }
}

TEST_CASE("multipath lens power balances the budget through the fractions")
{
    // sum_l sum_i N g_l beta_il = N Gamma for every realization, because each
    // path's fractions sum to one.
    const auto geom = antenna_positions(16, 0.5);
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    auto rng = trial_rng(9, 2);
    const auto real = draw_multipath(6, 60.0, 10.0, 16, rng);

    double total = 0.0;
    for (const auto& p : real.paths)
    {
        const auto beta = power_fractions(lens, geom, p.aoa_deg);
        for (double b : beta.fractions)
            total += 16.0 * p.gain * b;
    }
    CHECK(total == doctest::Approx(160.0).epsilon(1e-9));
}

TEST_CASE("multipath lens channel power matches the budget in expectation")
{
    const auto geom = antenna_positions(8, 0.5);
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);
    auto rng = trial_rng(11, 0);

    double acc = 0.0;
    const int reps = 3000;
    for (int r = 0; r < reps; ++r)
    {
        const auto real = draw_multipath(2, 60.0, 10.0, 8, rng);
        const auto ch = lens_channel(real, geom, lens);
        for (const auto& h : ch.coefficients)
            acc += std::norm(h);
    }
    CHECK(acc / reps == doctest::Approx(80.0).epsilon(0.05));
}

TEST_CASE("many-path bare-array branch power is approximately exponential")
{
    // 64 superposed phasors drive |h|^2 toward an exponential law whose
    // coefficient of variation is 1.
    auto rng = trial_rng(21, 0);
    double sum = 0.0;
    double sq = 0.0;
    const int reps = 10000;
    const auto geom = antenna_positions(1, 0.5);
    for (int r = 0; r < reps; ++r)
    {
        const auto real = draw_multipath(64, 60.0, 1.0, 1, rng);
        const auto ch = conventional_channel(real, geom);
        const double p = std::norm(ch.coefficients[0]);
        sum += p;
        sq += p * p;
    }
    const double mean = sum / reps;
    const double var = sq / reps - mean * mean;
    const double cv = std::sqrt(var) / mean;
    CHECK(cv > 0.85);
    CHECK(cv < 1.15);
}

TEST_CASE("lens channel rejects inconsistent phase vectors and angles")
{
    const auto geom = antenna_positions(4, 0.5);
    const auto lens = make_lens_profile(20.0, 3.0, 60.0);

    MultipathRealization short_phases;
    short_phases.snr_budget = 1.0;
    short_phases.paths.push_back({0.0, 1.0, 0.0, {0.0, 0.0}});
    CHECK_THROWS_AS(lens_channel(short_phases, geom, lens), std::invalid_argument);

    MultipathRealization outside;
    outside.snr_budget = 1.0;
    outside.paths.push_back({45.0, 1.0, 0.0, std::vector<double>(4, 0.0)});
    CHECK_THROWS_AS(lens_channel(outside, geom, lens), std::invalid_argument);
}

TEST_CASE("noiseless synthesis returns the scaled channel")
{
    ChannelVector ch;
    ch.coefficients = {{1.0, 2.0}, {-0.5, 0.25}};
    auto rng = trial_rng(3, 3);
    const std::complex<double> symbol{0.6, -0.8};
    const auto rx = synthesize_received_signal(ch, symbol, 0.0, rng);
    REQUIRE(rx.size() == 2);
    CHECK(std::abs(rx[0] - ch.coefficients[0] * symbol) == 0.0);
    CHECK(std::abs(rx[1] - ch.coefficients[1] * symbol) == 0.0);
}

TEST_CASE("synthesized noise power matches the requested variance")
{
    ChannelVector ch;
    ch.coefficients.assign(4, {1.0, 0.0});
    auto rng = trial_rng(13, 1);
    const std::complex<double> symbol{1.0, 0.0};

    double acc = 0.0;
    const int reps = 25000;
    for (int r = 0; r < reps; ++r)
    {
        const auto rx = synthesize_received_signal(ch, symbol, 2.0, rng);
        for (std::size_t i = 0; i < rx.size(); ++i)
            acc += std::norm(rx[i] - ch.coefficients[i] * symbol);
    }
    CHECK(acc / (reps * 4.0) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("negative noise variance is rejected")
{
    ChannelVector ch;
    ch.coefficients.assign(2, {1.0, 0.0});
    auto rng = trial_rng(1, 1);
    CHECK_THROWS_AS(synthesize_received_signal(ch, {1.0, 0.0}, -0.5, rng), std::invalid_argument);
}
