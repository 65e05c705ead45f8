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

#include "elasim/verification.hpp"

#include <cmath>
#include <cstdint>
#include <random>

#include "elasim/channel_model.hpp"
#include "elasim/majorization.hpp"
#include "elasim/receiver.hpp"
#include "elasim/report.hpp"
#include "elasim/rng.hpp"

namespace elasim
{

    namespace
    {
        // Suite streams live far away from the trial indices of the rate
        // experiments so the sweeps never alias a simulation substream.
        constexpr std::uint64_t kLemmaStream = 0x10000001ull;
        constexpr std::uint64_t kDominanceStream = 0x10000002ull;
        constexpr std::uint64_t kNormalizationStream = 0x10000003ull;
        constexpr std::uint64_t kCombinerStream = 0x10000004ull;

        SuiteResult sweep_mean_vector(const ScenarioConfig& config)
        {
            SuiteResult result;
            result.name = "mean-vector-majorization";
            result.n_cases = 1000;

            auto rng = trial_rng(config.master_seed, kLemmaStream);
            std::uniform_int_distribution<int> length(1, 64);
            std::uniform_real_distribution<double> entry(0.0, 10.0);

            for (int k = 0; k < result.n_cases; ++k)
            {
                const int n = length(rng);
                std::vector<double> values(static_cast<std::size_t>(n));
                for (auto& v : values)
                    v = entry(rng);
                if (!check_lemma1(values))
                {
                    result.detail = "case " + std::to_string(k) + ": mean vector of length " +
                                    std::to_string(n) + " not majorized by its source";
                    return result;
                }
            }
            result.passed = true;
            return result;
        }

        SuiteResult sweep_single_path_dominance(const ScenarioConfig& config)
        {
            SuiteResult result;
            result.name = "single-path-rate-dominance";
            result.n_cases = 100;

            const ArrayGeometry geom = config.geometry();
            const LensProfile lens = config.lens();
            auto rng = trial_rng(config.master_seed, kDominanceStream);
            std::uniform_real_distribution<double> angle(-0.5 * lens.angular_coverage,
                                                         0.5 * lens.angular_coverage);
            std::uniform_real_distribution<double> budget_exp(0.0, 2.0);

            for (int k = 0; k < result.n_cases; ++k)
            {
                const double aoa = angle(rng);
                const double budget = std::pow(10.0, budget_exp(rng));
                const Proposition1Report report = verify_proposition1(geom, lens, budget, aoa);
                if (!report.holds())
                {
                    result.detail = "case " + std::to_string(k) + ": aoa " + format_double(aoa) +
                                    " deg, budget " + format_double(budget);
                    if (report.first_violation_m)
                        result.detail += ", first failing M " + std::to_string(*report.first_violation_m);
                    return result;
                }
            }
            result.passed = true;
            return result;
        }

        SuiteResult sweep_normalization(const ScenarioConfig& config, const VerifyHooks& hooks)
        {
            SuiteResult result;
            result.name = "power-fraction-normalization";
            result.n_cases = 1000;

            auto rng = trial_rng(config.master_seed, kNormalizationStream);
            std::uniform_int_distribution<int> antennas(2, 32);
            std::uniform_real_distribution<double> spacing(0.2, 1.0);
            std::uniform_real_distribution<double> beamwidth(0.5, 6.0);
            std::uniform_real_distribution<double> aperture(5.0, 40.0);
            std::uniform_real_distribution<double> coverage(30.0, 180.0);
            std::uniform_real_distribution<double> unit(0.0, 1.0);

            for (int k = 0; k < result.n_cases; ++k)
            {
                const ArrayGeometry geom = antenna_positions(antennas(rng), spacing(rng));
                const LensProfile lens = make_lens_profile(aperture(rng), beamwidth(rng), coverage(rng));
                const double aoa = (unit(rng) - 0.5) * lens.angular_coverage;

                PowerFractions fractions = power_fractions(lens, geom, aoa);
                if (hooks.perturb_fractions)
                    hooks.perturb_fractions(fractions);

                double sum = 0.0;
                bool nonnegative = true;
                for (double b : fractions.fractions)
                {
                    sum += b;
                    nonnegative = nonnegative && b >= 0.0;
                }
                if (!nonnegative || std::abs(sum - 1.0) >= 1e-9)
                {
                    result.detail = "case " + std::to_string(k) + ": N " +
                                    std::to_string(geom.n_antennas) + ", aoa " + format_double(aoa) +
                                    " deg, sum " + format_double(sum, 17);
                    return result;
                }
            }
            result.passed = true;
            return result;
        }

        SuiteResult sweep_combiner_oracle(const ScenarioConfig& config)
        {
            SuiteResult result;
            result.name = "mrc-combiner-oracle";
            result.n_cases = 20;

            const ArrayGeometry geom = config.geometry();
            const LensProfile lens = config.lens();
            const double noise_var = 1.0;
            const int n_draws = 100000;

            auto rng = trial_rng(config.master_seed, kCombinerStream);
            std::uniform_int_distribution<int> selection(1, config.n_antennas);

            for (int k = 0; k < result.n_cases; ++k)
            {
                const MultipathRealization paths = draw_multipath(
                    config.n_paths, config.angular_spread, config.snr_linear(), config.n_antennas, rng);
                const ChannelVector channel =
                    k % 2 == 0 ? conventional_channel(paths, geom) : lens_channel(paths, geom, lens);

                const SelectionResult picked = select_top_m(branch_snrs(channel), selection(rng));
                const double expected = picked.combined_snr / noise_var;
                const double estimate =
                    empirical_combiner_snr(channel, picked.selected, noise_var, n_draws, rng);

                if (std::abs(estimate - expected) > 0.05 * expected)
                {
                    result.detail = "case " + std::to_string(k) + ": expected " +
                                    format_double(expected) + ", estimated " + format_double(estimate);
                    return result;
                }
            }
            result.passed = true;
            return result;
        }
    } // namespace

    VerifyReport run_verification(const ScenarioConfig& config, const VerifyHooks& hooks)
    {
        config.validate();
        VerifyReport report;
        report.suites.push_back(sweep_mean_vector(config));
        report.suites.push_back(sweep_single_path_dominance(config));
        report.suites.push_back(sweep_normalization(config, hooks));
        report.suites.push_back(sweep_combiner_oracle(config));
        return report;
    }

} // namespace elasim
