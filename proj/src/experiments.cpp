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

#include "elasim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "elasim/channel_model.hpp"
#include "elasim/receiver.hpp"
#include "elasim/rng.hpp"

namespace elasim
{

    void ScenarioConfig::validate() const
    {
        if (n_antennas < 1)
            throw std::invalid_argument("antennas must be at least 1");
        if (!(spacing > 0.0))
            throw std::invalid_argument("spacing must be positive");
        if (!(beamwidth > 0.0))
            throw std::invalid_argument("beamwidth must be positive");
        if (!(aperture > 0.0))
            throw std::invalid_argument("aperture must be positive");
        if (!(angular_spread > 0.0) || angular_spread > 180.0)
            throw std::invalid_argument("angular-spread must lie in (0, 180] degrees");
        if (!std::isfinite(snr_db))
            throw std::invalid_argument("snr-db must be finite");
        if (n_paths < 1)
            throw std::invalid_argument("paths must be at least 1");
        if (n_trials < 1)
            throw std::invalid_argument("trials must be at least 1");
        for (int m : m_values)
            if (m < 1 || m > n_antennas)
                throw std::invalid_argument("M values must lie in [1, antennas]");
    }

    std::vector<int> ScenarioConfig::resolved_m_values() const
    {
        std::vector<int> values = m_values;
        if (values.empty())
        {
            values.resize(static_cast<std::size_t>(n_antennas));
            for (int m = 1; m <= n_antennas; ++m)
                values[static_cast<std::size_t>(m - 1)] = m;
            return values;
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        return values;
    }

    double ScenarioConfig::snr_linear() const
    {
        return std::pow(10.0, snr_db / 10.0);
    }

    ArrayGeometry ScenarioConfig::geometry() const
    {
        return antenna_positions(n_antennas, spacing);
    }

    LensProfile ScenarioConfig::lens() const
    {
        return make_lens_profile(aperture, beamwidth, angular_spread);
    }

    RateCurve run_rate_vs_m(const ScenarioConfig& config, int n_workers)
    {
        config.validate();
        if (n_workers < 1)
            throw std::invalid_argument("worker count must be at least 1");

        const ArrayGeometry geom = config.geometry();
        const LensProfile lens = config.lens();
        const std::vector<int> m_values = config.resolved_m_values();
        const double snr = config.snr_linear();
        const std::size_t n_m = m_values.size();
        const int n_trials = config.n_trials;

        // Per-trial slots; filled in parallel, reduced sequentially in trial
        // order so the result does not depend on the worker count.
        std::vector<double> conventional(static_cast<std::size_t>(n_trials) * n_m);
        std::vector<double> lensed(static_cast<std::size_t>(n_trials) * n_m);

        auto run_block = [&](int first_trial, int last_trial) {
            for (int t = first_trial; t < last_trial; ++t)
            {
                auto rng = trial_rng(config.master_seed, static_cast<std::uint64_t>(t));
                const MultipathRealization paths =
                    draw_multipath(config.n_paths, config.angular_spread, snr, config.n_antennas, rng);

                const std::vector<double> conv_rates =
                    top_m_rates(branch_snrs(conventional_channel(paths, geom)), m_values);
                const std::vector<double> lens_rates =
                    top_m_rates(branch_snrs(lens_channel(paths, geom, lens)), m_values);

                const std::size_t base = static_cast<std::size_t>(t) * n_m;
                std::copy(conv_rates.begin(), conv_rates.end(), conventional.begin() + base);
                std::copy(lens_rates.begin(), lens_rates.end(), lensed.begin() + base);
            }
        };

        const int workers = std::min(n_workers, n_trials);
        if (workers <= 1)
        {
            run_block(0, n_trials);
        }
        else
        {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
            pool.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w)
            {
                const int first = static_cast<int>(static_cast<long long>(n_trials) * w / workers);
                const int last = static_cast<int>(static_cast<long long>(n_trials) * (w + 1) / workers);
                pool.emplace_back([&, first, last, w] {
                    try
                    {
                        run_block(first, last);
                    }
                    catch (...)
                    {
                        errors[static_cast<std::size_t>(w)] = std::current_exception();
                    }
                });
            }
            for (auto& th : pool)
                th.join();
            for (const auto& err : errors)
                if (err)
                    std::rethrow_exception(err);
        }

        RateCurve curve;
        curve.n_antennas = config.n_antennas;
        curve.n_trials = n_trials;
        curve.m_values = m_values;
        curve.conventional_mean.resize(n_m);
        curve.conventional_stderr.resize(n_m);
        curve.lensed_mean.resize(n_m);
        curve.lensed_stderr.resize(n_m);

        auto reduce = [&](const std::vector<double>& samples, std::vector<double>& mean_out,
                          std::vector<double>& stderr_out) {
            for (std::size_t j = 0; j < n_m; ++j)
            {
                double sum = 0.0;
                for (int t = 0; t < n_trials; ++t)
                    sum += samples[static_cast<std::size_t>(t) * n_m + j];
                const double mean = sum / static_cast<double>(n_trials);

                double sq = 0.0;
                for (int t = 0; t < n_trials; ++t)
                {
                    const double dev = samples[static_cast<std::size_t>(t) * n_m + j] - mean;
                    sq += dev * dev;
                }
                mean_out[j] = mean;
                stderr_out[j] = n_trials > 1
                                    ? std::sqrt(sq / static_cast<double>(n_trials - 1) /
                                                static_cast<double>(n_trials))
                                    : 0.0;
            }
        };
        reduce(conventional, curve.conventional_mean, curve.conventional_stderr);
        reduce(lensed, curve.lensed_mean, curve.lensed_stderr);
        return curve;
    }

    int min_antennas_for_capacity_fraction(const RateCurve& curve, double fraction, SystemKind system)
    {
        if (!(fraction > 0.0) || fraction > 1.0)
            throw std::invalid_argument("capacity fraction must lie in (0, 1]");
        const auto full = std::find(curve.m_values.begin(), curve.m_values.end(), curve.n_antennas);
        if (full == curve.m_values.end())
            throw std::invalid_argument("curve must contain the full selection M = N");

        const std::vector<double>& means =
            system == SystemKind::conventional ? curve.conventional_mean : curve.lensed_mean;
        const double target =
            fraction * means[static_cast<std::size_t>(full - curve.m_values.begin())];

        for (std::size_t j = 0; j < curve.m_values.size(); ++j)
            if (means[j] >= target)
                return curve.m_values[j];
        return curve.n_antennas;
    }

    MultipathSensitivity compare_multipath_sensitivity(const ScenarioConfig& low_paths,
                                                       const ScenarioConfig& high_paths,
                                                       int n_workers)
    {
        const bool same = low_paths.n_antennas == high_paths.n_antennas &&
                          low_paths.spacing == high_paths.spacing &&
                          low_paths.beamwidth == high_paths.beamwidth &&
                          low_paths.aperture == high_paths.aperture &&
                          low_paths.angular_spread == high_paths.angular_spread &&
                          low_paths.snr_db == high_paths.snr_db &&
                          low_paths.n_trials == high_paths.n_trials &&
                          low_paths.master_seed == high_paths.master_seed &&
                          low_paths.resolved_m_values() == high_paths.resolved_m_values();
        if (!same)
            throw std::invalid_argument("configs must agree on everything except the path count");

        MultipathSensitivity out;
        out.low = run_rate_vs_m(low_paths, n_workers);
        out.high = run_rate_vs_m(high_paths, n_workers);

        const std::size_t n_m = out.low.m_values.size();
        out.conventional_gap.resize(n_m);
        out.lensed_gap.resize(n_m);
        for (std::size_t j = 0; j < n_m; ++j)
        {
            out.conventional_gap[j] = std::abs(out.high.conventional_mean[j] - out.low.conventional_mean[j]);
            out.lensed_gap[j] = std::abs(out.high.lensed_mean[j] - out.low.lensed_mean[j]);
            out.max_conventional_gap = std::max(out.max_conventional_gap, out.conventional_gap[j]);
            out.max_lensed_gap = std::max(out.max_lensed_gap, out.lensed_gap[j]);
        }
        return out;
    }

    ScenarioConfig fig6_preset()
    {
        ScenarioConfig config;
        config.n_antennas = 20;
        config.spacing = 0.5;
        config.beamwidth = 3.0;
        config.aperture = 20.0;
        config.angular_spread = 60.0;
        config.snr_db = 10.0;
        config.n_paths = 1;
        config.n_trials = 1000;
        config.master_seed = 42;
        return config;
    }

    std::pair<ScenarioConfig, ScenarioConfig> fig7_preset()
    {
        ScenarioConfig low = fig6_preset();
        low.n_paths = 2;
        ScenarioConfig high = low;
        high.n_paths = 20;
        return {low, high};
    }

} // namespace elasim
