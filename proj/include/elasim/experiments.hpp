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

#ifndef elasim_experiments_H
#define elasim_experiments_H

#include <cstdint>
#include <utility>
#include <vector>

#include "elasim/array_geometry.hpp"
#include "elasim/lens_model.hpp"

namespace elasim
{

    // Full description of one rate-vs-M study. Lengths in wavelengths, angles
    // in degrees, SNR budget in dB (converted to linear internally).
    struct ScenarioConfig
    {
        int n_antennas = 20;
        double spacing = 0.5;
        double beamwidth = 3.0;
        double aperture = 20.0;
        double angular_spread = 60.0;  // degrees; doubles as the lens angular coverage
        double snr_db = 10.0;
        int n_paths = 1;
        int n_trials = 1000;
        std::uint64_t master_seed = 42;
        std::vector<int> m_values;  // empty means 1..N

        /// Throws std::invalid_argument naming the offending field.
        void validate() const;

        /// Sorted, deduplicated selection sizes; defaults to 1..N.
        std::vector<int> resolved_m_values() const;

        double snr_linear() const;
        ArrayGeometry geometry() const;
        LensProfile lens() const;
    };

    struct RateCurve
    {
        int n_antennas = 0;
        int n_trials = 0;
        std::vector<int> m_values;  // ascending
        std::vector<double> conventional_mean;
        std::vector<double> conventional_stderr;
        std::vector<double> lensed_mean;
        std::vector<double> lensed_stderr;
    };

    /// Monte Carlo rate-vs-M curves for the bare and lens systems. Each trial
    /// owns the substream (master_seed, trial index) and both channels share
    /// one realization, so the output is identical for any worker count; the
    /// reduction always runs in ascending trial order.
    RateCurve run_rate_vs_m(const ScenarioConfig& config, int n_workers = 1);

    enum class SystemKind
    {
        conventional,
        lensed
    };

    /// Smallest selection size whose mean rate reaches `fraction` of the mean
    /// rate at full selection (M = N). The curve must contain M = N and the
    /// fraction must lie in (0, 1].
    int min_antennas_for_capacity_fraction(const RateCurve& curve, double fraction, SystemKind system);

    // Per-M gaps between two runs that differ only in the number of paths.
    struct MultipathSensitivity
    {
        RateCurve low;   // fewer paths
        RateCurve high;  // more paths
        std::vector<double> conventional_gap;  // |mean difference| per M
        std::vector<double> lensed_gap;
        double max_conventional_gap = 0.0;
        double max_lensed_gap = 0.0;
    };

    /// Runs both configs and reports the per-M mean-rate gaps. The configs
    /// must agree on every field except n_paths.
    MultipathSensitivity compare_multipath_sensitivity(const ScenarioConfig& low_paths,
                                                       const ScenarioConfig& high_paths,
                                                       int n_workers = 1);

    /// Single-path baseline study: N = 20, d = 0.5, Delta = 3, D = 20,
    /// spread 60 deg, 10 dB budget, 1000 trials.
    ScenarioConfig fig6_preset();

    /// Multipath sensitivity pair: the same parameters with 2 and 20 paths.
    std::pair<ScenarioConfig, ScenarioConfig> fig7_preset();

} // namespace elasim

#endif
