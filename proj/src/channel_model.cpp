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

#include "elasim/channel_model.hpp"

#include <cmath>
#include <stdexcept>

namespace elasim
{

    namespace
    {
        constexpr double kPi = 3.14159265358979323846;
        constexpr double kTwoPi = 2.0 * kPi;

        double deg2rad(double deg)
        {
            return deg * kPi / 180.0;
        }
    } // namespace

    std::vector<double> path_gains(const std::vector<double>& aoa_deg, double snr_budget)
    {
        if (aoa_deg.empty())
            throw std::invalid_argument("at least one path is required");
        if (!(snr_budget > 0.0))
            throw std::invalid_argument("SNR budget must be positive");

        // A single path carries the whole budget; the cosine weight cancels.
        if (aoa_deg.size() == 1)
            return {snr_budget};

        std::vector<double> cosines(aoa_deg.size());
        double total = 0.0;
        for (std::size_t l = 0; l < aoa_deg.size(); ++l)
        {
            cosines[l] = std::cos(deg2rad(aoa_deg[l]));
            total += cosines[l];
        }

        std::vector<double> gains(aoa_deg.size());
        for (std::size_t l = 0; l < aoa_deg.size(); ++l)
            gains[l] = snr_budget * cosines[l] / total;
        return gains;
    }

    MultipathRealization draw_multipath(int n_paths, double angular_spread_deg, double snr_budget,
                                        int n_antennas, std::mt19937_64& rng)
    {
        if (n_paths < 1)
            throw std::invalid_argument("path count must be at least 1");
        if (!(angular_spread_deg > 0.0) || angular_spread_deg > 180.0)
            throw std::invalid_argument("angular spread must lie in (0, 180] degrees");
        if (!(snr_budget > 0.0))
            throw std::invalid_argument("SNR budget must be positive");
        if (n_antennas < 1)
            throw std::invalid_argument("antenna count must be at least 1");

        std::uniform_real_distribution<double> aoa_dist(-0.5 * angular_spread_deg,
                                                        0.5 * angular_spread_deg);
        std::uniform_real_distribution<double> phase_dist(0.0, kTwoPi);

        std::vector<double> aoas(static_cast<std::size_t>(n_paths));
        for (auto& a : aoas)
            a = aoa_dist(rng);

        const std::vector<double> gains = path_gains(aoas, snr_budget);

        MultipathRealization out;
        out.snr_budget = snr_budget;
        out.paths.resize(static_cast<std::size_t>(n_paths));
        for (int l = 0; l < n_paths; ++l)
        {
            auto& p = out.paths[static_cast<std::size_t>(l)];
            p.aoa_deg = aoas[static_cast<std::size_t>(l)];
            p.gain = gains[static_cast<std::size_t>(l)];
            p.arrival_phase = phase_dist(rng);
        }
        for (auto& p : out.paths)
        {
            p.lens_phases.resize(static_cast<std::size_t>(n_antennas));
            for (auto& eta : p.lens_phases)
                eta = phase_dist(rng);
        }
        return out;
    }

    ChannelVector conventional_channel(const MultipathRealization& paths, const ArrayGeometry& geom)
    {
        const int n = geom.n_antennas;
        ChannelVector ch;
        ch.lensed = false;
        ch.coefficients.assign(static_cast<std::size_t>(n), {0.0, 0.0});

        for (const auto& p : paths.paths)
        {
            const double amp = std::sqrt(p.gain);
            const double spatial_freq = kTwoPi * geom.spacing * std::sin(deg2rad(p.aoa_deg));
            for (int i = 1; i <= n; ++i)
                ch.coefficients[static_cast<std::size_t>(i - 1)] +=
                    std::polar(amp, p.arrival_phase + spatial_freq * static_cast<double>(i));
        }
        return ch;
    }

    ChannelVector lens_channel(const MultipathRealization& paths, const ArrayGeometry& geom,
                               const LensProfile& lens)
    {
        const int n = geom.n_antennas;
        ChannelVector ch;
        ch.lensed = true;
        ch.coefficients.assign(static_cast<std::size_t>(n), {0.0, 0.0});

        for (const auto& p : paths.paths)
        {
            if (p.lens_phases.size() != static_cast<std::size_t>(n))
                throw std::invalid_argument("lens phase count does not match the antenna count");

            const PowerFractions beta = power_fractions(lens, geom, p.aoa_deg);
            const double spatial_freq = kTwoPi * geom.spacing * std::sin(deg2rad(p.aoa_deg));
            for (int i = 1; i <= n; ++i)
            {
                const std::size_t k = static_cast<std::size_t>(i - 1);
                const double amp = std::sqrt(static_cast<double>(n) * p.gain * beta.fractions[k]);
                ch.coefficients[k] +=
                    std::polar(amp, p.arrival_phase + spatial_freq * static_cast<double>(i) + p.lens_phases[k]);
            }
        }
        return ch;
    }

    std::vector<std::complex<double>> synthesize_received_signal(const ChannelVector& channel,
                                                                 std::complex<double> symbol,
                                                                 double noise_var,
                                                                 std::mt19937_64& rng)
    {
        if (noise_var < 0.0)
            throw std::invalid_argument("noise variance must be non-negative");

        std::vector<std::complex<double>> received(channel.coefficients.size());
        for (std::size_t i = 0; i < received.size(); ++i)
            received[i] = channel.coefficients[i] * symbol;

        if (noise_var > 0.0)
        {
            std::normal_distribution<double> component(0.0, std::sqrt(0.5 * noise_var));
            for (auto& y : received)
                y += std::complex<double>(component(rng), component(rng));
        }
        return received;
    }

} // namespace elasim
