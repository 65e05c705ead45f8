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

#include "elasim/receiver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace elasim
{

    namespace
    {
        constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

        // Branch order shared by select_top_m and top_m_rates: SNR descending,
        // ties toward the lower antenna index.
        std::vector<int> descending_order(const SnrVector& snrs)
        {
            std::vector<int> order(snrs.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                if (snrs[static_cast<std::size_t>(a)] != snrs[static_cast<std::size_t>(b)])
                    return snrs[static_cast<std::size_t>(a)] > snrs[static_cast<std::size_t>(b)];
                return a < b;
            });
            return order;
        }

        void require_selection(const ChannelVector& channel, const std::vector<int>& selected_1based)
        {
            if (selected_1based.empty())
                throw std::invalid_argument("selection must not be empty");
            const int n = static_cast<int>(channel.coefficients.size());
            for (int idx : selected_1based)
                if (idx < 1 || idx > n)
                    throw std::invalid_argument("selected antenna index out of range");
        }
    } // namespace

    SnrVector branch_snrs(const ChannelVector& channel)
    {
        SnrVector snrs(channel.coefficients.size());
        for (std::size_t i = 0; i < snrs.size(); ++i)
            snrs[i] = std::norm(channel.coefficients[i]);
        return snrs;
    }

    double achievable_rate(double combined_snr)
    {
        if (combined_snr < 0.0)
            throw std::invalid_argument("combined SNR must be non-negative");
        return std::log2(1.0 + combined_snr);
    }

    SelectionResult select_top_m(const SnrVector& snrs, int n_selected)
    {
        const int n = static_cast<int>(snrs.size());
        if (n_selected < 1 || n_selected > n)
            throw std::invalid_argument("selection size must lie in [1, N]");

        const std::vector<int> order = descending_order(snrs);

        SelectionResult result;
        result.selected.reserve(static_cast<std::size_t>(n_selected));
        double sum = 0.0;
        for (int k = 0; k < n_selected; ++k)
        {
            sum += snrs[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
            result.selected.push_back(order[static_cast<std::size_t>(k)] + 1);
        }
        std::sort(result.selected.begin(), result.selected.end());
        result.combined_snr = sum;
        result.rate = achievable_rate(sum);
        return result;
    }

    std::vector<double> top_m_rates(const SnrVector& snrs, const std::vector<int>& m_values)
    {
        const int n = static_cast<int>(snrs.size());
        const std::vector<int> order = descending_order(snrs);

        std::vector<double> prefix(snrs.size() + 1, 0.0);
        for (std::size_t k = 0; k < snrs.size(); ++k)
            prefix[k + 1] = prefix[k] + snrs[static_cast<std::size_t>(order[k])];

        std::vector<double> rates(m_values.size());
        for (std::size_t j = 0; j < m_values.size(); ++j)
        {
            const int m = m_values[j];
            if (m < 1 || m > n)
                throw std::invalid_argument("selection size must lie in [1, N]");
            rates[j] = achievable_rate(prefix[static_cast<std::size_t>(m)]);
        }
        return rates;
    }

    std::vector<std::complex<double>> mrc_weights(const ChannelVector& channel,
                                                  const std::vector<int>& selected_1based)
    {
        require_selection(channel, selected_1based);
        std::vector<std::complex<double>> weights(channel.coefficients.size(), {0.0, 0.0});
        for (int idx : selected_1based)
            weights[static_cast<std::size_t>(idx - 1)] =
                std::conj(channel.coefficients[static_cast<std::size_t>(idx - 1)]);
        return weights;
    }

    double empirical_combiner_snr(const ChannelVector& channel, const std::vector<int>& selected_1based,
                                  double noise_var, int n_trials, std::mt19937_64& rng)
    {
        require_selection(channel, selected_1based);
        if (n_trials < 1000)
            throw std::invalid_argument("combiner SNR estimation needs at least 1000 trials");
        if (!(noise_var > 0.0))
            throw std::invalid_argument("noise variance must be positive");

        const std::vector<std::complex<double>> weights = mrc_weights(channel, selected_1based);
        std::uniform_real_distribution<double> phase_dist(0.0, kTwoPi);

        // Data-aided estimate: remove the known unit-power symbol from the
        // combiner output, then split the coherent mean (signal amplitude)
        // from the residual fluctuation (noise power).
        std::complex<double> mean_acc{0.0, 0.0};
        double power_acc = 0.0;
        for (int t = 0; t < n_trials; ++t)
        {
            const std::complex<double> symbol = std::polar(1.0, phase_dist(rng));
            const auto received = synthesize_received_signal(channel, symbol, noise_var, rng);

            std::complex<double> combined{0.0, 0.0};
            for (int idx : selected_1based)
                combined += weights[static_cast<std::size_t>(idx - 1)] *
                            received[static_cast<std::size_t>(idx - 1)];

            const std::complex<double> derotated = combined * std::conj(symbol);
            mean_acc += derotated;
            power_acc += std::norm(derotated);
        }

        const std::complex<double> mean = mean_acc / static_cast<double>(n_trials);
        const double signal_power = std::norm(mean);
        const double noise_power =
            (power_acc / static_cast<double>(n_trials) - signal_power) *
            (static_cast<double>(n_trials) / static_cast<double>(n_trials - 1));
        if (!(noise_power > 0.0))
            throw std::runtime_error("degenerate noise power estimate");
        return signal_power / noise_power;
    }

} // namespace elasim
