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

#ifndef elasim_receiver_H
#define elasim_receiver_H

#include <complex>
#include <random>
#include <vector>

#include "elasim/channel_model.hpp"

namespace elasim
{

    using SnrVector = std::vector<double>;

    struct SelectionResult
    {
        std::vector<int> selected;  // 1-based antenna indices, ascending
        double combined_snr = 0.0;  // sum of the selected branch SNRs
        double rate = 0.0;          // bps/Hz
    };

    /// Per-branch SNR gamma_i = |h_i|^2 (transmit power over noise fixed at 1).
    SnrVector branch_snrs(const ChannelVector& channel);

    /// log2(1 + combined_snr). Throws for negative SNR.
    double achievable_rate(double combined_snr);

    /// Keeps the n_selected branches with the largest SNRs and sums them.
    /// Ties break toward the lowest antenna index, so the selected set is
    /// deterministic. Throws unless 1 <= n_selected <= N.
    SelectionResult select_top_m(const SnrVector& snrs, int n_selected);

    /// Rates for several selection sizes from one descending sort. Partial
    /// sums accumulate in the same order as select_top_m, so both paths give
    /// bit-identical rates.
    std::vector<double> top_m_rates(const SnrVector& snrs, const std::vector<int>& m_values);

    /// Maximal-ratio weights: the conjugated channel coefficient on each
    /// selected branch, zero elsewhere. Throws on an empty selection.
    std::vector<std::complex<double>> mrc_weights(const ChannelVector& channel,
                                                  const std::vector<int>& selected_1based);

    /// Monte Carlo estimate of the combiner output SNR. Each trial sends a
    /// random unit-power symbol through the noisy channel, combines with the
    /// MRC weights and removes the known symbol; the estimate is the coherent
    /// signal power over the residual noise power. Converges to
    /// sum_selected |h_i|^2 / noise_var. Requires n_trials >= 1000.
    double empirical_combiner_snr(const ChannelVector& channel, const std::vector<int>& selected_1based,
                                  double noise_var, int n_trials, std::mt19937_64& rng);

} // namespace elasim

#endif
