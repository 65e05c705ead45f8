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

#ifndef elasim_channel_model_H
#define elasim_channel_model_H

#include <complex>
#include <random>
#include <vector>

#include "elasim/array_geometry.hpp"
#include "elasim/lens_model.hpp"

namespace elasim
{

    // One plane-wave path. The transmit-power over noise ratio is fixed at 1,
    // so the linear gain doubles as the per-path SNR contribution.
    struct PathComponent
    {
        double aoa_deg = 0.0;             // theta_l
        double gain = 0.0;                // g_l, linear
        double arrival_phase = 0.0;       // alpha_l, radians in [0, 2pi)
        std::vector<double> lens_phases;  // eta_il, one per antenna, radians in [0, 2pi)
    };

    struct MultipathRealization
    {
        std::vector<PathComponent> paths;
        double snr_budget = 0.0;  // Gamma, linear; equals the sum of path gains
    };

    struct ChannelVector
    {
        std::vector<std::complex<double>> coefficients;
        bool lensed = false;
    };

    /// Path gains proportional to cos(theta_l), normalized so they sum to the
    /// SNR budget: g_l = Gamma cos(theta_l) / sum_k cos(theta_k).
    std::vector<double> path_gains(const std::vector<double>& aoa_deg, double snr_budget);

    /// Draws a multipath realization: angles of arrival uniform on
    /// [-spread/2, spread/2], arrival and lens phases uniform on [0, 2pi).
    /// Draw order is fixed (all angles, all arrival phases, then per-path lens
    /// phases) so identical streams reproduce identical realizations.
    MultipathRealization draw_multipath(int n_paths, double angular_spread_deg, double snr_budget,
                                        int n_antennas, std::mt19937_64& rng);

    /// Bare-array channel h_i = sum_l sqrt(g_l) exp(j(alpha_l + 2 pi i d sin theta_l)),
    /// with the antenna index i = 1..N in the phase term and d in wavelengths.
    ChannelVector conventional_channel(const MultipathRealization& paths, const ArrayGeometry& geom);

    /// Lens channel h~_i = sum_l sqrt(N g_l beta_il) exp(j(alpha_l + 2 pi i d sin theta_l + eta_il)),
    /// with beta_il from power_fractions. Throws if a path angle falls outside
    /// the lens angular coverage.
    ChannelVector lens_channel(const MultipathRealization& paths, const ArrayGeometry& geom,
                               const LensProfile& lens);

    /// Received vector y = h s + n with circularly-symmetric complex Gaussian
    /// noise of per-component variance noise_var (real and imaginary parts
    /// each carry noise_var / 2).
    std::vector<std::complex<double>> synthesize_received_signal(const ChannelVector& channel,
                                                                 std::complex<double> symbol,
                                                                 double noise_var,
                                                                 std::mt19937_64& rng);

} // namespace elasim

#endif
