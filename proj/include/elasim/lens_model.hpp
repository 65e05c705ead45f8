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

#ifndef elasim_lens_model_H
#define elasim_lens_model_H

#include <vector>

#include "elasim/array_geometry.hpp"

namespace elasim
{

    // 90% power beamwidth relation for a Gaussian focal profile: the density
    // at Delta/2 from the peak is 10% of the peak value, hence Delta^2 = 18.42 V.
    inline constexpr double kBeamwidthSqOverVariance = 18.42;

    // Gaussian spatial power-density model of the dielectric lens in front of
    // the array. The focal spot for an incident wave with angle of arrival
    // theta (degrees) is centered at ybar = (theta/90)(D/2) with constant
    // variance V over the angular coverage.
    struct LensProfile
    {
        double aperture = 0.0;          // lens diameter D, wavelengths
        double beamwidth = 0.0;         // 90% power beamwidth Delta, wavelengths
        double variance = 0.0;          // V = Delta^2 / 18.42, wavelengths^2
        double angular_coverage = 0.0;  // Theta, degrees; incidence valid on [-Theta/2, Theta/2]
    };

    /// V = Delta^2 / 18.42. Throws for beamwidth <= 0.
    double beamwidth_to_variance(double beamwidth);

    /// Validated profile with the variance derived from the beamwidth.
    LensProfile make_lens_profile(double aperture, double beamwidth, double angular_coverage_deg);

    /// Standard normal CDF, evaluated as 0.5 * erfc(-x / sqrt(2)) with the
    /// C library erfc. Absolute error stays below 1e-12 over the real line.
    double normal_cdf(double x);

    /// Focal peak coordinate ybar = (theta/90)(D/2), theta in degrees.
    /// Throws if theta lies outside the angular coverage.
    double peak_location(double aoa_deg, const LensProfile& lens);

    /// Normalized focal density f(y; theta) = exp(-(y-ybar)^2 / 2V) / sqrt(2 pi V).
    double normalized_density(double y, double aoa_deg, const LensProfile& lens);

    // Per-antenna shares of the lens-collected power for one incident wave.
    // fractions[i] >= 0 and the fractions sum to 1: the first and last antenna
    // absorb the left and right tails of the density.
    struct PowerFractions
    {
        std::vector<double> fractions;  // beta_i, one per antenna
        double aoa_deg = 0.0;
    };

    /// Integrates the focal density over each element bin [y_i - d/2, y_i + d/2]
    /// via the normal CDF; the boundary bins extend to -inf / +inf. The bin
    /// edges are evaluated once and differenced so the fractions telescope to
    /// exactly 1 up to CDF evaluation error.
    PowerFractions power_fractions(const LensProfile& lens, const ArrayGeometry& geom, double aoa_deg);

} // namespace elasim

#endif
