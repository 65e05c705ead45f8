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

#include "elasim/lens_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elasim
{

    namespace
    {
        constexpr double kPi = 3.14159265358979323846;

        void require_valid_lens(const LensProfile& lens)
        {
            if (!(lens.aperture > 0.0))
                throw std::invalid_argument("lens aperture must be positive");
            if (!(lens.variance > 0.0))
                throw std::invalid_argument("lens variance must be positive");
            if (!(lens.angular_coverage > 0.0) || lens.angular_coverage > 180.0)
                throw std::invalid_argument("lens angular coverage must lie in (0, 180] degrees");
        }

        void require_in_coverage(double aoa_deg, const LensProfile& lens)
        {
            const double half = 0.5 * lens.angular_coverage;
            if (!(aoa_deg >= -half && aoa_deg <= half))
                throw std::invalid_argument("angle of arrival outside lens angular coverage");
        }
    } // namespace

    double beamwidth_to_variance(double beamwidth)
    {
        if (!(beamwidth > 0.0))
            throw std::invalid_argument("beamwidth must be positive");
        return beamwidth * beamwidth / kBeamwidthSqOverVariance;
    }

    LensProfile make_lens_profile(double aperture, double beamwidth, double angular_coverage_deg)
    {
        LensProfile lens;
        lens.aperture = aperture;
        lens.beamwidth = beamwidth;
        lens.variance = beamwidth_to_variance(beamwidth);
        lens.angular_coverage = angular_coverage_deg;
        require_valid_lens(lens);
        return lens;
    }

    double normal_cdf(double x)
    {
        return 0.5 * std::erfc(-x / std::sqrt(2.0));
    }

    double peak_location(double aoa_deg, const LensProfile& lens)
    {
        require_valid_lens(lens);
        require_in_coverage(aoa_deg, lens);
        return (aoa_deg / 90.0) * (0.5 * lens.aperture);
    }

    double normalized_density(double y, double aoa_deg, const LensProfile& lens)
    {
        const double ybar = peak_location(aoa_deg, lens);
        const double dy = y - ybar;
        return std::exp(-dy * dy / (2.0 * lens.variance)) / std::sqrt(2.0 * kPi * lens.variance);
    }

    PowerFractions power_fractions(const LensProfile& lens, const ArrayGeometry& geom, double aoa_deg)
    {
        require_valid_lens(lens);
        require_in_coverage(aoa_deg, lens);
        if (geom.n_antennas < 1 || geom.positions.size() != static_cast<std::size_t>(geom.n_antennas))
            throw std::invalid_argument("array geometry is not initialized");

        const int n = geom.n_antennas;
        PowerFractions out;
        out.aoa_deg = aoa_deg;
        out.fractions.assign(static_cast<std::size_t>(n), 0.0);

        if (n == 1)
        {
            out.fractions[0] = 1.0;
            return out;
        }

        const double ybar = (aoa_deg / 90.0) * (0.5 * lens.aperture);
        const double sd = std::sqrt(lens.variance);

        // CDF at the n-1 interior bin edges y_i + d/2; differencing shared edge
        // values makes the fractions telescope to exactly 1.
        std::vector<double> edge_cdf(static_cast<std::size_t>(n - 1));
        for (int k = 0; k < n - 1; ++k)
        {
            const double edge = geom.positions[static_cast<std::size_t>(k)] + 0.5 * geom.spacing;
            edge_cdf[static_cast<std::size_t>(k)] = normal_cdf((edge - ybar) / sd);
        }

        out.fractions[0] = edge_cdf[0];
        for (int i = 1; i < n - 1; ++i)
            out.fractions[static_cast<std::size_t>(i)] =
                std::max(0.0, edge_cdf[static_cast<std::size_t>(i)] - edge_cdf[static_cast<std::size_t>(i - 1)]);
        out.fractions[static_cast<std::size_t>(n - 1)] = 1.0 - edge_cdf[static_cast<std::size_t>(n - 2)];

        return out;
    }

} // namespace elasim
