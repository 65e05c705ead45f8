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

#include "elasim/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "elasim/receiver.hpp"

namespace elasim
{

    MajorizationReport is_majorized(const std::vector<double>& x, const std::vector<double>& y,
                                    double tol)
    {
        if (x.size() != y.size())
            throw std::invalid_argument("majorization requires equal-length vectors");
        if (x.empty())
            throw std::invalid_argument("majorization requires non-empty vectors");
        if (tol < 0.0)
            throw std::invalid_argument("tolerance must be non-negative");

        std::vector<double> xs = x;
        std::vector<double> ys = y;
        std::sort(xs.begin(), xs.end(), std::greater<double>());
        std::sort(ys.begin(), ys.end(), std::greater<double>());

        MajorizationReport report;
        double sum_x = 0.0;
        double sum_y = 0.0;
        const std::size_t n = xs.size();
        for (std::size_t m = 0; m + 1 < n; ++m)
        {
            sum_x += xs[m];
            sum_y += ys[m];
            if (sum_x > sum_y + tol && !report.first_violation)
                report.first_violation =
                    MajorizationReport::Violation{static_cast<int>(m + 1), sum_x, sum_y};
        }
        if (n >= 1)
        {
            sum_x += xs[n - 1];
            sum_y += ys[n - 1];
        }
        report.sum_gap = std::abs(sum_x - sum_y);
        report.majorized = !report.first_violation && report.sum_gap <= tol;
        return report;
    }

    bool check_lemma1(const std::vector<double>& values, double tol)
    {
        if (values.empty())
            throw std::invalid_argument("lemma check requires a non-empty vector");

        double sum = 0.0;
        for (double v : values)
            sum += v;
        const std::vector<double> mean_vector(values.size(), sum / static_cast<double>(values.size()));
        return is_majorized(mean_vector, values, tol).majorized;
    }

    Proposition1Report verify_proposition1(const ArrayGeometry& geom, const LensProfile& lens,
                                           double snr_budget, double aoa_deg, double tol)
    {
        if (!(snr_budget > 0.0))
            throw std::invalid_argument("SNR budget must be positive");

        const PowerFractions beta = power_fractions(lens, geom, aoa_deg);
        const int n = geom.n_antennas;

        // Single-path branch SNRs: Gamma everywhere without the lens,
        // Gamma N beta_i with it.
        SnrVector conventional(static_cast<std::size_t>(n), snr_budget);
        SnrVector lensed(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            lensed[static_cast<std::size_t>(i)] =
                snr_budget * static_cast<double>(n) * beta.fractions[static_cast<std::size_t>(i)];

        Proposition1Report report;
        report.majorization_holds = is_majorized(conventional, lensed, tol).majorized;

        const auto [min_beta, max_beta] =
            std::minmax_element(beta.fractions.begin(), beta.fractions.end());
        report.nonequal_premise = (*max_beta - *min_beta) > 1e-6;

        std::vector<int> all_m(static_cast<std::size_t>(n));
        for (int m = 1; m <= n; ++m)
            all_m[static_cast<std::size_t>(m - 1)] = m;
        report.rate_conventional = top_m_rates(conventional, all_m);
        report.rate_lensed = top_m_rates(lensed, all_m);

        report.rate_dominance_holds = true;
        report.strict_gain = true;
        for (int m = 1; m <= n; ++m)
        {
            const double rc = report.rate_conventional[static_cast<std::size_t>(m - 1)];
            const double rl = report.rate_lensed[static_cast<std::size_t>(m - 1)];
            const bool dominated = rl >= rc - tol;
            const bool endpoint_equal = (m < n) || std::abs(rl - rc) <= tol;
            if (!dominated || !endpoint_equal)
            {
                report.rate_dominance_holds = false;
                if (!report.first_violation_m)
                    report.first_violation_m = m;
            }
            if (m < n && !(rl - rc > tol))
                report.strict_gain = false;
        }
        return report;
    }

} // namespace elasim
