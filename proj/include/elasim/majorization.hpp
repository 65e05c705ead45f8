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

#ifndef elasim_majorization_H
#define elasim_majorization_H

#include <optional>
#include <vector>

#include "elasim/array_geometry.hpp"
#include "elasim/lens_model.hpp"

namespace elasim
{

    struct MajorizationReport
    {
        struct Violation
        {
            int prefix_length = 0;       // first M whose partial-sum bound fails
            double partial_sum_x = 0.0;  // sum of the M largest x entries
            double partial_sum_y = 0.0;  // sum of the M largest y entries
        };

        bool majorized = false;
        std::optional<Violation> first_violation;
        double sum_gap = 0.0;  // |sum(x) - sum(y)|
    };

    /// x is majorized by y when every descending partial sum of x stays below
    /// the matching partial sum of y and the totals agree. The tolerance is an
    /// absolute slack on the partial sums; floating-point sorts need it.
    /// Throws on a length mismatch.
    MajorizationReport is_majorized(const std::vector<double>& x, const std::vector<double>& y,
                                    double tol = 1e-9);

    /// The constant vector holding the mean of `values` must be majorized by
    /// `values` itself. Returns that check; a false is a defect.
    bool check_lemma1(const std::vector<double>& values, double tol = 1e-9);

    // Single-path rate-dominance check between the lens and bare-array
    // systems. With one path at a given angle, every bare-array branch sees
    // SNR Gamma while the lens branches see Gamma N beta_i; the bare vector is
    // majorized by the lens vector, so selecting any M branches can only do
    // better with the lens, strictly so for M < N when the beta_i differ.
    struct Proposition1Report
    {
        bool majorization_holds = false;
        bool rate_dominance_holds = false;  // lens rate >= bare rate - tol for all M, equal at M = N
        bool strict_gain = false;           // lens rate - bare rate > tol for every M < N
        bool nonequal_premise = false;      // max beta - min beta > 1e-6
        std::vector<double> rate_conventional;  // indexed by M - 1
        std::vector<double> rate_lensed;
        std::optional<int> first_violation_m;

        // Dominance plus majorization, with strictness required only when the
        // branch SNRs actually differ.
        bool holds() const
        {
            return majorization_holds && rate_dominance_holds && (!nonequal_premise || strict_gain);
        }
    };

    /// Builds the two single-path SNR vectors for an incidence angle, checks
    /// the majorization relation and compares the rates over M = 1..N.
    Proposition1Report verify_proposition1(const ArrayGeometry& geom, const LensProfile& lens,
                                           double snr_budget, double aoa_deg, double tol = 1e-9);

} // namespace elasim

#endif
