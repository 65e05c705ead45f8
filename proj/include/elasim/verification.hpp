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

#ifndef elasim_verification_H
#define elasim_verification_H

#include <functional>
#include <string>
#include <vector>

#include "elasim/experiments.hpp"
#include "elasim/lens_model.hpp"

namespace elasim
{

    struct SuiteResult
    {
        std::string name;
        bool passed = false;
        int n_cases = 0;
        std::string detail;  // first counterexample when failed
    };

    // Fault-injection points for the test harness; production callers leave
    // the hooks empty.
    struct VerifyHooks
    {
        std::function<void(PowerFractions&)> perturb_fractions;
    };

    struct VerifyReport
    {
        std::vector<SuiteResult> suites;

        bool all_passed() const
        {
            for (const auto& s : suites)
                if (!s.passed)
                    return false;
            return true;
        }
    };

    /// Property sweeps over the scenario: mean-vector majorization (1000
    /// random vectors), single-path rate dominance (100 random incidences),
    /// power-fraction normalization (1000 random lens/array/angle triples)
    /// and the empirical MRC combiner oracle (20 random channels, 1e5 noise
    /// draws each). Deterministic given the scenario master seed.
    VerifyReport run_verification(const ScenarioConfig& config, const VerifyHooks& hooks = {});

} // namespace elasim

#endif
