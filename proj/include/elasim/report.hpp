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

#ifndef elasim_report_H
#define elasim_report_H

#include <string>

#include "elasim/experiments.hpp"

namespace elasim
{

    /// Locale-independent decimal formatting (std::to_chars), 10 significant
    /// digits by default.
    std::string format_double(double value, int precision = 10);

    /// CSV with header
    /// M,rate_conventional_mean,rate_conventional_stderr,rate_lensed_mean,rate_lensed_stderr,n_trials
    /// and one row per selection size, ascending.
    std::string rate_curve_to_csv(const RateCurve& curve);

    /// Scenario serialized as a JSON object, keys matching the CLI flags.
    std::string config_to_json_string(const ScenarioConfig& config, int indent = 2);

    /// Parses either a bare config object or a run manifest carrying one under
    /// its "config" key. Unknown keys are rejected; the result is validated.
    /// Keys absent from the JSON keep their value in `base`.
    ScenarioConfig config_from_json_string(const std::string& text,
                                           const ScenarioConfig& base = ScenarioConfig{});

} // namespace elasim

#endif
