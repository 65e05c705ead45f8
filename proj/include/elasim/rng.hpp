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

#ifndef elasim_rng_H
#define elasim_rng_H

#include <cstdint>
#include <random>

namespace elasim
{

    /// Independent substream for one Monte Carlo trial. The stream depends
    /// only on (master_seed, trial_index), so a trial draws the same values
    /// no matter which worker executes it.
    inline std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t trial_index)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                          static_cast<std::uint32_t>(master_seed >> 32),
                          static_cast<std::uint32_t>(trial_index),
                          static_cast<std::uint32_t>(trial_index >> 32)};
        return std::mt19937_64(seq);
    }

} // namespace elasim

#endif
