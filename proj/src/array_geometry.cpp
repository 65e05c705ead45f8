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

#include "elasim/array_geometry.hpp"

#include <stdexcept>

namespace elasim
{

    ArrayGeometry antenna_positions(int n_antennas, double spacing)
    {
        if (n_antennas < 1)
            throw std::invalid_argument("antenna count must be at least 1");
        if (!(spacing > 0.0))
            throw std::invalid_argument("antenna spacing must be positive");

        ArrayGeometry geom;
        geom.n_antennas = n_antennas;
        geom.spacing = spacing;
        geom.positions.resize(static_cast<std::size_t>(n_antennas));

        const double first = -0.5 * static_cast<double>(n_antennas - 1) * spacing;
        for (int i = 0; i < n_antennas; ++i)
            geom.positions[static_cast<std::size_t>(i)] = first + static_cast<double>(i) * spacing;

        return geom;
    }

} // namespace elasim
