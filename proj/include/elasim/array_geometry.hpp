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

#ifndef elasim_array_geometry_H
#define elasim_array_geometry_H

#include <vector>

namespace elasim
{

    // Uniform linear array along the y-axis, centered at y = 0.
    // All lengths are expressed in carrier wavelengths. Antenna identities
    // are 1-based in every report; storage is 0-based.
    struct ArrayGeometry
    {
        int n_antennas = 0;
        double spacing = 0.0;           // element separation d, in wavelengths
        std::vector<double> positions;  // element y-coordinates, in wavelengths
    };

    /// Element coordinates y_i = -(N-1)d/2 + (i-1)d, i = 1..N.
    /// Throws std::invalid_argument for n_antennas < 1 or spacing <= 0.
    ArrayGeometry antenna_positions(int n_antennas, double spacing);

} // namespace elasim

#endif
