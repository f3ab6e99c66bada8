// SPDX-License-Identifier: Apache-2.0
//
// losmimo: line-of-sight MIMO design library for dual-polarized planar arrays
// Copyright (C) 2026 The losmimo authors
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

#ifndef LOSMIMO_CONSTANTS_HPP
#define LOSMIMO_CONSTANTS_HPP

#include <numbers>

namespace losmimo
{
    inline constexpr double kSpeedOfLight = 299792458.0; // m/s
    inline constexpr double kSpeedOfLightApprox = 3.0e8; // m/s, gives lambda = 0.01 m at 30 GHz
    inline constexpr double kPi = std::numbers::pi;

    // Wavelength in meters for a carrier frequency in Hz
    double wavelength_from_frequency(double frequency_hz, double c = kSpeedOfLight);

    // Carrier frequency in Hz for a wavelength in meters
    double frequency_from_wavelength(double wavelength_m, double c = kSpeedOfLight);

    // 10^(db/10)
    double db_to_linear(double db);
}

#endif
