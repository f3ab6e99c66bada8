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

#ifndef LOSMIMO_GEOMETRY_HPP
#define LOSMIMO_GEOMETRY_HPP

namespace losmimo
{
    // Uniform rectangular array: m_h antennas per row, m_v rows, numbered row by row.
    // Spacings are only meaningful on axes with more than one antenna.
    struct UraSpec
    {
        int m_h = 1;                 // Antennas per horizontal row
        int m_v = 1;                 // Number of rows
        double spacing_h = 0.0;      // Horizontal spacing in [m]
        double spacing_v = 0.0;      // Vertical spacing in [m]
        double element_width = 0.0;  // Side of the square element in [m]

        int count() const { return m_h * m_v; }

        // Throws DomainError when an invariant is violated
        void validate() const;
    };

    // Two broadside-aligned arrays separated by distance d
    struct LinkGeometry
    {
        UraSpec tx;
        UraSpec rx;
        double distance = 0.0;   // [m]
        double wavelength = 0.0; // [m]

        void validate() const;

        // True when d >= 2 max(D_t, D_r), i.e. the common channel gain approximation is reasonable.
        // Diagnostic only.
        bool far_channel_gain_ok() const;
    };

    // Split of the optimal spacing product between the two arrays:
    // h_t = (lambda d / m_h)^alpha, v_t = (lambda d / m_v)^gamma_split
    struct SpacingSplit
    {
        double alpha = 0.5;
        double gamma_split = 0.5;

        void validate() const;
    };

    struct AntennaIndex
    {
        int i = 0; // Horizontal index, 0 .. m_h-1
        int j = 0; // Vertical index, 0 .. m_v-1
    };

    struct Position
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;
    };

    struct ApertureLengths
    {
        double horizontal = 0.0; // [m]
        double vertical = 0.0;   // [m]
    };

    struct Spacing
    {
        double h = 0.0; // [m]
        double v = 0.0; // [m]
    };

    struct SplitSpacing
    {
        double h_t = 0.0;
        double h_r = 0.0;
        double v_t = 0.0;
        double v_r = 0.0;
    };

    // Grid indices of the 1-based antenna number m; requires 1 <= m <= m_h m_v
    AntennaIndex antenna_index(int m, int m_h, int m_v);
    AntennaIndex antenna_index(int m, const UraSpec &array);

    // Element positions: tx antenna m at (-i h_t, -j v_t, 0), rx antenna k at (-i h_r, -j v_r, d)
    Position tx_position(const LinkGeometry &link, int m);
    Position rx_position(const LinkGeometry &link, int k);

    // Distance between tx antenna m and rx antenna k (both 1-based)
    double pair_distance(const LinkGeometry &link, int m, int k);

    double array_diagonal(const UraSpec &array);

    // L = spacing (count - 1) + W on each axis
    ApertureLengths aperture_lengths(const UraSpec &array);

    // sqrt(lambda d / m_h), sqrt(lambda d / m_v)
    Spacing symmetric_optimal_spacing(double wavelength, double distance, int m_h, int m_v);

    SplitSpacing split_optimal_spacing(double wavelength, double distance, int m_h, int m_v,
                                       const SpacingSplit &split);

    // Link with both arrays at the spacing that nulls all Gram off-diagonals of the Fresnel channel
    LinkGeometry optimal_link(double wavelength, double distance, int m_h, int m_v,
                              double element_width = 0.0, const SpacingSplit &split = {});

    // Link with a common spacing delta on all four axes
    LinkGeometry uniform_link(double wavelength, double distance, int m_h, int m_v, double delta,
                              double element_width = 0.0);

    // 2 d (m_h + m_v), valid at the symmetric optimal spacing
    double fraunhofer_array_distance(double distance, int m_h, int m_v);

    // 2 arcsin(lambda / (m_h h_r)); throws DomainError when the ratio exceeds 1
    double first_null_beamwidth(double wavelength, int m_h, double spacing_r);

    // 2 sqrt(lambda d / m_h)
    double beam_footprint(double distance, double wavelength, int m_h);
}

#endif
