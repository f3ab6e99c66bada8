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

#include "losmimo/geometry.hpp"
#include "losmimo/constants.hpp"
#include "losmimo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace losmimo
{
    double wavelength_from_frequency(double frequency_hz, double c)
    {
        if (!(frequency_hz > 0.0))
            throw DomainError("frequency must be positive, got " + std::to_string(frequency_hz));
        return c / frequency_hz;
    }

    double frequency_from_wavelength(double wavelength_m, double c)
    {
        if (!(wavelength_m > 0.0))
            throw DomainError("wavelength must be positive, got " + std::to_string(wavelength_m));
        return c / wavelength_m;
    }

    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

    void UraSpec::validate() const
    {
        if (m_h < 1 || m_v < 1)
            throw DomainError("array counts must be >= 1 (m_h=" + std::to_string(m_h) +
                              ", m_v=" + std::to_string(m_v) + ")");
        if (!(element_width >= 0.0))
            throw DomainError("element_width must be >= 0");
        if (m_h > 1 && !(spacing_h > 0.0))
            throw DomainError("spacing_h must be > 0 when m_h > 1");
        if (m_v > 1 && !(spacing_v > 0.0))
            throw DomainError("spacing_v must be > 0 when m_v > 1");
    }

    void LinkGeometry::validate() const
    {
        tx.validate();
        rx.validate();
        if (tx.m_h != rx.m_h || tx.m_v != rx.m_v)
            throw DomainError("tx and rx arrays must have the same m_h x m_v layout");
        if (!(distance > 0.0))
            throw DomainError("distance must be > 0");
        if (!(wavelength > 0.0))
            throw DomainError("wavelength must be > 0");
    }

    bool LinkGeometry::far_channel_gain_ok() const
    {
        return distance >= 2.0 * std::max(array_diagonal(tx), array_diagonal(rx));
    }

    void SpacingSplit::validate() const
    {
        if (!(alpha >= 0.0 && alpha <= 1.0))
            throw DomainError("alpha must lie in [0,1], got " + std::to_string(alpha));
        if (!(gamma_split >= 0.0 && gamma_split <= 1.0))
            throw DomainError("gamma_split must lie in [0,1], got " + std::to_string(gamma_split));
    }

    AntennaIndex antenna_index(int m, int m_h, int m_v)
    {
        if (m_h < 1 || m_v < 1)
            throw DomainError("array counts must be >= 1");
        if (m < 1 || m > m_h * m_v)
            throw DomainError("antenna number " + std::to_string(m) + " outside 1.." +
                              std::to_string(m_h * m_v));
        const int row = (m - 1) / m_h;
        return {(m - 1) - m_h * row, row};
    }

    AntennaIndex antenna_index(int m, const UraSpec &array)
    {
        return antenna_index(m, array.m_h, array.m_v);
    }

    Position tx_position(const LinkGeometry &link, int m)
    {
        const auto [i, j] = antenna_index(m, link.tx);
        return {-i * link.tx.spacing_h, -j * link.tx.spacing_v, 0.0};
    }

    Position rx_position(const LinkGeometry &link, int k)
    {
        const auto [i, j] = antenna_index(k, link.rx);
        return {-i * link.rx.spacing_h, -j * link.rx.spacing_v, link.distance};
    }

    double pair_distance(const LinkGeometry &link, int m, int k)
    {
        const auto a = antenna_index(m, link.tx);
        const auto b = antenna_index(k, link.rx);
        const double dx = a.i * link.tx.spacing_h - b.i * link.rx.spacing_h;
        const double dy = a.j * link.tx.spacing_v - b.j * link.rx.spacing_v;
        return std::sqrt(link.distance * link.distance + dx * dx + dy * dy);
    }

    double array_diagonal(const UraSpec &array)
    {
        const double lh = (array.m_h - 1) * array.spacing_h;
        const double lv = (array.m_v - 1) * array.spacing_v;
        return std::hypot(lh, lv);
    }

    ApertureLengths aperture_lengths(const UraSpec &array)
    {
        // A single row/column has no spacing, only the element itself
        const double lh = array.m_h > 1 ? array.spacing_h * (array.m_h - 1) : 0.0;
        const double lv = array.m_v > 1 ? array.spacing_v * (array.m_v - 1) : 0.0;
        return {lh + array.element_width, lv + array.element_width};
    }

    Spacing symmetric_optimal_spacing(double wavelength, double distance, int m_h, int m_v)
    {
        if (!(wavelength > 0.0) || !(distance > 0.0))
            throw DomainError("wavelength and distance must be > 0");
        if (m_h < 1 || m_v < 1)
            throw DomainError("array counts must be >= 1");
        const double ld = wavelength * distance;
        return {std::sqrt(ld / m_h), std::sqrt(ld / m_v)};
    }

    SplitSpacing split_optimal_spacing(double wavelength, double distance, int m_h, int m_v,
                                       const SpacingSplit &split)
    {
        split.validate();
        if (!(wavelength > 0.0) || !(distance > 0.0))
            throw DomainError("wavelength and distance must be > 0");
        if (m_h < 1 || m_v < 1)
            throw DomainError("array counts must be >= 1");
        const double base_h = wavelength * distance / m_h;
        const double base_v = wavelength * distance / m_v;
        return {std::pow(base_h, split.alpha), std::pow(base_h, 1.0 - split.alpha),
                std::pow(base_v, split.gamma_split), std::pow(base_v, 1.0 - split.gamma_split)};
    }

    LinkGeometry optimal_link(double wavelength, double distance, int m_h, int m_v,
                              double element_width, const SpacingSplit &split)
    {
        const auto s = split_optimal_spacing(wavelength, distance, m_h, m_v, split);
        LinkGeometry link;
        link.tx = {m_h, m_v, s.h_t, s.v_t, element_width};
        link.rx = {m_h, m_v, s.h_r, s.v_r, element_width};
        link.distance = distance;
        link.wavelength = wavelength;
        link.validate();
        return link;
    }

    LinkGeometry uniform_link(double wavelength, double distance, int m_h, int m_v, double delta,
                              double element_width)
    {
        LinkGeometry link;
        link.tx = {m_h, m_v, delta, delta, element_width};
        link.rx = link.tx;
        link.distance = distance;
        link.wavelength = wavelength;
        link.validate();
        return link;
    }

    double fraunhofer_array_distance(double distance, int m_h, int m_v)
    {
        return 2.0 * distance * (m_h + m_v);
    }

    double first_null_beamwidth(double wavelength, int m_h, double spacing_r)
    {
        if (m_h < 1 || !(spacing_r > 0.0))
            throw DomainError("first_null_beamwidth needs m_h >= 1 and spacing > 0");
        const double ratio = wavelength / (m_h * spacing_r);
        if (!(ratio <= 1.0) || ratio < 0.0)
            throw DomainError("arcsin argument lambda/(m_h h_r) = " + std::to_string(ratio) +
                              " exceeds 1");
        return 2.0 * std::asin(ratio);
    }

    double beam_footprint(double distance, double wavelength, int m_h)
    {
        if (m_h < 1)
            throw DomainError("m_h must be >= 1");
        return 2.0 * std::sqrt(wavelength * distance / m_h);
    }
}
