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

#include "losmimo/scaling.hpp"
#include "losmimo/eigencap.hpp"
#include "losmimo/errors.hpp"
#include "losmimo/parallel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace losmimo
{
    double bandwidth_at(const BandwidthModel &model, double frequency_hz)
    {
        if (const auto *p = std::get_if<ProportionalBandwidth>(&model))
            return p->coef * frequency_hz;
        return std::get<FixedBandwidth>(model).hz;
    }

    void FixedAreaSpec::validate() const
    {
        if (!(area > 0.0))
            throw DomainError("array area must be > 0");
        if (!(distance > 0.0))
            throw DomainError("distance must be > 0");
        if (!(element_width_factor >= 0.0))
            throw DomainError("element width factor must be >= 0");
        if (!(power_density_ratio >= 0.0))
            throw DomainError("P/N0 must be >= 0");
        if (const auto *p = std::get_if<ProportionalBandwidth>(&bandwidth); p && !(p->coef > 0.0))
            throw DomainError("bandwidth coefficient must be > 0");
        if (const auto *f = std::get_if<FixedBandwidth>(&bandwidth); f && !(f->hz > 0.0))
            throw DomainError("fixed bandwidth must be > 0");
        if (std::holds_alternative<PerPairGain>(gains))
            throw DomainError("frequency sweeps need a wavelength-parametric gain model");
        validate_gain_model(gains);
    }

    GainModel isotropic_gains() { return IsotropicGain{}; }
    GainModel directive_rx_gains() { return WavelengthPowerGain{1.0, 1.0}; }
    GainModel directive_both_gains() { return WavelengthPowerGain{1.0, 2.0}; }

    double antenna_count_k0(const FixedAreaSpec &spec, double wavelength)
    {
        const double gap = spec.element_width_factor * wavelength - std::sqrt(spec.area);
        return 2.0 + gap * gap / (wavelength * spec.distance);
    }

    double max_antennas_exact(const FixedAreaSpec &spec, double wavelength)
    {
        if (!(wavelength > 0.0))
            throw DomainError("wavelength must be > 0");
        if (!(spec.element_width_factor * wavelength < std::sqrt(spec.area)))
            throw DomainError("element width w*lambda = " + std::to_string(spec.element_width_factor * wavelength) +
                              " m does not fit into the aperture side sqrt(A) = " +
                              std::to_string(std::sqrt(spec.area)) + " m");
        const double k0 = antenna_count_k0(spec, wavelength);
        const double root = 0.5 * (k0 + std::sqrt(k0 * k0 - 4.0));
        return root * root;
    }

    double square_array_side(const FixedAreaSpec &spec, double wavelength, int per_side)
    {
        const double n = per_side;
        return std::sqrt(wavelength * spec.distance / n) * (n - 1.0) + spec.element_width_factor * wavelength;
    }

    int max_antennas_integer(const FixedAreaSpec &spec, double wavelength)
    {
        const double side = std::sqrt(spec.area);
        const double m_real = max_antennas_exact(spec, wavelength);
        int n = std::max(1, static_cast<int>(std::floor(std::sqrt(m_real))));
        while (square_array_side(spec, wavelength, n + 1) <= side)
            ++n;
        while (n > 1 && square_array_side(spec, wavelength, n) > side)
            --n;
        return n * n;
    }

    double max_antennas_approx(double wavelength, double distance, double area)
    {
        if (!(wavelength > 0.0) || !(distance > 0.0) || !(area > 0.0))
            throw DomainError("wavelength, distance and area must be > 0");
        const double r = area / (wavelength * distance);
        return r * r;
    }

    std::vector<FrequencyPoint> capacity_vs_frequency(const FixedAreaSpec &spec, std::span<const double> f_grid,
                                                      double c, int threads)
    {
        spec.validate();
        for (std::size_t i = 0; i < f_grid.size(); ++i)
        {
            if (!(f_grid[i] > 0.0))
                throw DomainError("frequency grid must be positive");
            if (i > 0 && !(f_grid[i] > f_grid[i - 1]))
                throw DomainError("frequency grid must be strictly ascending");
        }

        std::vector<FrequencyPoint> out(f_grid.size());
        parallel_for(f_grid.size(), threads, [&](std::size_t i)
                     {
            FrequencyPoint &pt = out[i];
            pt.frequency = f_grid[i];
            pt.wavelength = c / pt.frequency;
            try
            {
                pt.m_real = max_antennas_exact(spec, pt.wavelength);
                pt.m_int = max_antennas_integer(spec, pt.wavelength);
            }
            catch (const DomainError &e)
            {
                throw DomainError("at f = " + std::to_string(pt.frequency) + " Hz: " + e.what());
            }
            switch (spec.count)
            {
            case CountModel::exact: pt.m_used = pt.m_real; break;
            case CountModel::approx: pt.m_used = max_antennas_approx(pt.wavelength, spec.distance, spec.area); break;
            case CountModel::integer: pt.m_used = pt.m_int; break;
            }
            pt.bandwidth = bandwidth_at(spec.bandwidth, pt.frequency);
            const double path = pt.wavelength / (4.0 * kPi * spec.distance);
            pt.beta = gain_product(spec.gains, pt.wavelength, 1, 1) * path * path;
            pt.capacity_bps = usa_capacity_bps(pt.m_used, spec.power_density_ratio, pt.beta, pt.bandwidth); });
        return out;
    }

    double asymptotic_capacity_limit(double area, double distance, double power_density_ratio)
    {
        const double r = area / (4.0 * kPi * distance * distance);
        return r * r * power_density_ratio * std::numbers::log2e;
    }

    double growth_exponent(std::span<const double> frequencies, std::span<const double> capacities,
                           std::optional<double> f_lo, std::optional<double> f_hi)
    {
        if (frequencies.size() != capacities.size())
            throw DomainError("growth_exponent needs equally long series");
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        int n = 0;
        for (std::size_t i = 0; i < frequencies.size(); ++i)
        {
            const double f = frequencies[i];
            if ((f_lo && f < *f_lo) || (f_hi && f > *f_hi))
                continue;
            if (!(f > 0.0) || !(capacities[i] > 0.0))
                throw DomainError("growth_exponent needs positive frequencies and capacities");
            const double x = std::log(f);
            const double y = std::log(capacities[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++n;
        }
        const double den = n * sxx - sx * sx;
        if (n < 2 || !(std::abs(den) > 1e-300))
            throw DomainError("growth_exponent window holds fewer than two distinct frequencies");
        return (n * sxy - sx * sy) / den;
    }

    std::vector<double> log_grid(double lo, double hi, int n)
    {
        if (!(lo > 0.0) || !(hi > lo) || n < 2)
            throw DomainError("log grid needs 0 < lo < hi and n >= 2");
        std::vector<double> g(n);
        const double a = std::log10(lo), b = std::log10(hi);
        for (int i = 0; i < n; ++i)
            g[i] = std::pow(10.0, a + (b - a) * i / (n - 1));
        g.front() = lo;
        g.back() = hi;
        return g;
    }

    std::vector<double> linear_grid(double lo, double hi, int n)
    {
        if (!(hi > lo) || n < 2)
            throw DomainError("linear grid needs lo < hi and n >= 2");
        std::vector<double> g(n);
        for (int i = 0; i < n; ++i)
            g[i] = lo + (hi - lo) * i / (n - 1);
        g.back() = hi;
        return g;
    }
}
