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

#ifndef LOSMIMO_SCALING_HPP
#define LOSMIMO_SCALING_HPP

#include "losmimo/channel.hpp"
#include "losmimo/constants.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace losmimo
{
    // B = coef * f
    struct ProportionalBandwidth
    {
        double coef = 0.03;
    };

    struct FixedBandwidth
    {
        double hz = 90e6;
    };

    using BandwidthModel = std::variant<ProportionalBandwidth, FixedBandwidth>;

    double bandwidth_at(const BandwidthModel &model, double frequency_hz);

    // Which antenna count enters the capacity of a frequency sweep
    enum class CountModel
    {
        exact,   // continuous closed form
        approx,  // (A / (lambda d))^2
        integer  // deployable square count
    };

    // Fixed-size square arrays at both ends of a link
    struct FixedAreaSpec
    {
        double area = 5.0;                  // A per array in [m^2]
        double distance = 80.0;             // d in [m]
        double element_width_factor = 0.5;  // w, with W = w lambda
        double power_density_ratio = 0.0;   // P / N0, linear [Hz]
        BandwidthModel bandwidth = ProportionalBandwidth{};
        GainModel gains = IsotropicGain{};
        CountModel count = CountModel::exact;

        void validate() const;
    };

    struct FrequencyPoint
    {
        double frequency = 0.0;    // f in [Hz]
        double wavelength = 0.0;   // [m]
        double m_real = 0.0;       // closed-form count
        int m_int = 0;             // deployable count, a perfect square
        double m_used = 0.0;       // count entering the capacity
        double bandwidth = 0.0;    // [Hz]
        double beta = 0.0;         // common channel gain
        double capacity_bps = 0.0; // 2 B M log2(1 + P beta / (2 B N0))
    };

    // Named gain models of the frequency study
    GainModel isotropic_gains();
    GainModel directive_rx_gains();   // G^t = 1, G^r = 1 / lambda
    GainModel directive_both_gains(); // G^t = G^r = 1 / lambda

    // Largest M with side length sqrt(lambda d / sqrt(M)) (sqrt(M) - 1) + w lambda = sqrt(A).
    // Throws DomainError when w lambda >= sqrt(A).
    double max_antennas_exact(const FixedAreaSpec &spec, double wavelength);

    // k0 = 2 + (w lambda - sqrt(A))^2 / (lambda d)
    double antenna_count_k0(const FixedAreaSpec &spec, double wavelength);

    // Side length of a square array of n x n antennas at the optimal spacing
    double square_array_side(const FixedAreaSpec &spec, double wavelength, int per_side);

    // n^2 for the largest n whose square array fits into the area
    int max_antennas_integer(const FixedAreaSpec &spec, double wavelength);

    // (A / (lambda d))^2
    double max_antennas_approx(double wavelength, double distance, double area);

    // One point per frequency, in grid order; grid must be positive and strictly ascending.
    // threads <= 1 runs serially.
    std::vector<FrequencyPoint> capacity_vs_frequency(const FixedAreaSpec &spec, std::span<const double> f_grid,
                                                      double c = kSpeedOfLight, int threads = 1);

    // (A / (4 pi d^2))^2 (P / N0) log2(e)
    double asymptotic_capacity_limit(double area, double distance, double power_density_ratio);

    // Least-squares slope of log C against log f, restricted to f in [f_lo, f_hi] when given
    double growth_exponent(std::span<const double> frequencies, std::span<const double> capacities,
                           std::optional<double> f_lo = std::nullopt, std::optional<double> f_hi = std::nullopt);

    // n points spaced logarithmically from lo to hi inclusive
    std::vector<double> log_grid(double lo, double hi, int n);
    std::vector<double> linear_grid(double lo, double hi, int n);
}

#endif
