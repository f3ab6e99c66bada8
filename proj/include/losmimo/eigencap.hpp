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

#ifndef LOSMIMO_EIGENCAP_HPP
#define LOSMIMO_EIGENCAP_HPP

#include "losmimo/channel.hpp"

#include <optional>
#include <span>
#include <vector>

namespace losmimo
{
    // Nonnegative eigenvalues sorted descending
    struct EigenSpectrum
    {
        std::vector<double> values;

        std::size_t size() const { return values.size(); }
        double sum() const;

        // Sorts descending and clamps entries >= -1e-10 max to zero. Larger negatives throw NumericError.
        static EigenSpectrum from_raw(std::vector<double> raw);
    };

    struct PowerAllocation
    {
        std::vector<double> powers; // [W], same order as the spectrum
        double total = 0.0;         // [W]
        double water_level = 0.0;   // nu, 0 when not produced by water-filling
    };

    struct BandwidthInfo
    {
        double bandwidth = 0.0;       // B in [Hz]
        double noise_density = 0.0;   // N0 in [W/Hz]
        double bits_per_second = 0.0; // B * bits_per_use
    };

    struct CapacityResult
    {
        double bits_per_use = 0.0;
        std::vector<double> per_dimension_rates;
        PowerAllocation allocation;
        double noise_variance = 0.0; // sigma^2 in [W]
        std::optional<BandwidthInfo> rate;
    };

    // Eigenvalues of H^H H. Throws NumericError if the Hermitian solver fails.
    EigenSpectrum gram_eigenvalues(const ChannelMatrix &channel);
    EigenSpectrum gram_eigenvalues(const Eigen::MatrixXcd &h);

    // Spectrum of (K^H K) (x) G from the spectrum of the single-polarized Gram G
    EigenSpectrum kronecker_spectrum(const EigenSpectrum &single, const XpdModel &xpd);

    // q_n = max(0, nu - sigma2 / lambda_n) with sum q_n = total_power
    PowerAllocation waterfill(const EigenSpectrum &spectrum, double total_power, double sigma2);

    // Closed-form allocation for the spectrum {mu1 beta M (x M), mu2 beta M (x M)}.
    // Returns 2M powers: the M strong dimensions first.
    PowerAllocation two_level_waterfill(double mu1, double mu2, double beta, int antennas,
                                        double total_power, double sigma2);

    // P at and below which only the M strongest dimensions get power (+inf when mu2 = 0)
    double two_level_threshold(double mu1, double mu2, double beta, double sigma2);

    // sum log2(1 + q_n lambda_n / sigma2)
    CapacityResult capacity(const EigenSpectrum &spectrum, const PowerAllocation &allocation,
                            double sigma2);

    // Water-filled capacity of a channel matrix
    CapacityResult waterfilled_capacity(const ChannelMatrix &channel, double total_power, double sigma2);

    // Equal power P/N on all N dimensions of the spectrum
    double equal_power_capacity(const EigenSpectrum &spectrum, double total_power, double sigma2);

    // High-SNR closed form for the two-level spectrum; requires P above the threshold and mu2 > 0
    double optimal_capacity_closed_form(double mu1, double mu2, double beta, int antennas,
                                        double total_power, double sigma2);

    // Jensen bound on the equal-power dual-polarized capacity for single-pol Gram eigenvalues lambda_m:
    // sum_i M log2(1 + P mu_i / (2 M sigma2) * mean(lambda_m))
    double jensen_equal_power_bound(std::span<const double> single_spectrum, double mu1, double mu2,
                                    double total_power, double sigma2);

    // Attaches B, N0 and bits/s to a result computed with sigma2 = B N0
    CapacityResult with_bandwidth(CapacityResult result, double bandwidth, double noise_density);

    // bits/use * B
    double capacity_bps(double bits_per_use, double bandwidth);

    // 2 B M log2(1 + P beta / (2 B N0)): optimal spacing, perfect XPD
    double usa_capacity_bps(double antennas, double total_power_over_n0, double beta, double bandwidth);
}

#endif
