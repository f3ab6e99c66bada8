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

#include "losmimo/eigencap.hpp"
#include "losmimo/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace losmimo
{
    namespace
    {
        constexpr double kClampRelative = 1e-10;
        constexpr int kMaxBisection = 200;

        double log2_1p(double x) { return std::log1p(x) / std::log(2.0); }
    }

    double EigenSpectrum::sum() const
    {
        return std::accumulate(values.begin(), values.end(), 0.0);
    }

    EigenSpectrum EigenSpectrum::from_raw(std::vector<double> raw)
    {
        std::sort(raw.begin(), raw.end(), std::greater<>());
        const double top = raw.empty() ? 0.0 : std::max(raw.front(), 0.0);
        for (double &v : raw)
        {
            if (!std::isfinite(v))
                throw NumericError("non-finite eigenvalue", 0);
            if (v < 0.0)
            {
                if (v < -kClampRelative * top)
                    throw NumericError("Gram eigenvalue " + std::to_string(v) +
                                           " is negative beyond rounding", 0);
                v = 0.0;
            }
        }
        return {std::move(raw)};
    }

    EigenSpectrum gram_eigenvalues(const Eigen::MatrixXcd &h)
    {
        if (!h.allFinite())
            throw DomainError("channel matrix has non-finite entries");
        Eigen::MatrixXcd g(h.cols(), h.cols());
        g.noalias() = h.adjoint() * h;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw NumericError("Hermitian eigensolver did not converge for a " +
                                   std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " Gram matrix",
                               static_cast<int>(30 * g.rows()));
        const Eigen::VectorXd &ev = solver.eigenvalues();
        return EigenSpectrum::from_raw(std::vector<double>(ev.data(), ev.data() + ev.size()));
    }

    EigenSpectrum gram_eigenvalues(const ChannelMatrix &channel)
    {
        return gram_eigenvalues(channel.entries);
    }

    EigenSpectrum kronecker_spectrum(const EigenSpectrum &single, const XpdModel &xpd)
    {
        std::vector<double> out;
        out.reserve(2 * single.size());
        for (double mu : {xpd.mu1(), xpd.mu2()})
            for (double v : single.values)
                out.push_back(mu * v);
        return EigenSpectrum::from_raw(std::move(out));
    }

    PowerAllocation waterfill(const EigenSpectrum &spectrum, double total_power, double sigma2)
    {
        if (!(total_power > 0.0))
            throw DomainError("total power must be > 0, got " + std::to_string(total_power));
        if (!(sigma2 > 0.0))
            throw DomainError("noise variance must be > 0, got " + std::to_string(sigma2));

        const auto &ev = spectrum.values;
        double lambda_max = 0.0;
        double lambda_min = std::numeric_limits<double>::infinity();
        for (double v : ev)
            if (v > 0.0)
            {
                lambda_max = std::max(lambda_max, v);
                lambda_min = std::min(lambda_min, v);
            }
        if (!(lambda_max > 0.0))
            throw DomainError("water-filling needs at least one positive eigenvalue");

        // Bisection on t = nu - sigma2 / lambda_max; dimension n fills above sigma2 (1/lambda_n - 1/lambda_max)
        std::vector<double> offset(ev.size(), std::numeric_limits<double>::infinity());
        for (std::size_t n = 0; n < ev.size(); ++n)
            if (ev[n] > 0.0)
                offset[n] = sigma2 * (lambda_max - ev[n]) / (lambda_max * ev[n]);

        auto poured = [&](double t)
        {
            double s = 0.0;
            for (double o : offset)
                s += std::max(0.0, t - o);
            return s;
        };

        double lo = 0.0;
        double hi = sigma2 * (lambda_max - lambda_min) / (lambda_max * lambda_min) + total_power;
        double t = 0.5 * (lo + hi);
        int it = 0;
        for (; it < kMaxBisection; ++it)
        {
            t = 0.5 * (lo + hi);
            const double excess = poured(t) - total_power;
            if (std::abs(excess) <= 1e-12 * total_power)
                break;
            (excess > 0.0 ? hi : lo) = t;
        }

        // The bracket identifies the active set; the level for that set follows in closed form.
        double offset_sum = 0.0;
        int active = 0;
        for (double o : offset)
            if (o < t)
            {
                offset_sum += o;
                ++active;
            }
        if (active > 0)
        {
            const double refined = (total_power + offset_sum) / active;
            bool consistent = true;
            for (double o : offset)
                if (std::isfinite(o) && (o < t) != (o < refined) && std::abs(o - refined) > 1e-12 * refined)
                    consistent = false;
            if (consistent)
                t = refined;
        }

        PowerAllocation alloc;
        alloc.total = total_power;
        alloc.water_level = sigma2 / lambda_max + t;
        alloc.powers.resize(ev.size(), 0.0);
        double s = 0.0;
        for (std::size_t n = 0; n < ev.size(); ++n)
        {
            alloc.powers[n] = std::max(0.0, t - offset[n]);
            s += alloc.powers[n];
        }
        if (std::abs(s - total_power) > 1e-10 * total_power)
            throw NumericError("water level bisection left a power mismatch of " +
                                   std::to_string(s - total_power),
                               it);
        return alloc;
    }

    double two_level_threshold(double mu1, double mu2, double beta, double sigma2)
    {
        if (mu2 <= 0.0)
            return std::numeric_limits<double>::infinity();
        return sigma2 / (mu2 * beta) - sigma2 / (mu1 * beta);
    }

    PowerAllocation two_level_waterfill(double mu1, double mu2, double beta, int antennas,
                                        double total_power, double sigma2)
    {
        if (!(mu1 > 0.0))
            throw DomainError("mu1 must be > 0");
        if (!(mu2 >= 0.0) || mu2 > mu1)
            throw DomainError("two-level water-filling needs mu1 >= mu2 >= 0");
        if (antennas < 1 || !(beta > 0.0) || !(total_power > 0.0) || !(sigma2 > 0.0))
            throw DomainError("two-level water-filling needs M >= 1 and positive beta, P, sigma2");

        const double m = antennas;
        double q1 = total_power / m;
        double q2 = 0.0;
        if (total_power > two_level_threshold(mu1, mu2, beta, sigma2))
        {
            const double gap = sigma2 / (2.0 * mu2 * beta * m) - sigma2 / (2.0 * mu1 * beta * m);
            q1 = total_power / (2.0 * m) + gap;
            q2 = total_power / (2.0 * m) - gap;
        }
        PowerAllocation alloc;
        alloc.total = total_power;
        alloc.water_level = q1 + sigma2 / (mu1 * beta * m);
        alloc.powers.assign(2 * antennas, q2);
        std::fill_n(alloc.powers.begin(), antennas, q1);
        return alloc;
    }

    CapacityResult capacity(const EigenSpectrum &spectrum, const PowerAllocation &allocation, double sigma2)
    {
        if (allocation.powers.size() != spectrum.size())
            throw DomainError("allocation has " + std::to_string(allocation.powers.size()) +
                              " entries for a spectrum of " + std::to_string(spectrum.size()));
        if (!(sigma2 > 0.0))
            throw DomainError("noise variance must be > 0");
        CapacityResult r;
        r.allocation = allocation;
        r.noise_variance = sigma2;
        r.per_dimension_rates.resize(spectrum.size());
        for (std::size_t n = 0; n < spectrum.size(); ++n)
        {
            r.per_dimension_rates[n] = log2_1p(allocation.powers[n] * spectrum.values[n] / sigma2);
            r.bits_per_use += r.per_dimension_rates[n];
        }
        return r;
    }

    CapacityResult waterfilled_capacity(const ChannelMatrix &channel, double total_power, double sigma2)
    {
        const auto spectrum = gram_eigenvalues(channel);
        return capacity(spectrum, waterfill(spectrum, total_power, sigma2), sigma2);
    }

    double equal_power_capacity(const EigenSpectrum &spectrum, double total_power, double sigma2)
    {
        if (spectrum.size() == 0)
            return 0.0;
        const double q = total_power / static_cast<double>(spectrum.size());
        double c = 0.0;
        for (double v : spectrum.values)
            c += log2_1p(q * v / sigma2);
        return c;
    }

    double optimal_capacity_closed_form(double mu1, double mu2, double beta, int antennas,
                                        double total_power, double sigma2)
    {
        if (!(mu2 > 0.0))
            throw DomainError("closed-form capacity is undefined for mu2 = 0; use the water-filling path");
        if (!(mu1 >= mu2))
            throw DomainError("closed-form capacity needs mu1 >= mu2");
        if (!(total_power > two_level_threshold(mu1, mu2, beta, sigma2)))
            throw DomainError("closed-form capacity needs P above the two-level threshold");
        const double snr = total_power * beta / (2.0 * sigma2);
        const double m = antennas;
        return m * log2_1p(snr * mu1 + (mu1 - mu2) / (2.0 * mu2)) +
               m * log2_1p(snr * mu2 + (mu2 - mu1) / (2.0 * mu1));
    }

    double jensen_equal_power_bound(std::span<const double> single_spectrum, double mu1, double mu2,
                                    double total_power, double sigma2)
    {
        const double m = static_cast<double>(single_spectrum.size());
        if (m == 0.0)
            return 0.0;
        const double mean = std::accumulate(single_spectrum.begin(), single_spectrum.end(), 0.0) / m;
        double c = 0.0;
        for (double mu : {mu1, mu2})
            c += m * log2_1p(total_power * mu / (2.0 * m * sigma2) * mean);
        return c;
    }

    CapacityResult with_bandwidth(CapacityResult result, double bandwidth, double noise_density)
    {
        if (!(bandwidth > 0.0))
            throw DomainError("bandwidth must be > 0");
        result.rate = BandwidthInfo{bandwidth, noise_density, capacity_bps(result.bits_per_use, bandwidth)};
        return result;
    }

    double capacity_bps(double bits_per_use, double bandwidth)
    {
        if (!(bandwidth > 0.0))
            throw DomainError("bandwidth must be > 0");
        return bandwidth * bits_per_use;
    }

    double usa_capacity_bps(double antennas, double total_power_over_n0, double beta, double bandwidth)
    {
        if (!(bandwidth > 0.0))
            throw DomainError("bandwidth must be > 0");
        return 2.0 * bandwidth * antennas * log2_1p(total_power_over_n0 * beta / (2.0 * bandwidth));
    }
}
