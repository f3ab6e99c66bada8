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

#include "losmimo/aperture_gain.hpp"
#include "losmimo/eigencap.hpp"
#include "losmimo/errors.hpp"
#include "losmimo/parallel.hpp"

#include <cmath>
#include <map>
#include <string>
#include <utility>

namespace losmimo
{
    GaussLegendre gauss_legendre(int n)
    {
        if (n < 1)
            throw DomainError("Gauss-Legendre order must be >= 1");
        GaussLegendre rule;
        rule.nodes.resize(n);
        rule.weights.resize(n);
        const int half = (n + 1) / 2;
        for (int i = 0; i < half; ++i)
        {
            double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            int it = 0;
            for (; it < 100; ++it)
            {
                double p1 = 1.0, p2 = 0.0;
                for (int j = 1; j <= n; ++j)
                {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
                }
                dp = n * (z * p1 - p2) / (z * z - 1.0);
                const double dz = p1 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-15)
                    break;
            }
            if (it == 100)
                throw NumericError("Legendre root iteration failed for order " + std::to_string(n), it);
            // Recompute the derivative at the converged root for the weight
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j)
            {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            dp = n * (z * p1 - p2) / (z * z - 1.0);
            const double w = 2.0 / ((1.0 - z * z) * dp * dp);
            rule.nodes[i] = -z;
            rule.nodes[n - 1 - i] = z;
            rule.weights[i] = w;
            rule.weights[n - 1 - i] = w;
        }
        if (n % 2 == 1)
            rule.nodes[n / 2] = 0.0;
        return rule;
    }

    std::complex<double> incident_field(double x, double y, const SourcePoint &src, double wavelength)
    {
        if (!(src.z > 0.0))
            throw DomainError("source height must be > 0");
        const double dx = x - src.x;
        const double dy = y - src.y;
        const double r = dx * dx + dy * dy + src.z * src.z;
        const double magnitude = src.amplitude / std::sqrt(4.0 * kPi) *
                                 std::sqrt(src.z * (dx * dx + src.z * src.z)) / std::pow(r, 1.25);
        return std::polar(magnitude, -2.0 * kPi * std::sqrt(r) / wavelength);
    }

    namespace
    {
        GainResult gain_with_rule(const ApertureElement &el, const SourcePoint &src, double wavelength,
                                  const GaussLegendre &rule)
        {
            if (!(el.side > 0.0))
                throw DomainError("element side must be > 0");
            if (!(src.z > 0.0))
                throw DomainError("source height must be > 0");
            if (!(wavelength > 0.0))
                throw DomainError("wavelength must be > 0");

            const int n = static_cast<int>(rule.nodes.size());
            const double h = 0.5 * el.side;
            const double cx = el.x - src.x;
            const double cy = el.y - src.y;
            const double z2 = src.z * src.z;
            // Distances are taken relative to the element center; a common phase drops out of |int E|.
            const double ref = std::sqrt(cx * cx + cy * cy + z2);
            const double k = 2.0 * kPi / wavelength;

            std::vector<double> path(static_cast<std::size_t>(n) * n);
            std::complex<double> sum_field = 0.0;
            double sum_power = 0.0;
            for (int a = 0; a < n; ++a)
            {
                const double dx = cx + h * rule.nodes[a];
                for (int b = 0; b < n; ++b)
                {
                    const double dy = cy + h * rule.nodes[b];
                    const double r = dx * dx + dy * dy + z2;
                    const double dist = std::sqrt(r);
                    const double excess = (r - ref * ref) / (dist + ref);
                    path[a * n + b] = excess;
                    const double magnitude = std::sqrt(src.z * (dx * dx + z2)) / std::pow(r, 1.25);
                    const double w = rule.weights[a] * rule.weights[b];
                    sum_field += w * std::polar(magnitude, -k * excess);
                    sum_power += w * magnitude * magnitude;
                }
            }

            double step = 0.0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                {
                    if (a + 1 < n)
                        step = std::max(step, k * std::abs(path[(a + 1) * n + b] - path[a * n + b]));
                    if (b + 1 < n)
                        step = std::max(step, k * std::abs(path[a * n + b + 1] - path[a * n + b]));
                }

            // Amplitude E0 / sqrt(4 pi) and the Jacobian h^2 cancel except for one factor h^2 / A = 1/4
            GainResult res;
            res.gain = std::norm(sum_field) * (h * h) / (el.area() * sum_power);
            res.order = n;
            res.max_phase_step = step;
            res.accuracy_warning = step > 0.5 * kPi;
            return res;
        }

        const GaussLegendre &cached_rule(int order)
        {
            static const std::map<int, GaussLegendre> common = []
            {
                std::map<int, GaussLegendre> m;
                for (int o : {2, 4, 8, 16, 32, 64})
                    m.emplace(o, gauss_legendre(o));
                return m;
            }();
            if (auto it = common.find(order); it != common.end())
                return it->second;
            thread_local std::map<int, GaussLegendre> extra;
            auto [it, inserted] = extra.try_emplace(order);
            if (inserted)
                it->second = gauss_legendre(order);
            return it->second;
        }
    }

    GainResult normalized_gain(const ApertureElement &element, const SourcePoint &src, double wavelength,
                               const QuadratureRule &rule)
    {
        if (rule.order < 2)
            throw DomainError("quadrature order must be >= 2");
        return gain_with_rule(element, src, wavelength, cached_rule(rule.order));
    }

    GainResult normalized_gain_adaptive(const ApertureElement &element, const SourcePoint &src, double wavelength,
                                        const QuadratureRule &rule, int max_order)
    {
        GainResult res = normalized_gain(element, src, wavelength, rule);
        int order = rule.order;
        while (res.accuracy_warning && order * 2 <= max_order)
        {
            order *= 2;
            res = normalized_gain(element, src, wavelength, {order});
        }
        return res;
    }

    PairGainTables realistic_pair_gains(const LinkGeometry &link, double side_t, double side_r,
                                        GainConvention convention, const QuadratureRule &rule, int threads)
    {
        link.validate();
        auto check_fit = [](const UraSpec &a, double side, const char *which)
        {
            if (!(side > 0.0))
                throw DomainError(std::string(which) + " element side must be > 0");
            if ((a.m_h > 1 && side > a.spacing_h) || (a.m_v > 1 && side > a.spacing_v))
                throw DomainError(std::string(which) + " elements of side " + std::to_string(side) +
                                  " m overlap at the array spacing");
        };
        check_fit(link.tx, side_t, "tx");
        check_fit(link.rx, side_r, "rx");

        const int n = link.tx.count();
        const double lambda = link.wavelength;
        const double scale_t = convention == GainConvention::aperture_scaled ? 4.0 * kPi * side_t * side_t / (lambda * lambda) : 1.0;
        const double scale_r = convention == GainConvention::aperture_scaled ? 4.0 * kPi * side_r * side_r / (lambda * lambda) : 1.0;

        // With identical spacings at both ends a pair's gains depend only on the index offset
        const bool shift_invariant = link.tx.spacing_h == link.rx.spacing_h && link.tx.spacing_v == link.rx.spacing_v;

        struct PairGain
        {
            GainResult tx, rx;
        };
        auto compute = [&](int m, int k)
        {
            const Position pt = tx_position(link, m);
            const Position pr = rx_position(link, k);
            PairGain g;
            g.rx = normalized_gain_adaptive({pr.x, pr.y, side_r}, {pt.x, pt.y, link.distance, 1.0}, lambda, rule);
            g.tx = normalized_gain_adaptive({pt.x, pt.y, side_t}, {pr.x, pr.y, link.distance, 1.0}, lambda, rule);
            return g;
        };

        PairGainTables out;
        out.gains.g_t.resize(n, n);
        out.gains.g_r.resize(n, n);
        std::vector<PairGain> results;

        if (shift_invariant)
        {
            const int mh = link.tx.m_h, mv = link.tx.m_v;
            const int wh = 2 * mh - 1, wv = 2 * mv - 1;
            // Offset (di, dj) = index of m minus index of k; representative pair with k at the corner
            results.resize(static_cast<std::size_t>(wh) * wv);
            parallel_for(results.size(), threads, [&](std::size_t s)
                         {
                const int di = static_cast<int>(s / wv) - (mh - 1);
                const int dj = static_cast<int>(s % wv) - (mv - 1);
                const int im = std::max(di, 0), ik = im - di;
                const int jm = std::max(dj, 0), jk = jm - dj;
                results[s] = compute(jm * mh + im + 1, jk * mh + ik + 1); });
            for (int m = 1; m <= n; ++m)
                for (int k = 1; k <= n; ++k)
                {
                    const auto a = antenna_index(m, link.tx), b = antenna_index(k, link.rx);
                    const std::size_t s = static_cast<std::size_t>(a.i - b.i + mh - 1) * wv + (a.j - b.j + mv - 1);
                    out.gains.g_t(m - 1, k - 1) = scale_t * results[s].tx.gain;
                    out.gains.g_r(m - 1, k - 1) = scale_r * results[s].rx.gain;
                }
        }
        else
        {
            results.resize(static_cast<std::size_t>(n) * n);
            parallel_for(results.size(), threads, [&](std::size_t s)
                         { results[s] = compute(static_cast<int>(s / n) + 1, static_cast<int>(s % n) + 1); });
            for (int m = 1; m <= n; ++m)
                for (int k = 1; k <= n; ++k)
                {
                    const auto &r = results[static_cast<std::size_t>(m - 1) * n + (k - 1)];
                    out.gains.g_t(m - 1, k - 1) = scale_t * r.tx.gain;
                    out.gains.g_r(m - 1, k - 1) = scale_r * r.rx.gain;
                }
        }

        for (const auto &r : results)
        {
            out.max_order_used = std::max({out.max_order_used, r.tx.order, r.rx.order});
            out.accuracy_warning = out.accuracy_warning || r.tx.accuracy_warning || r.rx.accuracy_warning;
        }
        return out;
    }

    double element_side(const RealisticSpec &spec, bool directive, double wavelength)
    {
        const double area = directive ? spec.directive_area_coef * wavelength
                                      : wavelength * wavelength / (4.0 * kPi);
        return std::sqrt(area);
    }

    RealisticPoint realistic_capacity(const RealisticSpec &spec, double frequency, double c)
    {
        spec.link.validate();
        if (!(spec.directive_area_coef > 0.0))
            throw DomainError("directive element area coefficient must be > 0");

        RealisticPoint pt;
        pt.frequency = frequency;
        pt.wavelength = wavelength_from_frequency(frequency, c);
        const double lambda = pt.wavelength;
        pt.antennas = max_antennas_integer(spec.link, lambda);
        if (pt.antennas > spec.max_antennas)
        {
            pt.skipped = true;
            return pt;
        }
        const int per_side = static_cast<int>(std::lround(std::sqrt(pt.antennas)));
        const auto link = optimal_link(lambda, spec.link.distance, per_side, per_side,
                                       spec.link.element_width_factor * lambda);

        const auto tables = realistic_pair_gains(link, element_side(spec, spec.tx_directive, lambda),
                                                 element_side(spec, spec.rx_directive, lambda),
                                                 GainConvention::aperture_scaled, spec.rule, spec.threads);
        pt.quad_order = tables.max_order_used;
        pt.accuracy_warning = tables.accuracy_warning;

        const auto single = exact_single_pol(link, tables.gains);
        const auto spectrum = kronecker_spectrum(gram_eigenvalues(single), XpdModel::from_kappa(spec.kappa));

        // P / N0 is all that matters: take N0 = 1 W/Hz, so sigma^2 = B
        const double bandwidth = bandwidth_at(spec.link.bandwidth, frequency);
        const double power = spec.link.power_density_ratio;
        const auto cap = capacity(spectrum, waterfill(spectrum, power, bandwidth), bandwidth);
        pt.capacity_realistic_bps = capacity_bps(cap.bits_per_use, bandwidth);

        const int directive_sides = (spec.tx_directive ? 1 : 0) + (spec.rx_directive ? 1 : 0);
        const GainModel ideal = directive_sides == 0 ? GainModel{IsotropicGain{}}
                                                     : GainModel{WavelengthPowerGain{1.0, static_cast<double>(directive_sides)}};
        const double beta = channel_gain_far(link, ideal);
        pt.capacity_ideal_bps = usa_capacity_bps(pt.antennas, power, beta, bandwidth);
        return pt;
    }
}
