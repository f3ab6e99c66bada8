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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if any fails.

#include "losmimo/aperture_gain.hpp"
#include "losmimo/channel.hpp"
#include "losmimo/eigencap.hpp"
#include "losmimo/errors.hpp"
#include "losmimo/geometry.hpp"
#include "losmimo/optimizer.hpp"
#include "losmimo/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace losmimo;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::ostringstream detail;

        void check(bool ok, const std::string &what)
        {
            if (!ok)
            {
                pass = false;
                detail << " [failed: " << what << "]";
            }
        }
    };

    double rel(double a, double b)
    {
        return std::abs(a - b) / std::abs(b);
    }

    double waterfilled(const EigenSpectrum &s, double p, double sigma2)
    {
        return capacity(s, waterfill(s, p, sigma2), sigma2).bits_per_use;
    }

    // Pbeta/sigma^2 = 25 dB with sigma^2 = 1
    double power_for(const LinkGeometry &link)
    {
        return std::pow(10.0, 2.5) / channel_gain_far(link, IsotropicGain{});
    }

    void optimal_spacing_peak(Outcome &o)
    {
        const auto t0 = std::chrono::steady_clock::now();
        const double lambda = 0.01, d = 100.0, w = lambda / 2.0;
        const auto grid = linear_grid(0.05, 0.60, 200);
        const double p = power_for(uniform_link(lambda, d, 8, 8, 0.3, w));
        const auto xpd = XpdModel::from_kappa(0.0);
        double best = -1.0, best_delta = 0.0;
        for (double delta : grid)
        {
            const auto link = uniform_link(lambda, d, 8, 8, delta, w);
            const double c = waterfilled(kronecker_spectrum(gram_eigenvalues(exact_single_pol(link)), xpd), p, 1.0);
            if (c > best)
            {
                best = c;
                best_delta = delta;
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const double expect = 128.0 * std::log2(1.0 + std::pow(10.0, 2.5) / 2.0);
        o.detail << "peak at delta=" << best_delta << " m (" << 100 * rel(best_delta, 0.35355) << "% from 0.35355), C="
                 << best << " bits/use (" << 100 * rel(best, expect) << "% from " << expect << "), " << secs << " s";
        o.check(rel(best_delta, 0.35355) < 0.02, "peak location within 2%");
        o.check(rel(best, 936.2) < 0.01, "peak value within 1%");
        o.check(secs < 60.0, "runtime < 60 s");
    }

    void fresnel_exactness(Outcome &o)
    {
        const auto link = optimal_link(0.01, 100.0, 8, 8, 0.005);
        const double bm = channel_gain_far(link, IsotropicGain{}) * 64;
        const auto h = fresnel_single_pol(link);
        const Eigen::MatrixXcd g = gram(h);
        double off = 0.0;
        for (int r = 0; r < 64; ++r)
            for (int c = 0; c < 64; ++c)
                if (r != c)
                    off = std::max(off, std::abs(g(r, c)));
        o.detail << "max |offdiag|/(beta M)=" << off / bm;
        o.check(off < 1e-9 * bm, "off-diagonal < 1e-9 beta M");

        double worst = 0.0;
        for (double kappa : {0.0, 0.1, 0.5})
        {
            const auto x = XpdModel::from_kappa(kappa);
            const auto s = gram_eigenvalues(dual_pol(h, x));
            for (int i = 0; i < 128; ++i)
            {
                const double expect = (i < 64 ? x.mu1() : x.mu2()) * bm;
                // relative to the expected value, or to beta M when it vanishes
                worst = std::max(worst, std::abs(s.values[i] - expect) / (expect > 0.0 ? expect : bm));
            }
        }
        o.detail << ", worst eigenvalue rel. error=" << worst;
        o.check(worst < 1e-9, "dual Gram spectrum within 1e-9");
    }

    void kappa_sweep_shape(Outcome &o)
    {
        const auto link = optimal_link(0.01, 100.0, 16, 8, 0.005);
        const double beta = channel_gain_far(link, IsotropicGain{});
        const double p = power_for(link);
        const auto single = gram_eigenvalues(fresnel_single_pol(link));
        const double c_single = waterfilled(single, p, 1.0);
        std::vector<double> c(21);
        for (int i = 0; i <= 20; ++i)
            c[i] = waterfilled(kronecker_spectrum(single, XpdModel::from_kappa(i / 20.0)), p, 1.0);

        double asym = 0.0;
        for (int i = 0; i <= 10; ++i)
            asym = std::max(asym, rel(c[i], c[20 - i]));
        const auto argmin = std::min_element(c.begin(), c.end()) - c.begin();
        const bool above = std::all_of(c.begin(), c.end(), [&](double v)
                                       { return v >= c_single; });
        const double expect0 = 2.0 * 128 * std::log2(1.0 + p * beta / 2.0);
        o.detail << "max asymmetry=" << asym << ", argmin kappa=" << argmin / 20.0 << ", C(0)=" << c[0]
                 << " vs " << expect0 << " (rel " << rel(c[0], expect0) << "), single=" << c_single;
        o.check(asym < 1e-9, "symmetry about 0.5");
        o.check(argmin == 10, "minimum at kappa = 0.5");
        o.check(above, "dual >= single");
        o.check(rel(c[0], expect0) < 1e-9, "kappa = 0 closed form");
    }

    void waterfilling_oracle(Outcome &o)
    {
        std::mt19937_64 rng(20240611);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::uniform_int_distribution<int> dim(1, 64);
        double kkt = 0.0, two_level_err = 0.0, closed_err = 0.0;
        int closed_cases = 0;

        auto check_kkt = [&](const EigenSpectrum &s, const PowerAllocation &a, double p, double sigma2)
        {
            const double nu = a.water_level;
            double e = std::abs(std::accumulate(a.powers.begin(), a.powers.end(), 0.0) - p) / p;
            for (std::size_t n = 0; n < s.size(); ++n)
            {
                const double floor = s.values[n] > 0.0 ? sigma2 / s.values[n] : INFINITY;
                if (a.powers[n] > 0.0)
                    e = std::max(e, std::abs(a.powers[n] - (nu - floor)) / nu);
                else
                    e = std::max(e, std::max(0.0, nu - floor) / nu);
                if (a.powers[n] < 0.0)
                    e = INFINITY;
            }
            kkt = std::max(kkt, e);
        };

        for (int t = 0; t < 1000; ++t)
        {
            const int m = dim(rng);
            const double sigma2 = std::pow(10.0, -2.0 + 4.0 * u(rng));
            const double p = std::pow(10.0, -3.0 + 8.0 * u(rng));

            // two-level instance
            const auto x = XpdModel::from_kappa(u(rng));
            const double beta = std::pow(10.0, -4.0 + 4.0 * u(rng));
            std::vector<double> v(m, x.mu1() * beta * m);
            v.insert(v.end(), m, x.mu2() * beta * m);
            const auto s2 = EigenSpectrum::from_raw(v);
            const auto bis = waterfill(s2, p, sigma2);
            check_kkt(s2, bis, p, sigma2);
            const auto cf = two_level_waterfill(x.mu1(), x.mu2(), beta, m, p, sigma2);
            for (std::size_t n = 0; n < cf.powers.size(); ++n)
                two_level_err = std::max(two_level_err, std::abs(cf.powers[n] - bis.powers[n]) / p);
            if (x.mu2() > 0.0 && p > two_level_threshold(x.mu1(), x.mu2(), beta, sigma2))
            {
                const double general = capacity(s2, bis, sigma2).bits_per_use;
                closed_err = std::max(closed_err, rel(optimal_capacity_closed_form(x.mu1(), x.mu2(), beta, m, p, sigma2), general));
                ++closed_cases;
            }

            // random spectrum
            std::vector<double> r(dim(rng));
            for (double &e : r)
                e = std::pow(10.0, -6.0 + 6.0 * u(rng));
            const auto sr = EigenSpectrum::from_raw(r);
            check_kkt(sr, waterfill(sr, p, sigma2), p, sigma2);
        }
        o.detail << "KKT residual=" << kkt << ", two-level vs bisection=" << two_level_err
                 << ", closed-form capacity rel. error=" << closed_err << " over " << closed_cases << " cases";
        o.check(kkt < 1e-9, "KKT at 1e-9");
        o.check(two_level_err < 1e-9, "two-level allocation at 1e-9");
        o.check(closed_err < 1e-9, "closed-form capacity at 1e-9");
        o.check(closed_cases > 100, "enough high-power cases");
    }

    void geometry_optimization(Outcome &o)
    {
        GeometryProblem p{64, 0.01, 100.0, 0.005, Objective::length};
        const auto len = minimize_length(p);
        const auto len_or = grid_oracle(p, 101, 101).best;
        p.objective = Objective::area;
        const auto area = minimize_area(p);
        const auto area_or = grid_oracle(p, 101, 101).best;

        const double h = 1e-5;
        auto f = [](double a, double g)
        { return total_aperture_length(64, 8, 0.01, 100.0, 0.005, a, g); };
        const double grad = std::max(std::abs(f(0.5 + h, 0.5) - f(0.5 - h, 0.5)), std::abs(f(0.5, 0.5 + h) - f(0.5, 0.5 - h))) / (2 * h);

        o.detail << "length " << len.m_h << "x" << len.m_v << " (a=" << len.alpha << ", g=" << len.gamma_split << ") = "
                 << len.objective_value << " m, oracle " << len_or.m_h << "x" << len_or.m_v << " (a=" << len_or.alpha
                 << ", g=" << len_or.gamma_split << ") = " << len_or.objective_value << "; area " << area.m_h << "x" << area.m_v
                 << " = " << area.objective_value << " m^2, oracle " << area_or.m_h << "x" << area_or.m_v << " = "
                 << area_or.objective_value << "; |grad| at (0.5,0.5)=" << grad;
        o.check(len.m_h == 8 && len.m_v == 8 && len.alpha == 0.5 && len.gamma_split == 0.5, "length minimizer 8x8 at 0.5/0.5");
        o.check(std::abs(len.objective_value - 7.0141) < 1e-4 && std::abs(len.objective_value - 7.0141421356) < 1e-6,
                "length value");
        o.check(area.m_h == 64 && area.m_v == 1, "area minimizer 64x1");
        o.check(std::abs(area.objective_value - 0.0788) < 1e-6, "area value");
        o.check(len_or.m_h == 8 && len_or.m_v == 8 && std::abs(len_or.alpha - 0.5) <= 0.01 &&
                    std::abs(len_or.gamma_split - 0.5) <= 0.01 && std::abs(len_or.objective_value - len.objective_value) < 1e-6,
                "length oracle agrees");
        o.check(area_or.m_h == 64 && area_or.m_v == 1 && std::abs(area_or.objective_value - 0.0788) < 1e-6, "area oracle agrees");
        o.check(grad < 1e-6, "stationarity");
    }

    void antenna_counts(Outcome &o)
    {
        FixedAreaSpec s;
        s.area = 5.0;
        s.distance = 80.0;
        s.element_width_factor = 0.5;
        const double m = max_antennas_exact(s, 0.01);
        const int mi = max_antennas_integer(s, 0.01);
        int brute = 1;
        while (square_array_side(s, 0.01, brute + 1) <= std::sqrt(s.area))
            ++brute;
        const double n = std::sqrt(m);
        const double side = std::sqrt(0.01 * 80.0 / n) * (n - 1.0) + 0.5 * 0.01;
        const double err = std::abs(max_antennas_exact(s, 1.5e-4) / max_antennas_approx(1.5e-4, 80.0, 5.0) - 1.0);
        o.detail << "M_real=" << m << ", M_int=" << mi << " (brute " << brute * brute << "), side round-trip error="
                 << std::abs(side - std::sqrt(5.0)) << ", |exact/approx-1| at 1.5e-4 m=" << err;
        o.check(std::abs(m - 65.587) < 1e-3, "M_real");
        o.check(mi == 64 && brute * brute == 64, "integer count");
        o.check(std::abs(side - std::sqrt(5.0)) < 1e-9, "side round-trip");
        o.check(err < 0.01, "approximation error < 1%");
    }

    std::vector<double> capacities(const std::vector<FrequencyPoint> &pts)
    {
        std::vector<double> c;
        for (const auto &p : pts)
            c.push_back(p.capacity_bps);
        return c;
    }

    void asymptotic_limit(Outcome &o)
    {
        FixedAreaSpec s;
        s.area = 5.0;
        s.distance = 80.0;
        s.element_width_factor = 0.5;
        s.power_density_ratio = std::pow(10.0, 20.4);
        const double limit = asymptotic_capacity_limit(s.area, s.distance, s.power_density_ratio);
        const std::vector<double> f3{3e12};
        s.bandwidth = ProportionalBandwidth{0.03};
        const double c_prop = capacity_vs_frequency(s, f3)[0].capacity_bps;
        s.bandwidth = FixedBandwidth{90e6};
        const double c_fixed = capacity_vs_frequency(s, f3)[0].capacity_bps;

        const auto grid = log_grid(1e12, 1e13, 41);
        s.gains = directive_both_gains();
        s.bandwidth = FixedBandwidth{90e6};
        const double both = growth_exponent(grid, capacities(capacity_vs_frequency(s, grid)));
        s.gains = directive_rx_gains();
        s.bandwidth = ProportionalBandwidth{0.03};
        const double rx_prop = growth_exponent(grid, capacities(capacity_vs_frequency(s, grid)));
        s.bandwidth = FixedBandwidth{90e6};
        const double rx_fixed = growth_exponent(grid, capacities(capacity_vs_frequency(s, grid)));

        o.detail << "limit=" << limit << " bits/s, C(3 THz)/limit=" << c_prop / limit << " (B=0.03f), "
                 << c_fixed / limit << " (B=90 MHz); slope directive-both (B=90 MHz)=" << both
                 << ", directive-Rx=" << rx_prop << " (B=0.03f), " << rx_fixed << " (B=90 MHz)";
        o.check(std::abs(limit - 1.4007e12) / 1.4007e12 < 1e-4, "limit value");
        o.check(rel(c_prop, limit) < 0.02 && rel(c_fixed, limit) < 0.02, "3 THz within 2% under both bandwidth models");
        o.check(std::abs(both - 2.0) <= 0.05, "directive-both slope 2.00 +- 0.05");
        o.check(std::abs(rx_prop - 1.0) <= 0.05, "directive-Rx slope 1.00 +- 0.05");
    }

    void alpha_invariance(Outcome &o)
    {
        const double lambda = 0.003, d = 50.0, w = lambda / 2.0;
        const double p = power_for(optimal_link(lambda, d, 8, 8, w));
        double ref = 0.0, spread = 0.0, tx_area = 0.0, h_t = 0.0;
        for (double a : {0.0, 0.01, 0.25, 0.5, 1.0})
        {
            const auto link = optimal_link(lambda, d, 8, 8, w, {a, a});
            const auto s = kronecker_spectrum(gram_eigenvalues(fresnel_single_pol(link)), XpdModel::from_kappa(0.0));
            const double c = waterfilled(s, p, 1.0);
            if (ref == 0.0)
                ref = c;
            spread = std::max(spread, rel(c, ref));
            if (a == 0.01)
            {
                const auto l = aperture_lengths(link.tx);
                tx_area = l.horizontal * l.vertical;
                h_t = link.tx.spacing_h;
            }
        }
        o.detail << "capacity spread=" << spread << ", tx area at alpha=0.01: " << tx_area << " m^2, h_t=" << h_t << " m";
        o.check(spread < 1e-9, "capacity identical across alpha");
        o.check(std::abs(tx_area - 45.3) < 0.05, "tx area ~ 45.3 m^2");
        o.check(std::abs(h_t - 0.9610) < 1e-4, "spacing ~ 0.9610 m");
    }

    void realistic_model(Outcome &o)
    {
        // Cauchy-Schwarz: bounded, and equality for a flat broadside field
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> pos(-2.0, 2.0), height(0.1, 100.0), side(0.001, 0.1);
        double gmax = 0.0, gmin = 1.0;
        for (int t = 0; t < 500; ++t)
        {
            const double g = normalized_gain_adaptive({pos(rng), pos(rng), side(rng)}, {pos(rng), pos(rng), height(rng), 1.0}, 0.003).gain;
            gmax = std::max(gmax, g);
            gmin = std::min(gmin, g);
        }
        const double flat = normalized_gain({0.0, 0.0, 0.01}, {0.0, 0.0, 1e5, 1.0}, 0.01).gain;
        o.detail << "gain range [" << gmin << ", " << gmax << "], flat-field gain-1=" << flat - 1.0;
        o.check(gmin > 0.0 && gmax <= 1.0 + 1e-9, "gain in (0,1]");
        o.check(std::abs(flat - 1.0) < 1e-9, "Cauchy-Schwarz equality");

        // Quadrature convergence on the pair tables of the acceptance frequencies
        RealisticSpec spec;
        spec.link.power_density_ratio = std::pow(10.0, 20.4);
        double conv = 0.0;
        for (double f : {30e9, 100e9})
        {
            const double lambda = wavelength_from_frequency(f);
            const int n = static_cast<int>(std::lround(std::sqrt(max_antennas_integer(spec.link, lambda))));
            const auto link = optimal_link(lambda, spec.link.distance, n, n, 0.5 * lambda);
            const double st = element_side(spec, true, lambda);
            const auto t16 = realistic_pair_gains(link, st, st, GainConvention::normalized, {16});
            const auto t32 = realistic_pair_gains(link, st, st, GainConvention::normalized, {32});
            conv = std::max(conv, ((t16.gains.g_r - t32.gains.g_r).array().abs() / t32.gains.g_r.array()).maxCoeff());
            conv = std::max(conv, ((t16.gains.g_t - t32.gains.g_t).array().abs() / t32.gains.g_t.array()).maxCoeff());
        }
        o.detail << ", order 16 vs 32 max rel. diff=" << conv;
        o.check(conv < 1e-6, "quadrature convergence");

        // Friis at 100x the Fraunhofer distance of the element
        const double lambda = 0.01, s = 0.05;
        const double d = 100.0 * 2.0 * (2.0 * s * s) / lambda;
        const auto link = uniform_link(lambda, d, 2, 2, 0.2);
        const auto t = realistic_pair_gains(link, s, s, GainConvention::aperture_scaled);
        const double g = 4.0 * kPi * s * s / (lambda * lambda);
        double friis = 0.0;
        for (int m = 1; m <= 4; ++m)
            for (int k = 1; k <= 4; ++k)
                friis = std::max(friis, rel(channel_gain(link, t.gains, m, k),
                                            g * g * std::pow(lambda / (4.0 * kPi * pair_distance(link, m, k)), 2)));
        o.detail << ", Friis rel. diff=" << friis;
        o.check(friis < 0.01, "Friis agreement < 1%");

        // Full pipeline against the ideal 1/lambda gain model
        double worst = 0.0;
        for (double f : {10e9, 30e9, 60e9, 100e9})
        {
            const auto pt = realistic_capacity(spec, f);
            if (pt.skipped)
            {
                worst = INFINITY;
                continue;
            }
            worst = std::max(worst, rel(pt.capacity_realistic_bps, pt.capacity_ideal_bps));
        }
        o.detail << ", realistic vs ideal capacity up to 100 GHz: max rel. diff=" << worst;
        o.check(worst < 0.10, "realistic within 10% of ideal");
    }
}

int main()
{
    const std::vector<std::pair<const char *, std::function<void(Outcome &)>>> criteria{
        {"optimal-spacing peak", optimal_spacing_peak},
        {"Fresnel exactness at the optimum", fresnel_exactness},
        {"kappa-sweep shape", kappa_sweep_shape},
        {"water-filling oracle equivalence", waterfilling_oracle},
        {"geometry optimization", geometry_optimization},
        {"antenna-count formulas", antenna_counts},
        {"asymptotic limit and growth exponents", asymptotic_limit},
        {"alpha-invariance", alpha_invariance},
        {"realistic antenna model", realistic_model},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Outcome o;
        o.detail.precision(8);
        try
        {
            criteria[i].second(o);
        }
        catch (const std::exception &e)
        {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        failed += !o.pass;
        std::printf("%s  %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
