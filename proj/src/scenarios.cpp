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

#include "losmimo/cli/scenarios.hpp"
#include "losmimo/aperture_gain.hpp"
#include "losmimo/channel.hpp"
#include "losmimo/constants.hpp"
#include "losmimo/eigencap.hpp"
#include "losmimo/errors.hpp"
#include "losmimo/geometry.hpp"
#include "losmimo/optimizer.hpp"
#include "losmimo/parallel.hpp"
#include "losmimo/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#ifndef LOSMIMO_VERSION
#define LOSMIMO_VERSION "0.0.0"
#endif

namespace losmimo::cli
{
    namespace
    {
        // Reads config values and remembers every resolved value, defaults included
        class Params
        {
        public:
            Params(const Config &cfg, const RunOptions &opt) : cfg_(cfg), opt_(opt) {}

            double real(const std::string &key)
            {
                const double v = cfg_.get_double(key);
                resolved_[key] = format_real(v);
                return v;
            }

            double real(const std::string &key, double fallback)
            {
                const double v = cfg_.get_double(key, fallback);
                resolved_[key] = format_real(v);
                return v;
            }

            int integer(const std::string &key)
            {
                const int v = cfg_.get_int(key);
                resolved_[key] = std::to_string(v);
                return v;
            }

            int integer(const std::string &key, int fallback)
            {
                const int v = cfg_.get_int(key, fallback);
                resolved_[key] = std::to_string(v);
                return v;
            }

            bool flag(const std::string &key, bool fallback)
            {
                const bool v = cfg_.get_bool(key, fallback);
                resolved_[key] = v ? "true" : "false";
                return v;
            }

            std::string choice(const std::string &key, const std::string &fallback, std::initializer_list<const char *> allowed)
            {
                const std::string v = cfg_.get_string(key, fallback);
                if (std::none_of(allowed.begin(), allowed.end(), [&](const char *a)
                                 { return v == a; }))
                {
                    std::string list;
                    for (const char *a : allowed)
                        list += (list.empty() ? "" : ", ") + std::string(a);
                    throw ConfigError("key '" + key + "': '" + v + "' is not one of " + list);
                }
                resolved_[key] = v;
                return v;
            }

            std::vector<double> list(const std::string &key, std::vector<double> fallback)
            {
                const auto v = cfg_.has(key) ? cfg_.get_list(key) : std::move(fallback);
                std::string text;
                for (double x : v)
                    text += (text.empty() ? "" : ", ") + format_real(x);
                resolved_[key] = text;
                return v;
            }

            bool has(const std::string &key) const { return cfg_.has(key); }

            void note(const std::string &key, const std::string &value) { resolved_[key] = value; }

            double c()
            {
                const bool approx = opt_.c_approx || cfg_.get_bool("run.c_approx", false);
                return approx ? kSpeedOfLightApprox : kSpeedOfLight;
            }

            const RunOptions &options() const { return opt_; }
            const std::map<std::string, std::string> &resolved() const { return resolved_; }

        private:
            const Config &cfg_;
            const RunOptions &opt_;
            std::map<std::string, std::string> resolved_;
        };

        // Sweep grid: either sweep.values_<unit> or sweep.start_<unit> / sweep.stop_<unit> / sweep.points
        std::vector<double> read_grid(Params &p, const std::string &unit)
        {
            std::vector<double> grid;
            const std::string values_key = "sweep.values_" + unit;
            if (p.has(values_key))
                grid = p.list(values_key, {});
            else
            {
                const double lo = p.real("sweep.start_" + unit);
                const double hi = p.real("sweep.stop_" + unit);
                const int n = p.integer("sweep.points");
                const std::string scale = p.choice("sweep.scale", "linear", {"linear", "log"});
                if (n < 1)
                    throw ConfigError("key 'sweep.points' must be >= 1");
                if (n == 1)
                {
                    if (lo != hi)
                        throw ConfigError("a one-point sweep needs sweep.start_" + unit + " == sweep.stop_" + unit);
                    grid = {lo};
                }
                else if (!(hi > lo))
                    throw ConfigError("sweep.stop_" + unit + " must exceed sweep.start_" + unit);
                else if (scale == "log")
                {
                    if (!(lo > 0.0))
                        throw ConfigError("a log sweep needs sweep.start_" + unit + " > 0");
                    grid = log_grid(lo, hi, n);
                }
                else
                    grid = linear_grid(lo, hi, n);
            }
            if (grid.empty())
                throw ConfigError("sweep grid is empty");
            for (std::size_t i = 1; i < grid.size(); ++i)
                if (!(grid[i] > grid[i - 1]))
                    throw ConfigError("sweep grid must be strictly increasing");
            return grid;
        }

        double read_wavelength(Params &p)
        {
            const bool by_f = p.has("link.frequency_hz");
            const bool by_l = p.has("link.wavelength_m");
            if (by_f == by_l)
                throw ConfigError("give exactly one of 'link.frequency_hz' and 'link.wavelength_m'");
            if (by_l)
            {
                const double l = p.real("link.wavelength_m");
                if (!(l > 0.0))
                    throw DomainError("link.wavelength_m must be > 0");
                return l;
            }
            const double f = p.real("link.frequency_hz");
            if (!(f > 0.0))
                throw DomainError("link.frequency_hz must be > 0");
            return wavelength_from_frequency(f, p.c());
        }

        XpdModel read_xpd(Params &p, double kappa_fallback = 0.0)
        {
            if (p.has("xpd.leakage_dimensionless"))
            {
                if (p.has("xpd.kappa_dimensionless"))
                    throw ConfigError("give at most one of 'xpd.kappa_dimensionless' and 'xpd.leakage_dimensionless'");
                return XpdModel::from_leakage(p.real("xpd.leakage_dimensionless"));
            }
            return XpdModel::from_kappa(p.real("xpd.kappa_dimensionless", kappa_fallback));
        }

        GainModel read_gains(Params &p, bool allow_fixed = true)
        {
            const std::string model = p.choice("gain.model", "isotropic", {"isotropic", "fixed", "directive_rx", "directive_both"});
            if (model == "fixed")
            {
                if (!allow_fixed)
                    throw ConfigError("gain.model = fixed is not available for frequency sweeps");
                FixedGain g{p.real("gain.tx_dimensionless", 1.0), p.real("gain.rx_dimensionless", 1.0)};
                validate_gain_model(g);
                return g;
            }
            if (model == "directive_rx")
                return directive_rx_gains();
            if (model == "directive_both")
                return directive_both_gains();
            return isotropic_gains();
        }

        struct PowerNoise
        {
            double power = 0.0;
            double sigma2 = 0.0;
        };

        // power.snr_db is P beta / sigma^2 with the far-field beta; otherwise power.total_w and noise.variance_w
        PowerNoise read_power(Params &p, double beta_far)
        {
            PowerNoise out;
            out.sigma2 = p.real("noise.variance_w", 1.0);
            if (!(out.sigma2 > 0.0))
                throw DomainError("noise.variance_w must be > 0");
            if (p.has("power.snr_db"))
            {
                if (p.has("power.total_w"))
                    throw ConfigError("give at most one of 'power.snr_db' and 'power.total_w'");
                out.power = db_to_linear(p.real("power.snr_db")) * out.sigma2 / beta_far;
                p.note("power.total_w", format_real(out.power));
            }
            else
                out.power = p.real("power.total_w");
            if (!(out.power > 0.0))
                throw DomainError("power.total_w must be > 0");
            return out;
        }

        ChannelModelKind read_model(Params &p, const char *fallback)
        {
            return p.choice("channel.model", fallback, {"exact", "fresnel"}) == "exact" ? ChannelModelKind::exact
                                                                                        : ChannelModelKind::fresnel;
        }

        ChannelMatrix build_channel(ChannelModelKind kind, const LinkGeometry &link, const GainModel &gains)
        {
            return kind == ChannelModelKind::exact ? exact_single_pol(link, gains) : fresnel_single_pol(link, gains);
        }

        double waterfilled_bits(const EigenSpectrum &s, const PowerNoise &pn)
        {
            return capacity(s, waterfill(s, pn.power, pn.sigma2), pn.sigma2).bits_per_use;
        }

        FixedAreaSpec read_fixed_area(Params &p)
        {
            FixedAreaSpec s;
            s.area = p.real("array.area_m2", 5.0);
            s.distance = p.real("link.distance_m", 80.0);
            s.element_width_factor = p.real("array.element_width_lambda", 0.5);
            s.power_density_ratio = std::pow(10.0, p.real("power.p_over_n0_dbhz", 204.0) / 10.0);
            if (p.choice("bandwidth.model", "proportional", {"proportional", "fixed"}) == "fixed")
                s.bandwidth = FixedBandwidth{p.real("bandwidth.fixed_hz", 90e6)};
            else
                s.bandwidth = ProportionalBandwidth{p.real("bandwidth.coef_dimensionless", 0.03)};
            const std::string count = p.choice("scaling.count", "exact", {"exact", "approx", "integer"});
            s.count = count == "exact" ? CountModel::exact : count == "approx" ? CountModel::approx : CountModel::integer;
            s.validate();
            return s;
        }

        using Runner = std::function<void(Params &, ScenarioOutput &)>;

        void run_spacing_sweep(Params &p, ScenarioOutput &out)
        {
            const double lambda = read_wavelength(p);
            const double d = p.real("link.distance_m");
            const int mh = p.integer("array.m_h");
            const int mv = p.integer("array.m_v");
            const double w = p.real("array.element_width_m", 0.0);
            const auto kappas = p.list("xpd.kappa_list_dimensionless", {0.0});
            const GainModel gains = read_gains(p);
            const auto grid = read_grid(p, "m");

            const LinkGeometry probe = uniform_link(lambda, d, mh, mv, grid.front(), w);
            const PowerNoise pn = read_power(p, channel_gain_far(probe, gains));
            std::vector<XpdModel> xpds;
            for (double k : kappas)
                xpds.push_back(XpdModel::from_kappa(k));

            struct Point
            {
                double exact_dual, fresnel_dual, exact_single;
            };
            std::vector<Point> pts(grid.size() * xpds.size());
            parallel_for(pts.size(), p.options().threads, [&](std::size_t idx)
                         {
                const std::size_t ki = idx / grid.size(), gi = idx % grid.size();
                const LinkGeometry link = uniform_link(lambda, d, mh, mv, grid[gi], w);
                const auto exact = gram_eigenvalues(exact_single_pol(link, gains));
                const auto fresnel = gram_eigenvalues(fresnel_single_pol(link, gains));
                pts[idx] = {waterfilled_bits(kronecker_spectrum(exact, xpds[ki]), pn),
                            waterfilled_bits(kronecker_spectrum(fresnel, xpds[ki]), pn),
                            waterfilled_bits(exact, pn)}; });

            out.table.columns = {"delta_m", "capacity_exact_dual", "capacity_fresnel_dual", "capacity_exact_single", "kappa"};
            for (std::size_t ki = 0; ki < xpds.size(); ++ki)
            {
                std::size_t best = 0;
                for (std::size_t gi = 0; gi < grid.size(); ++gi)
                {
                    const Point &pt = pts[ki * grid.size() + gi];
                    out.table.add_row({grid[gi], pt.exact_dual, pt.fresnel_dual, pt.exact_single, kappas[ki]});
                    if (pt.exact_dual > pts[ki * grid.size() + best].exact_dual)
                        best = gi;
                }
                out.summary.push_back("kappa " + format_real(kappas[ki]) + ": peak " +
                                      format_real(pts[ki * grid.size() + best].exact_dual) + " bits/use at delta " +
                                      format_real(grid[best]) + " m");
            }
            const Spacing opt = symmetric_optimal_spacing(lambda, d, mh, mv);
            out.summary.push_back("optimal spacing sqrt(lambda d / M_h) = " + format_real(opt.h) + " m");
        }

        void run_kappa_sweep(Params &p, ScenarioOutput &out)
        {
            const double lambda = read_wavelength(p);
            const double d = p.real("link.distance_m");
            const int mh = p.integer("array.m_h");
            const int mv = p.integer("array.m_v");
            const double w = p.real("array.element_width_m", 0.0);
            const GainModel gains = read_gains(p);
            const auto kind = read_model(p, "fresnel");
            const auto grid = read_grid(p, "dimensionless");

            const LinkGeometry link = optimal_link(lambda, d, mh, mv, w);
            const PowerNoise pn = read_power(p, channel_gain_far(link, gains));
            const auto single = gram_eigenvalues(build_channel(kind, link, gains));
            const double single_bits = waterfilled_bits(single, pn);

            std::vector<double> dual(grid.size());
            parallel_for(grid.size(), p.options().threads, [&](std::size_t i)
                         { dual[i] = waterfilled_bits(kronecker_spectrum(single, XpdModel::from_kappa(grid[i])), pn); });

            out.table.columns = {"kappa", "capacity_dual", "capacity_single"};
            for (std::size_t i = 0; i < grid.size(); ++i)
                out.table.add_row({grid[i], dual[i], single_bits});
            const auto lo = std::min_element(dual.begin(), dual.end()) - dual.begin();
            out.summary.push_back("minimum dual capacity " + format_real(dual[lo]) + " bits/use at kappa " + format_real(grid[lo]));
        }

        void run_antennas_vs_frequency(Params &p, ScenarioOutput &out)
        {
            const FixedAreaSpec spec = read_fixed_area(p);
            const double c = p.c();
            const auto grid = read_grid(p, "hz");
            out.table.columns = {"f_hz", "lambda_m", "m_exact", "m_approx", "m_int"};
            for (double f : grid)
            {
                const double lambda = wavelength_from_frequency(f, c);
                out.table.add_row({f, lambda, max_antennas_exact(spec, lambda),
                                   max_antennas_approx(lambda, spec.distance, spec.area),
                                   static_cast<long long>(max_antennas_integer(spec, lambda))});
            }
        }

        void run_design(Params &p, ScenarioOutput &out)
        {
            const double lambda = read_wavelength(p);
            const double d = p.real("link.distance_m");
            const int mh = p.integer("array.m_h");
            const int mv = p.integer("array.m_v");
            const double w = p.real("array.element_width_m", 0.0);
            SpacingSplit split{p.real("array.alpha_dimensionless", 0.5), p.real("array.gamma_dimensionless", 0.5)};
            const LinkGeometry link = optimal_link(lambda, d, mh, mv, w, split);
            const auto tx = aperture_lengths(link.tx);
            const auto rx = aperture_lengths(link.rx);
            const Spacing sym = symmetric_optimal_spacing(lambda, d, mh, mv);

            out.table.columns = {"lambda_m", "distance_m", "m_h", "m_v", "h_t_m", "h_r_m", "v_t_m", "v_r_m",
                                 "tx_length_h_m", "tx_length_v_m", "rx_length_h_m", "rx_length_v_m",
                                 "fraunhofer_m", "footprint_m"};
            out.table.add_row({lambda, d, static_cast<long long>(mh), static_cast<long long>(mv),
                               link.tx.spacing_h, link.rx.spacing_h, link.tx.spacing_v, link.rx.spacing_v,
                               tx.horizontal, tx.vertical, rx.horizontal, rx.vertical,
                               fraunhofer_array_distance(d, mh, mv), beam_footprint(d, lambda, mh)});
            out.summary.push_back("symmetric optimal spacing h = " + format_real(sym.h) + " m, v = " + format_real(sym.v) + " m");
            out.summary.push_back("Fraunhofer array distance " + format_real(fraunhofer_array_distance(d, mh, mv)) + " m");
        }

        void run_capacity(Params &p, ScenarioOutput &out)
        {
            const double lambda = read_wavelength(p);
            const double d = p.real("link.distance_m");
            const int mh = p.integer("array.m_h");
            const int mv = p.integer("array.m_v");
            const double w = p.real("array.element_width_m", 0.0);
            const GainModel gains = read_gains(p);
            const auto kind = read_model(p, "exact");
            const bool dual = p.choice("channel.polarization", "dual", {"single", "dual"}) == "dual";
            LinkGeometry link;
            if (p.has("array.spacing_m"))
                link = uniform_link(lambda, d, mh, mv, p.real("array.spacing_m"), w);
            else
                link = optimal_link(lambda, d, mh, mv, w,
                                    {p.real("array.alpha_dimensionless", 0.5), p.real("array.gamma_dimensionless", 0.5)});
            const double beta = channel_gain_far(link, gains);
            const PowerNoise pn = read_power(p, beta);
            const XpdModel xpd = read_xpd(p);

            auto spectrum = gram_eigenvalues(build_channel(kind, link, gains));
            if (dual)
                spectrum = kronecker_spectrum(spectrum, xpd);
            const auto res = capacity(spectrum, waterfill(spectrum, pn.power, pn.sigma2), pn.sigma2);
            long long active = 0;
            for (double q : res.allocation.powers)
                active += q > 0.0;

            out.table.columns = {"antennas", "dimensions", "beta", "power_w", "sigma2_w", "capacity_bits_per_use",
                                 "equal_power_bits_per_use", "active_dimensions", "water_level_w"};
            std::vector<Cell> row{static_cast<long long>(link.tx.count()), static_cast<long long>(spectrum.size()), beta,
                                  pn.power, pn.sigma2, res.bits_per_use,
                                  equal_power_capacity(spectrum, pn.power, pn.sigma2), active, res.allocation.water_level};
            if (p.has("bandwidth.fixed_hz"))
            {
                const double b = p.real("bandwidth.fixed_hz");
                out.table.columns.push_back("bits_per_second");
                row.push_back(capacity_bps(res.bits_per_use, b));
            }
            out.table.add_row(std::move(row));
            out.summary.push_back("capacity " + format_real(res.bits_per_use) + " bits/use over " +
                                  std::to_string(active) + " active dimensions");
        }

        void run_geometry(Params &p, ScenarioOutput &out)
        {
            GeometryProblem prob;
            prob.antennas = p.integer("array.antennas");
            prob.wavelength = read_wavelength(p);
            prob.distance = p.real("link.distance_m");
            prob.element_width = p.real("array.element_width_m", 0.0);
            const int a_steps = p.integer("oracle.alpha_steps", 101);
            const int g_steps = p.integer("oracle.gamma_steps", 101);
            prob.validate();

            out.table.columns = {"objective", "source", "m_h", "m_v", "alpha", "gamma", "value"};
            auto add = [&](const char *obj, const char *src, const GeometrySolution &s)
            {
                out.table.add_row({std::string(obj), std::string(src), static_cast<long long>(s.m_h),
                                   static_cast<long long>(s.m_v), s.alpha, s.gamma_split, s.objective_value});
            };
            for (Objective obj : {Objective::length, Objective::area})
            {
                prob.objective = obj;
                const char *name = obj == Objective::length ? "length_m" : "area_m2";
                for (int mh : divisors(prob.antennas))
                {
                    GeometrySolution s{mh, prob.antennas / mh, 0.5, 0.5, evaluate_objective(prob, mh, 0.5, 0.5)};
                    add(name, "divisor_scan", s);
                }
                const auto closed = obj == Objective::length ? minimize_length(prob) : minimize_area(prob);
                add(name, "closed_form", closed);
                const auto oracle = grid_oracle(prob, a_steps, g_steps).best;
                add(name, "grid_oracle", oracle);
                out.summary.push_back(std::string(name) + ": closed form " + std::to_string(closed.m_h) + "x" +
                                      std::to_string(closed.m_v) + " = " + format_real(closed.objective_value) +
                                      ", oracle " + std::to_string(oracle.m_h) + "x" + std::to_string(oracle.m_v) +
                                      " = " + format_real(oracle.objective_value));
            }
        }

        void run_freq_sweep(Params &p, ScenarioOutput &out)
        {
            FixedAreaSpec spec = read_fixed_area(p);
            spec.gains = read_gains(p, false);
            spec.validate();
            const double c = p.c();
            const auto grid = read_grid(p, "hz");
            const auto pts = capacity_vs_frequency(spec, grid, c, p.options().threads);
            const double limit = asymptotic_capacity_limit(spec.area, spec.distance, spec.power_density_ratio);

            out.table.columns = {"f_hz", "lambda_m", "m_real", "m_int", "m_used", "bandwidth_hz", "beta", "capacity_bps", "limit_bps"};
            std::vector<double> f, cap;
            for (const auto &pt : pts)
            {
                out.table.add_row({pt.frequency, pt.wavelength, pt.m_real, static_cast<long long>(pt.m_int), pt.m_used,
                                   pt.bandwidth, pt.beta, pt.capacity_bps, limit});
                f.push_back(pt.frequency);
                cap.push_back(pt.capacity_bps);
            }
            out.summary.push_back("asymptotic limit " + format_real(limit) + " bits/s");
            if (grid.size() >= 2)
                out.summary.push_back("log-log slope over the grid " + format_real(growth_exponent(f, cap)));
        }

        void run_realistic(Params &p, ScenarioOutput &out)
        {
            RealisticSpec spec;
            spec.link = read_fixed_area(p);
            spec.tx_directive = p.flag("realistic.tx_directive", true);
            spec.rx_directive = p.flag("realistic.rx_directive", true);
            spec.directive_area_coef = p.real("realistic.directive_area_coef_m", 1.0 / (4.0 * kPi));
            spec.kappa = read_xpd(p).kappa();
            spec.max_antennas = p.integer("realistic.max_antennas", 2500);
            const int order = p.options().quad_order.value_or(p.integer("quad.order", 16));
            p.note("quad.order", std::to_string(order));
            if (order < 2)
                throw ConfigError("quadrature order must be >= 2");
            spec.rule = QuadratureRule{order};
            spec.threads = p.options().threads;
            const double c = p.c();
            const auto grid = read_grid(p, "hz");

            out.table.columns = {"f_hz", "lambda_m", "antennas", "capacity_realistic_bps", "capacity_ideal_bps",
                                 "ratio", "quad_order", "accuracy_warning"};
            for (double f : grid)
            {
                const RealisticPoint pt = realistic_capacity(spec, f, c);
                if (pt.skipped)
                {
                    const std::string msg = "skipped f_hz " + format_real(f) + ": " + std::to_string(pt.antennas) +
                                            " antennas above realistic.max_antennas";
                    out.notices.push_back(msg);
                    out.table.comments.push_back(msg);
                    continue;
                }
                if (pt.accuracy_warning)
                    out.notices.push_back("f_hz " + format_real(f) + ": quadrature phase step above pi/2 at order " +
                                          std::to_string(pt.quad_order));
                out.table.add_row({pt.frequency, pt.wavelength, static_cast<long long>(pt.antennas),
                                   pt.capacity_realistic_bps, pt.capacity_ideal_bps,
                                   pt.capacity_realistic_bps / pt.capacity_ideal_bps,
                                   static_cast<long long>(pt.quad_order), static_cast<long long>(pt.accuracy_warning)});
            }
            out.summary.push_back(std::to_string(out.table.rows.size()) + " of " + std::to_string(grid.size()) +
                                  " frequencies evaluated");
        }

        void run_vc_example(Params &p, ScenarioOutput &out)
        {
            const double lambda = read_wavelength(p);
            const double d = p.real("link.distance_m");
            const int mh = p.integer("array.m_h");
            const int mv = p.integer("array.m_v");
            const double w = p.real("array.element_width_m", 0.0);
            const auto alphas = p.list("array.alpha_list_dimensionless", {0.0, 0.01, 0.25, 0.5, 1.0});
            const GainModel gains = read_gains(p);
            const auto kind = read_model(p, "fresnel");
            const XpdModel xpd = read_xpd(p);

            const PowerNoise pn = read_power(p, channel_gain_far(optimal_link(lambda, d, mh, mv, w), gains));
            out.table.columns = {"alpha", "gamma", "h_t_m", "h_r_m", "v_t_m", "v_r_m", "tx_area_m2", "rx_area_m2",
                                 "capacity_bits_per_use"};
            for (double a : alphas)
            {
                const LinkGeometry link = optimal_link(lambda, d, mh, mv, w, {a, a});
                const auto tx = aperture_lengths(link.tx);
                const auto rx = aperture_lengths(link.rx);
                const auto spectrum = kronecker_spectrum(gram_eigenvalues(build_channel(kind, link, gains)), xpd);
                out.table.add_row({a, a, link.tx.spacing_h, link.rx.spacing_h, link.tx.spacing_v, link.rx.spacing_v,
                                   tx.horizontal * tx.vertical, rx.horizontal * rx.vertical, waterfilled_bits(spectrum, pn)});
            }
        }

        const std::map<std::string, Runner> &runners()
        {
            static const std::map<std::string, Runner> r{
                {"spacing-sweep", run_spacing_sweep},
                {"kappa-sweep", run_kappa_sweep},
                {"antennas-vs-frequency", run_antennas_vs_frequency},
                {"design", run_design},
                {"capacity", run_capacity},
                {"geometry", run_geometry},
                {"freq-sweep", run_freq_sweep},
                {"realistic", run_realistic},
                {"vc-example", run_vc_example},
            };
            return r;
        }
    }

    const std::vector<std::string> &scenario_names()
    {
        static const std::vector<std::string> names = []
        {
            std::vector<std::string> v;
            for (const auto &[k, fn] : runners())
                v.push_back(k);
            return v;
        }();
        return names;
    }

    ScenarioOutput run_scenario(const std::string &name, const Config &config, const RunOptions &options)
    {
        const auto it = runners().find(name);
        if (it == runners().end())
        {
            std::string list;
            for (const auto &n : scenario_names())
                list += (list.empty() ? "" : ", ") + n;
            throw ConfigError("unknown scenario '" + name + "' (known: " + list + ")");
        }
        if (options.threads < 1)
            throw ConfigError("thread count must be >= 1");

        Params params(config, options);
        ScenarioOutput out;
        it->second(params, out);
        // Read "scenario" / "output.path" so they do not show up as unused
        config.get_string("scenario", name);
        config.get_string("output.path", "");
        config.get_bool("run.c_approx", false);

        std::vector<std::string> header{
            std::string("losmimo ") + LOSMIMO_VERSION,
            "scenario = " + name,
            "config_hash = fnv1a64:" + config.hash_hex(),
            "c_m_per_s = " + format_real(params.c()),
        };
        for (const auto &[k, v] : params.resolved())
            header.push_back("param " + k + " = " + v);
        header.insert(header.end(), out.table.comments.begin(), out.table.comments.end());
        out.table.comments = std::move(header);
        return out;
    }
}
