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
#include "losmimo/channel.hpp"
#include "losmimo/cli/config.hpp"
#include "losmimo/cli/scenarios.hpp"
#include "losmimo/constants.hpp"
#include "losmimo/eigencap.hpp"
#include "losmimo/errors.hpp"
#include "losmimo/geometry.hpp"
#include "losmimo/optimizer.hpp"
#include "losmimo/scaling.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace losmimo;

namespace
{
    EigenSpectrum spectrum_of(const std::vector<double> &values)
    {
        return EigenSpectrum::from_raw(values);
    }

    ChannelMatrix build_channel(const LinkGeometry &link, const GainModel &gains, const std::string &model,
                                const std::optional<XpdModel> &xpd)
    {
        ChannelMatrix h;
        if (model == "exact")
            h = exact_single_pol(link, gains);
        else if (model == "fresnel")
            h = fresnel_single_pol(link, gains);
        else
            throw DomainError("channel model must be 'exact' or 'fresnel', got '" + model + "'");
        return xpd ? dual_pol(h, *xpd) : h;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Line-of-sight MIMO design for dual-polarized planar arrays";
    m.attr("__version__") = LOSMIMO_VERSION;
    m.attr("SPEED_OF_LIGHT") = kSpeedOfLight;
    m.attr("SPEED_OF_LIGHT_APPROX") = kSpeedOfLightApprox;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("wavelength_from_frequency", &wavelength_from_frequency, py::arg("frequency_hz"),
          py::arg("c") = kSpeedOfLight);
    m.def("frequency_from_wavelength", &frequency_from_wavelength, py::arg("wavelength_m"),
          py::arg("c") = kSpeedOfLight);
    m.def("db_to_linear", &db_to_linear);

    // geometry
    py::class_<UraSpec>(m, "UraSpec")
        .def(py::init<>())
        .def(py::init([](int m_h, int m_v, double h, double v, double w)
                      { return UraSpec{m_h, m_v, h, v, w}; }),
             py::arg("m_h"), py::arg("m_v"), py::arg("spacing_h"), py::arg("spacing_v"),
             py::arg("element_width") = 0.0)
        .def_readwrite("m_h", &UraSpec::m_h)
        .def_readwrite("m_v", &UraSpec::m_v)
        .def_readwrite("spacing_h", &UraSpec::spacing_h)
        .def_readwrite("spacing_v", &UraSpec::spacing_v)
        .def_readwrite("element_width", &UraSpec::element_width)
        .def("count", &UraSpec::count)
        .def("validate", &UraSpec::validate);

    py::class_<LinkGeometry>(m, "LinkGeometry")
        .def(py::init<>())
        .def(py::init([](const UraSpec &tx, const UraSpec &rx, double d, double lambda)
                      { return LinkGeometry{tx, rx, d, lambda}; }),
             py::arg("tx"), py::arg("rx"), py::arg("distance"), py::arg("wavelength"))
        .def_readwrite("tx", &LinkGeometry::tx)
        .def_readwrite("rx", &LinkGeometry::rx)
        .def_readwrite("distance", &LinkGeometry::distance)
        .def_readwrite("wavelength", &LinkGeometry::wavelength)
        .def("validate", &LinkGeometry::validate)
        .def("far_channel_gain_ok", &LinkGeometry::far_channel_gain_ok);

    py::class_<SpacingSplit>(m, "SpacingSplit")
        .def(py::init([](double a, double g) { return SpacingSplit{a, g}; }),
             py::arg("alpha") = 0.5, py::arg("gamma_split") = 0.5)
        .def_readwrite("alpha", &SpacingSplit::alpha)
        .def_readwrite("gamma_split", &SpacingSplit::gamma_split);

    m.def("antenna_index",
          [](int idx, int m_h, int m_v)
          {
              const auto a = antenna_index(idx, m_h, m_v);
              return py::make_tuple(a.i, a.j);
          },
          py::arg("m"), py::arg("m_h"), py::arg("m_v"));
    m.def("pair_distance", &pair_distance, py::arg("link"), py::arg("m"), py::arg("k"));
    m.def("array_diagonal", &array_diagonal);
    m.def("aperture_lengths",
          [](const UraSpec &a)
          {
              const auto l = aperture_lengths(a);
              return py::make_tuple(l.horizontal, l.vertical);
          });
    m.def("symmetric_optimal_spacing",
          [](double lambda, double d, int m_h, int m_v)
          {
              const auto s = symmetric_optimal_spacing(lambda, d, m_h, m_v);
              return py::make_tuple(s.h, s.v);
          },
          py::arg("wavelength"), py::arg("distance"), py::arg("m_h"), py::arg("m_v"));
    m.def("optimal_link", &optimal_link, py::arg("wavelength"), py::arg("distance"), py::arg("m_h"),
          py::arg("m_v"), py::arg("element_width") = 0.0, py::arg("split") = SpacingSplit{});
    m.def("uniform_link", &uniform_link, py::arg("wavelength"), py::arg("distance"), py::arg("m_h"),
          py::arg("m_v"), py::arg("delta"), py::arg("element_width") = 0.0);
    m.def("fraunhofer_array_distance", &fraunhofer_array_distance);
    m.def("first_null_beamwidth", &first_null_beamwidth);
    m.def("beam_footprint", &beam_footprint);

    // channel
    py::class_<XpdModel>(m, "XpdModel")
        .def(py::init<>())
        .def_static("from_kappa", &XpdModel::from_kappa)
        .def_static("from_leakage", &XpdModel::from_leakage)
        .def_property_readonly("kappa", &XpdModel::kappa)
        .def_property_readonly("leakage", &XpdModel::leakage)
        .def_property_readonly("mu1", &XpdModel::mu1)
        .def_property_readonly("mu2", &XpdModel::mu2)
        .def("coupling", &XpdModel::coupling);

    py::class_<IsotropicGain>(m, "IsotropicGain").def(py::init<>());
    py::class_<FixedGain>(m, "FixedGain")
        .def(py::init([](double t, double r) { return FixedGain{t, r}; }), py::arg("g_t") = 1.0,
             py::arg("g_r") = 1.0)
        .def_readwrite("g_t", &FixedGain::g_t)
        .def_readwrite("g_r", &FixedGain::g_r);
    py::class_<WavelengthPowerGain>(m, "WavelengthPowerGain")
        .def(py::init([](double g0, double rho) { return WavelengthPowerGain{g0, rho}; }),
             py::arg("g0") = 1.0, py::arg("rho") = 2.0)
        .def_readwrite("g0", &WavelengthPowerGain::g0)
        .def_readwrite("rho", &WavelengthPowerGain::rho);
    py::class_<PerPairGain>(m, "PerPairGain")
        .def(py::init([](Eigen::MatrixXd t, Eigen::MatrixXd r) { return PerPairGain{std::move(t), std::move(r)}; }),
             py::arg("g_t"), py::arg("g_r"))
        .def_readwrite("g_t", &PerPairGain::g_t)
        .def_readwrite("g_r", &PerPairGain::g_r);

    m.def("channel_gain", &channel_gain, py::arg("link"), py::arg("gains"), py::arg("m"), py::arg("k"));
    m.def("channel_gain_far", &channel_gain_far, py::arg("link"), py::arg("gains") = GainModel{IsotropicGain{}});
    m.def("channel_matrix",
          [](const LinkGeometry &link, const GainModel &gains, const std::string &model,
             const std::optional<XpdModel> &xpd) { return build_channel(link, gains, model, xpd).entries; },
          py::arg("link"), py::arg("gains") = GainModel{IsotropicGain{}}, py::arg("model") = "exact",
          py::arg("xpd") = py::none(),
          "Channel matrix, entry (k, m) from tx m to rx k; dual-polarized when xpd is given");
    m.def("gram_offdiag_magnitude", &gram_offdiag_magnitude, py::arg("link"), py::arg("l"), py::arg("k"),
          py::arg("gains") = GainModel{IsotropicGain{}});
    m.def("dirichlet_ratio", &dirichlet_ratio);

    // eigenvalues and capacity
    m.def("gram_eigenvalues",
          [](const Eigen::MatrixXcd &h) { return gram_eigenvalues(h).values; },
          "Eigenvalues of H^H H, descending");
    m.def("kronecker_spectrum",
          [](const std::vector<double> &single, const XpdModel &xpd)
          { return kronecker_spectrum(spectrum_of(single), xpd).values; });

    py::class_<PowerAllocation>(m, "PowerAllocation")
        .def_readonly("powers", &PowerAllocation::powers)
        .def_readonly("total", &PowerAllocation::total)
        .def_readonly("water_level", &PowerAllocation::water_level);

    m.def("waterfill",
          [](const std::vector<double> &ev, double p, double sigma2) { return waterfill(spectrum_of(ev), p, sigma2); },
          py::arg("eigenvalues"), py::arg("total_power"), py::arg("sigma2") = 1.0);
    m.def("capacity",
          [](const std::vector<double> &ev, const PowerAllocation &alloc, double sigma2)
          { return capacity(spectrum_of(ev), alloc, sigma2).bits_per_use; },
          py::arg("eigenvalues"), py::arg("allocation"), py::arg("sigma2") = 1.0);
    m.def("waterfilled_capacity",
          [](const std::vector<double> &ev, double p, double sigma2)
          {
              const auto s = spectrum_of(ev);
              return capacity(s, waterfill(s, p, sigma2), sigma2).bits_per_use;
          },
          py::arg("eigenvalues"), py::arg("total_power"), py::arg("sigma2") = 1.0);
    m.def("equal_power_capacity",
          [](const std::vector<double> &ev, double p, double sigma2)
          { return equal_power_capacity(spectrum_of(ev), p, sigma2); },
          py::arg("eigenvalues"), py::arg("total_power"), py::arg("sigma2") = 1.0);
    m.def("two_level_waterfill", &two_level_waterfill, py::arg("mu1"), py::arg("mu2"), py::arg("beta"),
          py::arg("antennas"), py::arg("total_power"), py::arg("sigma2") = 1.0);
    m.def("two_level_threshold", &two_level_threshold, py::arg("mu1"), py::arg("mu2"), py::arg("beta"),
          py::arg("sigma2") = 1.0);
    m.def("optimal_capacity_closed_form", &optimal_capacity_closed_form, py::arg("mu1"), py::arg("mu2"),
          py::arg("beta"), py::arg("antennas"), py::arg("total_power"), py::arg("sigma2") = 1.0);
    m.def("jensen_equal_power_bound",
          [](const std::vector<double> &single, double mu1, double mu2, double p, double sigma2)
          { return jensen_equal_power_bound(single, mu1, mu2, p, sigma2); },
          py::arg("single_eigenvalues"), py::arg("mu1"), py::arg("mu2"), py::arg("total_power"),
          py::arg("sigma2") = 1.0);
    m.def("usa_capacity_bps", &usa_capacity_bps, py::arg("antennas"), py::arg("total_power_over_n0"),
          py::arg("beta"), py::arg("bandwidth"));

    // optimizer
    py::enum_<Objective>(m, "Objective").value("length", Objective::length).value("area", Objective::area);
    py::enum_<SolutionSource>(m, "SolutionSource")
        .value("closed_form", SolutionSource::closed_form)
        .value("grid_oracle", SolutionSource::grid_oracle);

    py::class_<GeometryProblem>(m, "GeometryProblem")
        .def(py::init([](int n, double lambda, double d, double w, Objective obj)
                      { return GeometryProblem{n, lambda, d, w, obj}; }),
             py::arg("antennas"), py::arg("wavelength"), py::arg("distance"), py::arg("element_width") = 0.0,
             py::arg("objective") = Objective::length)
        .def_readwrite("antennas", &GeometryProblem::antennas)
        .def_readwrite("wavelength", &GeometryProblem::wavelength)
        .def_readwrite("distance", &GeometryProblem::distance)
        .def_readwrite("element_width", &GeometryProblem::element_width)
        .def_readwrite("objective", &GeometryProblem::objective);

    py::class_<GeometrySolution>(m, "GeometrySolution")
        .def_readonly("m_h", &GeometrySolution::m_h)
        .def_readonly("m_v", &GeometrySolution::m_v)
        .def_readonly("alpha", &GeometrySolution::alpha)
        .def_readonly("gamma_split", &GeometrySolution::gamma_split)
        .def_readonly("objective_value", &GeometrySolution::objective_value)
        .def_readonly("source", &GeometrySolution::source);

    m.def("divisors", &divisors);
    m.def("total_aperture_length", &total_aperture_length, py::arg("antennas"), py::arg("m_h"),
          py::arg("wavelength"), py::arg("distance"), py::arg("element_width"), py::arg("alpha") = 0.5,
          py::arg("gamma_split") = 0.5);
    m.def("total_aperture_area", &total_aperture_area, py::arg("antennas"), py::arg("m_h"),
          py::arg("wavelength"), py::arg("distance"), py::arg("element_width"), py::arg("alpha") = 0.5,
          py::arg("gamma_split") = 0.5);
    m.def("minimize_length", &minimize_length);
    m.def("minimize_area", &minimize_area);
    m.def("grid_oracle",
          [](const GeometryProblem &p, int a, int g)
          {
              auto r = grid_oracle(p, a, g);
              py::dict surface;
              surface["divisors"] = r.surface.divisors;
              surface["alphas"] = r.surface.alphas;
              surface["gammas"] = r.surface.gammas;
              surface["values"] = r.surface.values;
              return py::make_tuple(r.best, surface);
          },
          py::arg("problem"), py::arg("alpha_steps") = 101, py::arg("gamma_steps") = 101,
          "Returns (best, surface) with surface['values'][d][a][g]");

    // scaling
    py::class_<ProportionalBandwidth>(m, "ProportionalBandwidth")
        .def(py::init([](double c) { return ProportionalBandwidth{c}; }), py::arg("coef") = 0.03)
        .def_readwrite("coef", &ProportionalBandwidth::coef);
    py::class_<FixedBandwidth>(m, "FixedBandwidth")
        .def(py::init([](double hz) { return FixedBandwidth{hz}; }), py::arg("hz") = 90e6)
        .def_readwrite("hz", &FixedBandwidth::hz);
    py::enum_<CountModel>(m, "CountModel")
        .value("exact", CountModel::exact)
        .value("approx", CountModel::approx)
        .value("integer", CountModel::integer);

    py::class_<FixedAreaSpec>(m, "FixedAreaSpec")
        .def(py::init<>())
        .def_readwrite("area", &FixedAreaSpec::area)
        .def_readwrite("distance", &FixedAreaSpec::distance)
        .def_readwrite("element_width_factor", &FixedAreaSpec::element_width_factor)
        .def_readwrite("power_density_ratio", &FixedAreaSpec::power_density_ratio)
        .def_readwrite("bandwidth", &FixedAreaSpec::bandwidth)
        .def_readwrite("gains", &FixedAreaSpec::gains)
        .def_readwrite("count", &FixedAreaSpec::count)
        .def("validate", &FixedAreaSpec::validate);

    py::class_<FrequencyPoint>(m, "FrequencyPoint")
        .def_readonly("frequency", &FrequencyPoint::frequency)
        .def_readonly("wavelength", &FrequencyPoint::wavelength)
        .def_readonly("m_real", &FrequencyPoint::m_real)
        .def_readonly("m_int", &FrequencyPoint::m_int)
        .def_readonly("m_used", &FrequencyPoint::m_used)
        .def_readonly("bandwidth", &FrequencyPoint::bandwidth)
        .def_readonly("beta", &FrequencyPoint::beta)
        .def_readonly("capacity_bps", &FrequencyPoint::capacity_bps);

    m.def("isotropic_gains", &isotropic_gains);
    m.def("directive_rx_gains", &directive_rx_gains);
    m.def("directive_both_gains", &directive_both_gains);
    m.def("max_antennas_exact", &max_antennas_exact, py::arg("spec"), py::arg("wavelength"));
    m.def("antenna_count_k0", &antenna_count_k0, py::arg("spec"), py::arg("wavelength"));
    m.def("max_antennas_integer", &max_antennas_integer, py::arg("spec"), py::arg("wavelength"));
    m.def("max_antennas_approx", &max_antennas_approx, py::arg("wavelength"), py::arg("distance"),
          py::arg("area"));
    m.def("capacity_vs_frequency",
          [](const FixedAreaSpec &s, const std::vector<double> &f, double c, int threads)
          {
              py::gil_scoped_release release;
              return capacity_vs_frequency(s, f, c, threads);
          },
          py::arg("spec"), py::arg("frequencies"), py::arg("c") = kSpeedOfLight, py::arg("threads") = 1);
    m.def("asymptotic_capacity_limit", &asymptotic_capacity_limit, py::arg("area"), py::arg("distance"),
          py::arg("power_density_ratio"));
    m.def("growth_exponent",
          [](const std::vector<double> &f, const std::vector<double> &c, std::optional<double> lo,
             std::optional<double> hi) { return growth_exponent(f, c, lo, hi); },
          py::arg("frequencies"), py::arg("capacities"), py::arg("f_lo") = py::none(), py::arg("f_hi") = py::none());
    m.def("log_grid", &log_grid);
    m.def("linear_grid", &linear_grid);

    // aperture gain
    py::class_<ApertureElement>(m, "ApertureElement")
        .def(py::init([](double x, double y, double side) { return ApertureElement{x, y, side}; }),
             py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("side") = 0.0)
        .def_readwrite("x", &ApertureElement::x)
        .def_readwrite("y", &ApertureElement::y)
        .def_readwrite("side", &ApertureElement::side);
    py::class_<SourcePoint>(m, "SourcePoint")
        .def(py::init([](double x, double y, double z, double e0) { return SourcePoint{x, y, z, e0}; }),
             py::arg("x") = 0.0, py::arg("y") = 0.0, py::arg("z") = 1.0, py::arg("amplitude") = 1.0)
        .def_readwrite("x", &SourcePoint::x)
        .def_readwrite("y", &SourcePoint::y)
        .def_readwrite("z", &SourcePoint::z)
        .def_readwrite("amplitude", &SourcePoint::amplitude);
    py::class_<GainResult>(m, "GainResult")
        .def_readonly("gain", &GainResult::gain)
        .def_readonly("order", &GainResult::order)
        .def_readonly("max_phase_step", &GainResult::max_phase_step)
        .def_readonly("accuracy_warning", &GainResult::accuracy_warning);

    m.def("gauss_legendre",
          [](int n)
          {
              auto r = gauss_legendre(n);
              return py::make_tuple(r.nodes, r.weights);
          });
    m.def("incident_field", &incident_field, py::arg("x"), py::arg("y"), py::arg("source"), py::arg("wavelength"));
    m.def("normalized_gain",
          [](const ApertureElement &e, const SourcePoint &s, double lambda, int order)
          { return normalized_gain(e, s, lambda, QuadratureRule{order}); },
          py::arg("element"), py::arg("source"), py::arg("wavelength"), py::arg("order") = 16);
    m.def("normalized_gain_adaptive",
          [](const ApertureElement &e, const SourcePoint &s, double lambda, int order, int max_order)
          { return normalized_gain_adaptive(e, s, lambda, QuadratureRule{order}, max_order); },
          py::arg("element"), py::arg("source"), py::arg("wavelength"), py::arg("order") = 16,
          py::arg("max_order") = 64);

    py::class_<RealisticSpec>(m, "RealisticSpec")
        .def(py::init<>())
        .def_readwrite("link", &RealisticSpec::link)
        .def_readwrite("tx_directive", &RealisticSpec::tx_directive)
        .def_readwrite("rx_directive", &RealisticSpec::rx_directive)
        .def_readwrite("directive_area_coef", &RealisticSpec::directive_area_coef)
        .def_readwrite("kappa", &RealisticSpec::kappa)
        .def_property(
            "quad_order", [](const RealisticSpec &s) { return s.rule.order; },
            [](RealisticSpec &s, int n) { s.rule.order = n; })
        .def_readwrite("max_antennas", &RealisticSpec::max_antennas)
        .def_readwrite("threads", &RealisticSpec::threads);
    py::class_<RealisticPoint>(m, "RealisticPoint")
        .def_readonly("frequency", &RealisticPoint::frequency)
        .def_readonly("wavelength", &RealisticPoint::wavelength)
        .def_readonly("antennas", &RealisticPoint::antennas)
        .def_readonly("skipped", &RealisticPoint::skipped)
        .def_readonly("capacity_realistic_bps", &RealisticPoint::capacity_realistic_bps)
        .def_readonly("capacity_ideal_bps", &RealisticPoint::capacity_ideal_bps)
        .def_readonly("quad_order", &RealisticPoint::quad_order)
        .def_readonly("accuracy_warning", &RealisticPoint::accuracy_warning);
    m.def("element_side", &element_side, py::arg("spec"), py::arg("directive"), py::arg("wavelength"));
    m.def("realistic_capacity",
          [](const RealisticSpec &s, double f, double c)
          {
              py::gil_scoped_release release;
              return realistic_capacity(s, f, c);
          },
          py::arg("spec"), py::arg("frequency"), py::arg("c") = kSpeedOfLight);

    // scenarios
    m.def("scenario_names", &cli::scenario_names);
    m.def("run_scenario",
          [](const std::string &name, const std::string &config_text, int threads, bool c_approx)
          {
              const auto cfg = cli::Config::parse(config_text, "<python>");
              cli::RunOptions opt;
              opt.threads = threads;
              opt.c_approx = c_approx;
              cli::ScenarioOutput out;
              {
                  py::gil_scoped_release release;
                  out = cli::run_scenario(name, cfg, opt);
              }
              return py::make_tuple(out.table.str(), out.summary, out.notices);
          },
          py::arg("name"), py::arg("config_text"), py::arg("threads") = 1, py::arg("c_approx") = false,
          "Runs a CLI scenario; returns (csv_text, summary_lines, notices)");
}
