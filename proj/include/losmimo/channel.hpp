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

#ifndef LOSMIMO_CHANNEL_HPP
#define LOSMIMO_CHANNEL_HPP

#include "losmimo/geometry.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <utility>
#include <variant>

namespace losmimo
{
    using cd = std::complex<double>;

    // Imperfect cross-polar discrimination. kappa is the fraction of power that ends up
    // in the opposite polarization; when built from the per-element leakage gamma,
    // kappa = 2 (1 - gamma) gamma.
    class XpdModel
    {
    public:
        XpdModel() = default;

        static XpdModel from_kappa(double kappa);
        static XpdModel from_leakage(double leakage);

        double kappa() const { return kappa_; }
        std::optional<double> leakage() const { return leakage_; }

        // Eigenvalues of K^H K: 1 +- 2 sqrt((1 - kappa) kappa)
        double mu1() const;
        double mu2() const;

        // K = [[sqrt(1-kappa), sqrt(kappa)], [sqrt(kappa), sqrt(1-kappa)]]
        Eigen::Matrix2d coupling() const;

    private:
        double kappa_ = 0.0;
        std::optional<double> leakage_;
    };

    struct Eigenpair2
    {
        double value = 0.0;
        Eigen::Vector2d vector;
    };

    // Eigenpairs of K^H K, strongest first: (mu1, [1,1]/sqrt2), (mu2, [-1,1]/sqrt2)
    std::pair<Eigenpair2, Eigenpair2> xpd_eigenpairs(const XpdModel &xpd);

    // Antenna gain models. Only the product G^t G^r enters the channel gain.
    struct IsotropicGain
    {
    };

    struct FixedGain
    {
        double g_t = 1.0;
        double g_r = 1.0;
    };

    // G^t G^r = g0 / lambda^rho, rho in (0, 2]. rho = 1: directive receiver, rho = 2: both directive.
    struct WavelengthPowerGain
    {
        double g0 = 1.0;
        double rho = 2.0;
    };

    // Per antenna pair gains, indexed (m - 1, k) with m the tx and k the rx antenna number
    struct PerPairGain
    {
        Eigen::MatrixXd g_t;
        Eigen::MatrixXd g_r;
    };

    using GainModel = std::variant<IsotropicGain, FixedGain, WavelengthPowerGain, PerPairGain>;

    void validate_gain_model(const GainModel &gains, int antennas = 0);

    // G^t_{m,k} G^r_{m,k} at the given wavelength (1-based m, k; ignored unless per-pair)
    double gain_product(const GainModel &gains, double wavelength, int m, int k);

    enum class ChannelModelKind
    {
        exact,
        fresnel
    };

    enum class Polarization
    {
        single,
        dual
    };

    // Channel matrix with entry (k, m) linking tx antenna m to rx antenna k.
    // Dual-polarized matrices order the first polarization as indices 0..M-1, the second as M..2M-1.
    struct ChannelMatrix
    {
        Eigen::MatrixXcd entries;
        ChannelModelKind model = ChannelModelKind::exact;
        Polarization polarization = Polarization::single;
        LinkGeometry link;
        GainModel gains;
        std::optional<XpdModel> xpd;

        int antennas() const { return link.tx.count(); }
    };

    // beta_{m,k} = G^t G^r (lambda / (4 pi d_{m,k}))^2
    double channel_gain(const LinkGeometry &link, const GainModel &gains, int m, int k);

    // beta with d in place of d_{m,k}; not defined for per-pair gain tables
    double channel_gain_far(const LinkGeometry &link, const GainModel &gains);

    // Spherical-wavefront channel: sqrt(beta_{m,k}) exp(-i 2 pi (d_{m,k} - d) / lambda)
    ChannelMatrix exact_single_pol(const LinkGeometry &link, const GainModel &gains = IsotropicGain{});

    // Parabolic-wavefront channel: sqrt(beta) exp(-i pi delta_{m,k} / (d lambda))
    ChannelMatrix fresnel_single_pol(const LinkGeometry &link, const GainModel &gains = IsotropicGain{});

    // K (x) H
    ChannelMatrix dual_pol(const ChannelMatrix &single, const XpdModel &xpd);

    // H^H H
    Eigen::MatrixXcd gram(const ChannelMatrix &channel);

    // |(H^H H)_{l,k}| of the Fresnel channel in closed form (product of two Dirichlet kernels),
    // for 1-based antenna numbers l != k.
    double gram_offdiag_magnitude(const LinkGeometry &link, int l, int k,
                                  const GainModel &gains = IsotropicGain{});

    // |sin(n x) / sin(x)| with the limit n where sin(x) vanishes
    double dirichlet_ratio(int n, double x);
}

#endif
