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

#include "losmimo/channel.hpp"
#include "losmimo/constants.hpp"
#include "losmimo/errors.hpp"

#include <cmath>
#include <string>

namespace losmimo
{
    XpdModel XpdModel::from_kappa(double kappa)
    {
        if (!(kappa >= 0.0 && kappa <= 1.0))
            throw DomainError("kappa must lie in [0,1], got " + std::to_string(kappa));
        XpdModel x;
        x.kappa_ = kappa;
        return x;
    }

    XpdModel XpdModel::from_leakage(double leakage)
    {
        if (!(leakage >= 0.0 && leakage <= 1.0))
            throw DomainError("XPD leakage must lie in [0,1], got " + std::to_string(leakage));
        XpdModel x;
        x.kappa_ = 2.0 * (1.0 - leakage) * leakage;
        x.leakage_ = leakage;
        return x;
    }

    double XpdModel::mu1() const { return 1.0 + 2.0 * std::sqrt((1.0 - kappa_) * kappa_); }
    double XpdModel::mu2() const { return std::max(0.0, 1.0 - 2.0 * std::sqrt((1.0 - kappa_) * kappa_)); }

    Eigen::Matrix2d XpdModel::coupling() const
    {
        const double a = std::sqrt(1.0 - kappa_);
        const double b = std::sqrt(kappa_);
        Eigen::Matrix2d k;
        k << a, b, b, a;
        return k;
    }

    std::pair<Eigenpair2, Eigenpair2> xpd_eigenpairs(const XpdModel &xpd)
    {
        const double s = 1.0 / std::sqrt(2.0);
        Eigenpair2 strong{xpd.mu1(), Eigen::Vector2d(s, s)};
        Eigenpair2 weak{xpd.mu2(), Eigen::Vector2d(-s, s)};
        return {strong, weak};
    }

    void validate_gain_model(const GainModel &gains, int antennas)
    {
        if (const auto *f = std::get_if<FixedGain>(&gains))
        {
            if (!(f->g_t > 0.0) || !(f->g_r > 0.0))
                throw DomainError("fixed gains must be > 0");
        }
        else if (const auto *w = std::get_if<WavelengthPowerGain>(&gains))
        {
            if (!(w->g0 > 0.0))
                throw DomainError("g0 must be > 0");
            if (!(w->rho > 0.0 && w->rho <= 2.0))
                throw DomainError("rho must lie in (0,2], got " + std::to_string(w->rho));
        }
        else if (const auto *p = std::get_if<PerPairGain>(&gains))
        {
            if (p->g_t.rows() != p->g_r.rows() || p->g_t.cols() != p->g_r.cols())
                throw DomainError("per-pair gain tables differ in shape");
            if (antennas > 0 && (p->g_t.rows() != antennas || p->g_t.cols() != antennas))
                throw DomainError("per-pair gain tables must be " + std::to_string(antennas) + "x" +
                                  std::to_string(antennas));
            if (!((p->g_t.array() > 0.0).all() && (p->g_r.array() > 0.0).all()))
                throw DomainError("per-pair gains must be > 0");
        }
    }

    double gain_product(const GainModel &gains, double wavelength, int m, int k)
    {
        struct Visitor
        {
            double wavelength;
            int m, k;
            double operator()(const IsotropicGain &) const { return 1.0; }
            double operator()(const FixedGain &g) const { return g.g_t * g.g_r; }
            double operator()(const WavelengthPowerGain &g) const { return g.g0 / std::pow(wavelength, g.rho); }
            double operator()(const PerPairGain &g) const { return g.g_t(m - 1, k - 1) * g.g_r(m - 1, k - 1); }
        };
        return std::visit(Visitor{wavelength, m, k}, gains);
    }

    double channel_gain(const LinkGeometry &link, const GainModel &gains, int m, int k)
    {
        const double dmk = pair_distance(link, m, k);
        const double path = link.wavelength / (4.0 * kPi * dmk);
        return gain_product(gains, link.wavelength, m, k) * path * path;
    }

    double channel_gain_far(const LinkGeometry &link, const GainModel &gains)
    {
        if (std::holds_alternative<PerPairGain>(gains))
            throw DomainError("the common far-field channel gain is undefined for per-pair gain tables");
        const double path = link.wavelength / (4.0 * kPi * link.distance);
        return gain_product(gains, link.wavelength, 1, 1) * path * path;
    }

    ChannelMatrix exact_single_pol(const LinkGeometry &link, const GainModel &gains)
    {
        link.validate();
        const int n = link.tx.count();
        validate_gain_model(gains, n);

        ChannelMatrix h;
        h.entries.resize(n, n);
        for (int m = 1; m <= n; ++m)
            for (int k = 1; k <= n; ++k)
            {
                const double dmk = pair_distance(link, m, k);
                const double path = link.wavelength / (4.0 * kPi * dmk);
                const double beta = gain_product(gains, link.wavelength, m, k) * path * path;
                const double phase = -2.0 * kPi * (dmk - link.distance) / link.wavelength;
                h.entries(k - 1, m - 1) = std::sqrt(beta) * std::polar(1.0, phase);
            }
        h.model = ChannelModelKind::exact;
        h.polarization = Polarization::single;
        h.link = link;
        h.gains = gains;
        return h;
    }

    ChannelMatrix fresnel_single_pol(const LinkGeometry &link, const GainModel &gains)
    {
        link.validate();
        const int n = link.tx.count();
        validate_gain_model(gains, n);
        const double amplitude = std::sqrt(channel_gain_far(link, gains));
        const double scale = -kPi / (link.distance * link.wavelength);

        ChannelMatrix h;
        h.entries.resize(n, n);
        for (int m = 1; m <= n; ++m)
        {
            const auto a = antenna_index(m, link.tx);
            for (int k = 1; k <= n; ++k)
            {
                const auto b = antenna_index(k, link.rx);
                const double dx = a.i * link.tx.spacing_h - b.i * link.rx.spacing_h;
                const double dy = a.j * link.tx.spacing_v - b.j * link.rx.spacing_v;
                h.entries(k - 1, m - 1) = amplitude * std::polar(1.0, scale * (dx * dx + dy * dy));
            }
        }
        h.model = ChannelModelKind::fresnel;
        h.polarization = Polarization::single;
        h.link = link;
        h.gains = gains;
        return h;
    }

    ChannelMatrix dual_pol(const ChannelMatrix &single, const XpdModel &xpd)
    {
        if (single.polarization != Polarization::single)
            throw DomainError("dual_pol expects a single-polarized channel");
        const Eigen::Index n = single.entries.rows();
        const Eigen::Index c = single.entries.cols();
        const Eigen::Matrix2d k = xpd.coupling();

        ChannelMatrix d = single;
        d.entries.resize(2 * n, 2 * c);
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s)
                d.entries.block(r * n, s * c, n, c) = k(r, s) * single.entries;
        d.polarization = Polarization::dual;
        d.xpd = xpd;
        return d;
    }

    Eigen::MatrixXcd gram(const ChannelMatrix &channel)
    {
        Eigen::MatrixXcd g(channel.entries.cols(), channel.entries.cols());
        g.noalias() = channel.entries.adjoint() * channel.entries;
        return g;
    }

    double dirichlet_ratio(int n, double x)
    {
        const double den = std::sin(x);
        if (std::abs(den) < 1e-12)
            return static_cast<double>(n);
        return std::abs(std::sin(n * x) / den);
    }

    double gram_offdiag_magnitude(const LinkGeometry &link, int l, int k, const GainModel &gains)
    {
        link.validate();
        if (l == k)
            throw DomainError("gram_offdiag_magnitude needs l != k");
        const auto a = antenna_index(l, link.tx);
        const auto b = antenna_index(k, link.tx);
        const double ld = link.wavelength * link.distance;
        const double xh = kPi * (a.i - b.i) * link.tx.spacing_h * link.rx.spacing_h / ld;
        const double xv = kPi * (a.j - b.j) * link.tx.spacing_v * link.rx.spacing_v / ld;
        return channel_gain_far(link, gains) * dirichlet_ratio(link.tx.m_h, xh) *
               dirichlet_ratio(link.tx.m_v, xv);
    }
}
