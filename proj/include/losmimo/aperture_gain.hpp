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

#ifndef LOSMIMO_APERTURE_GAIN_HPP
#define LOSMIMO_APERTURE_GAIN_HPP

#include "losmimo/channel.hpp"
#include "losmimo/constants.hpp"
#include "losmimo/scaling.hpp"

#include <complex>
#include <vector>

namespace losmimo
{
    // Square aperture in the z = 0 plane
    struct ApertureElement
    {
        double x = 0.0;    // center [m]
        double y = 0.0;    // center [m]
        double side = 0.0; // physical side [m], area side^2

        double area() const { return side * side; }
    };

    // Point source above the aperture plane
    struct SourcePoint
    {
        double x = 0.0;
        double y = 0.0;
        double z = 1.0;         // height above the aperture plane, > 0
        double amplitude = 1.0; // E0 [V]
    };

    // Tensor-product Gauss-Legendre rule with `order` points per axis
    struct QuadratureRule
    {
        int order = 16;
    };

    struct GaussLegendre
    {
        std::vector<double> nodes;   // on [-1, 1], ascending
        std::vector<double> weights;
    };

    // Nodes and weights of the n-point rule (exact for polynomials up to degree 2n - 1)
    GaussLegendre gauss_legendre(int n);

    // Scalar near-field incident field at (x, y, 0) from the source, with r the squared distance:
    // E0 / sqrt(4 pi) * sqrt(z (dx^2 + z^2)) / r^(5/4) * exp(-i 2 pi sqrt(r) / lambda)
    std::complex<double> incident_field(double x, double y, const SourcePoint &src, double wavelength);

    struct GainResult
    {
        double gain = 0.0;            // |int E|^2 / (A int |E|^2), in (0, 1]
        int order = 0;                // points per axis actually used
        double max_phase_step = 0.0;  // largest phase change between neighbouring nodes [rad]
        bool accuracy_warning = false; // max_phase_step > pi/2
    };

    GainResult normalized_gain(const ApertureElement &element, const SourcePoint &src, double wavelength,
                               const QuadratureRule &rule = {});

    // Doubles the order (up to max_order) while the phase-step warning is raised
    GainResult normalized_gain_adaptive(const ApertureElement &element, const SourcePoint &src, double wavelength,
                                        const QuadratureRule &rule = {}, int max_order = 64);

    enum class GainConvention
    {
        normalized,    // the bounded gain itself
        aperture_scaled // multiplied by 4 pi A_phy / lambda^2
    };

    struct PairGainTables
    {
        PerPairGain gains;
        int max_order_used = 0;
        bool accuracy_warning = false; // some pair still warned at the maximum order
    };

    // Receiver gain of pair (m, k): rx element k illuminated by tx antenna m; transmitter gain by
    // reciprocity with the roles swapped. Throws DomainError when elements overlap.
    PairGainTables realistic_pair_gains(const LinkGeometry &link, double side_t, double side_r,
                                        GainConvention convention, const QuadratureRule &rule = {},
                                        int threads = 1);

    // Element sizing for the realistic-antenna study
    struct RealisticSpec
    {
        FixedAreaSpec link;                         // area, distance, w, P/N0, bandwidth (gains unused)
        bool tx_directive = true;
        bool rx_directive = true;
        double directive_area_coef = 1.0 / (4.0 * kPi); // directive element area = coef * lambda [m^2 per m]
        double kappa = 0.0;
        QuadratureRule rule{16};
        int max_antennas = 2500;
        int threads = 1;
    };

    // Isotropic elements have area lambda^2 / (4 pi); directive ones coef * lambda
    double element_side(const RealisticSpec &spec, bool directive, double wavelength);

    struct RealisticPoint
    {
        double frequency = 0.0;
        double wavelength = 0.0;
        int antennas = 0;                 // deployable M (perfect square)
        bool skipped = false;             // M above the cap
        double capacity_realistic_bps = 0.0;
        double capacity_ideal_bps = 0.0;  // 2 B M log2(1 + P beta / (2 B N0)) with G = 1 / lambda per directive side
        int quad_order = 0;
        bool accuracy_warning = false;
    };

    // Exact channel with per-pair aperture gains, water-filled dual-polarized capacity
    RealisticPoint realistic_capacity(const RealisticSpec &spec, double frequency, double c = kSpeedOfLight);
}

#endif
