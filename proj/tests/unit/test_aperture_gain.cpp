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
#include "losmimo/errors.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace losmimo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly", "[aperture]")
{
    for (int n : {1, 2, 3, 5, 8, 16, 33, 64})
    {
        const auto r = gauss_legendre(n);
        REQUIRE(static_cast<int>(r.nodes.size()) == n);
        for (int deg = 0; deg <= 2 * n - 1; ++deg)
        {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                s += r.weights[i] * std::pow(r.nodes[i], deg);
            const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
            REQUIRE_THAT(s, WithinAbs(exact, 1e-13));
        }
        for (int i = 1; i < n; ++i)
            REQUIRE(r.nodes[i] > r.nodes[i - 1]);
    }
    CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("incident field", "[aperture]")
{
    const SourcePoint src{0.3, -0.2, 2.0, 5.0};
    const auto e = incident_field(0.3, -0.2, src, 0.01);
    CHECK_THAT(std::abs(e), WithinRel(5.0 / (std::sqrt(4.0 * kPi) * 2.0), 1e-14));
    CHECK_THAT(std::abs(incident_field(0.7, 0.1, src, 0.01)), WithinRel(std::abs(incident_field(0.7, 0.1, src, 0.37)), 1e-14));
    const SourcePoint far{0.3, -0.2, 4.0, 5.0};
    CHECK_THAT(std::abs(incident_field(0.3, -0.2, far, 0.01)), WithinRel(0.5 * std::abs(e), 1e-14));
    CHECK_THROWS_AS(incident_field(0.0, 0.0, {0.0, 0.0, 0.0, 1.0}, 0.01), DomainError);
}

TEST_CASE("normalized gain limits", "[aperture]")
{
    const ApertureElement el{0.0, 0.0, 0.01};
    const auto flat = normalized_gain(el, {0.0, 0.0, 1e4, 1.0}, 0.01);
    CHECK_THAT(flat.gain, WithinAbs(1.0, 1e-9));
    CHECK_FALSE(flat.accuracy_warning);

    const auto tilted = normalized_gain(el, {0.5, 0.3, 0.05, 1.0}, 0.001);
    CHECK(tilted.gain < 1.0 - 1e-3);
    CHECK(tilted.gain > 0.0);

    CHECK_THROWS_AS(normalized_gain({0.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 1.0}, 0.01), DomainError);
    CHECK_THROWS_AS(normalized_gain(el, {0.0, 0.0, 1.0, 1.0}, 0.01, {1}), DomainError);
}

TEST_CASE("normalized gain stays in (0, 1]", "[aperture][property]")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> pos(-2.0, 2.0), height(0.05, 50.0), side(0.001, 0.2), lg(-4.0, -1.0);
    for (int t = 0; t < 200; ++t)
    {
        const ApertureElement el{pos(rng), pos(rng), side(rng)};
        const SourcePoint src{pos(rng), pos(rng), height(rng), 1.0};
        const auto g = normalized_gain_adaptive(el, src, std::pow(10.0, lg(rng)));
        REQUIRE(g.gain > 0.0);
        REQUIRE(g.gain <= 1.0 + 1e-9);
    }
}

TEST_CASE("quadrature converges between orders 16 and 32", "[aperture][property]")
{
    const double lambda = 0.01;
    const double side = std::sqrt(lambda / (4.0 * kPi));
    for (double off : {0.0, 0.5, 1.2, 2.2})
    {
        const ApertureElement el{0.0, 0.0, side};
        const SourcePoint src{off, 0.3 * off, 80.0, 1.0};
        const double g16 = normalized_gain(el, src, lambda, {16}).gain;
        const double g32 = normalized_gain(el, src, lambda, {32}).gain;
        REQUIRE_THAT(g16, WithinRel(g32, 1e-6));
    }
}

TEST_CASE("adaptive order doubling", "[aperture]")
{
    const ApertureElement el{0.0, 0.0, 0.2};
    const SourcePoint src{1.0, 0.0, 0.2, 1.0};
    const auto fixed = normalized_gain(el, src, 0.001, {4});
    CHECK(fixed.accuracy_warning);
    const auto adaptive = normalized_gain_adaptive(el, src, 0.001, {4}, 64);
    CHECK(adaptive.order > 4);
    CHECK(adaptive.order <= 64);
}

TEST_CASE("gain reciprocity and translation invariance", "[aperture][property]")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> pos(-1.0, 1.0), shift(-50.0, 50.0);
    const double lambda = 0.005, side = 0.02, z = 3.0;
    for (int t = 0; t < 25; ++t)
    {
        const double ax = pos(rng), ay = pos(rng), bx = pos(rng), by = pos(rng);
        const double g_ab = normalized_gain({ax, ay, side}, {bx, by, z, 1.0}, lambda).gain;
        const double g_ba = normalized_gain({bx, by, side}, {ax, ay, z, 1.0}, lambda).gain;
        REQUIRE_THAT(g_ab, WithinAbs(g_ba, 1e-9));

        const double sx = shift(rng), sy = shift(rng);
        const double moved = normalized_gain({ax + sx, ay + sy, side}, {bx + sx, by + sy, z, 1.0}, lambda).gain;
        REQUIRE_THAT(moved, WithinAbs(g_ab, 1e-12));
    }
}

TEST_CASE("pair gain tables", "[aperture]")
{
    const double lambda = 0.01;
    const auto link = optimal_link(lambda, 100.0, 4, 4);
    const double side = 0.02;
    const auto norm = realistic_pair_gains(link, side, side, GainConvention::normalized);
    REQUIRE(norm.gains.g_t.rows() == 16);
    REQUIRE(norm.gains.g_r.cols() == 16);
    CHECK(norm.gains.g_t.maxCoeff() <= 1.0 + 1e-9);
    CHECK(norm.gains.g_r.maxCoeff() <= 1.0 + 1e-9);
    CHECK(norm.gains.g_r.minCoeff() > 0.0);

    const auto scaled = realistic_pair_gains(link, side, side, GainConvention::aperture_scaled);
    const double factor = 4.0 * kPi * side * side / (lambda * lambda);
    CHECK(scaled.gains.g_r.isApprox(factor * norm.gains.g_r, 1e-14));

    // Shift-invariant shortcut against the direct per-pair evaluation
    for (int m = 1; m <= 16; ++m)
        for (int k = 1; k <= 16; ++k)
        {
            const Position pt = tx_position(link, m), pr = rx_position(link, k);
            const double direct = normalized_gain_adaptive({pr.x, pr.y, side}, {pt.x, pt.y, 100.0, 1.0}, lambda).gain;
            REQUIRE_THAT(norm.gains.g_r(m - 1, k - 1), WithinRel(direct, 1e-13));
        }

    CHECK_THROWS_AS(realistic_pair_gains(link, 1.0, side, GainConvention::normalized), DomainError);
}

TEST_CASE("pair gain tables with unequal spacings", "[aperture]")
{
    const auto link = optimal_link(0.01, 100.0, 3, 2, 0.0, {0.3, 0.6});
    const auto t = realistic_pair_gains(link, 0.01, 0.01, GainConvention::normalized, {16}, 3);
    for (int m = 1; m <= 6; ++m)
        for (int k = 1; k <= 6; ++k)
        {
            const Position pt = tx_position(link, m), pr = rx_position(link, k);
            REQUIRE_THAT(t.gains.g_t(m - 1, k - 1),
                         WithinRel(normalized_gain_adaptive({pt.x, pt.y, 0.01}, {pr.x, pr.y, 100.0, 1.0}, 0.01).gain, 1e-13));
        }
}

TEST_CASE("aperture-scaled pair gain reproduces Friis far away", "[aperture]")
{
    const double lambda = 0.01, side = 0.05;
    const double d_fraunhofer = 2.0 * 2.0 * side * side / lambda;
    const double d = 100.0 * d_fraunhofer;
    const auto link = uniform_link(lambda, d, 2, 1, 0.1);
    const auto t = realistic_pair_gains(link, side, side, GainConvention::aperture_scaled);
    const double g_friis = 4.0 * kPi * side * side / (lambda * lambda);
    for (int m = 1; m <= 2; ++m)
        for (int k = 1; k <= 2; ++k)
        {
            const double beta = channel_gain(link, t.gains, m, k);
            const double friis = g_friis * g_friis * std::pow(lambda / (4.0 * kPi * pair_distance(link, m, k)), 2);
            REQUIRE_THAT(beta, WithinRel(friis, 0.01));
        }
}

TEST_CASE("element sizing", "[aperture]")
{
    RealisticSpec spec;
    CHECK_THAT(element_side(spec, true, 0.01) * element_side(spec, true, 0.01), WithinRel(0.01 / (4.0 * kPi), 1e-14));
    CHECK_THAT(element_side(spec, false, 0.01) * element_side(spec, false, 0.01), WithinRel(1e-4 / (4.0 * kPi), 1e-14));
    // aperture factor of a directive element is 1 / lambda
    const double s = element_side(spec, true, 0.01);
    CHECK_THAT(4.0 * kPi * s * s / (0.01 * 0.01), WithinRel(100.0, 1e-12));
}

TEST_CASE("realistic capacity stays close to the ideal gain model", "[aperture]")
{
    RealisticSpec spec;
    spec.link.power_density_ratio = std::pow(10.0, 20.4);
    for (double f : {10e9, 30e9})
    {
        const auto p = realistic_capacity(spec, f, kSpeedOfLightApprox);
        REQUIRE_FALSE(p.skipped);
        REQUIRE(p.capacity_realistic_bps > 0.0);
        CHECK_THAT(p.capacity_realistic_bps / p.capacity_ideal_bps, WithinAbs(1.0, 0.1));
    }
    CHECK(realistic_capacity(spec, 30e9, kSpeedOfLightApprox).antennas == 64);

    spec.max_antennas = 10;
    CHECK(realistic_capacity(spec, 30e9, kSpeedOfLightApprox).skipped);
}
