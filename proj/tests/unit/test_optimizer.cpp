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
#include "losmimo/eigencap.hpp"
#include "losmimo/errors.hpp"
#include "losmimo/optimizer.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace losmimo;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    GeometryProblem problem(int m, Objective obj)
    {
        return {m, 0.01, 100.0, 0.005, obj};
    }
}

TEST_CASE("divisors", "[optimizer]")
{
    CHECK(divisors(1) == std::vector<int>{1});
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(64) == std::vector<int>{1, 2, 4, 8, 16, 32, 64});
    CHECK(divisors(13) == std::vector<int>{1, 13});
}

TEST_CASE("aperture objectives", "[optimizer]")
{
    CHECK_THAT(total_aperture_length(64, 8, 0.01, 100.0, 0.005, 0.5, 0.5), WithinAbs(7.0141421356, 1e-9));
    CHECK_THAT(total_aperture_length(64, 64, 0.01, 100.0, 0.005, 0.5, 0.5), WithinAbs(15.760003173, 1e-8));
    CHECK_THAT(total_aperture_area(64, 8, 0.01, 100.0, 0.005, 0.5, 0.5), WithinAbs(12.299547475, 1e-8));
    CHECK_THAT(total_aperture_area(64, 64, 0.01, 100.0, 0.005, 0.5, 0.5), WithinAbs(0.0788, 1e-12));
    CHECK(total_aperture_area(64, 64, 0.01, 100.0, 0.0, 0.5, 0.5) == 0.0);
    CHECK_THROWS_AS(total_aperture_length(64, 7, 0.01, 100.0, 0.005, 0.5, 0.5), DomainError);
}

TEST_CASE("equal split makes the two arrays equally large", "[optimizer]")
{
    for (int mh : divisors(36))
    {
        const auto s = split_optimal_spacing(0.01, 100.0, mh, 36 / mh, {0.5, 0.5});
        const double tx = array_diagonal({mh, 36 / mh, s.h_t, s.v_t, 0.005});
        const double rx = array_diagonal({mh, 36 / mh, s.h_r, s.v_r, 0.005});
        CHECK_THAT(tx, WithinRel(rx, 1e-14));
    }
}

TEST_CASE("minimize_length", "[optimizer]")
{
    auto s = minimize_length(problem(64, Objective::length));
    CHECK(s.m_h == 8);
    CHECK(s.m_v == 8);
    CHECK(s.alpha == 0.5);
    CHECK(s.gamma_split == 0.5);
    CHECK_THAT(s.objective_value, WithinAbs(7.0141421356, 1e-9));

    s = minimize_length(problem(1, Objective::length));
    CHECK((s.m_h == 1 && s.m_v == 1));
    CHECK_THAT(s.objective_value, WithinRel(2.0 * std::sqrt(2.0) * 0.005, 1e-14));

    s = minimize_length(problem(12, Objective::length));
    CHECK(s.m_h == 3);
    CHECK(s.m_v == 4);
    CHECK_THAT(s.objective_value, WithinAbs(3.79996, 1e-5));
    for (int mh : divisors(12))
        CHECK(s.objective_value <= total_aperture_length(12, mh, 0.01, 100.0, 0.005, 0.5, 0.5));
}

TEST_CASE("minimize_area", "[optimizer]")
{
    auto s = minimize_area(problem(64, Objective::area));
    CHECK(s.m_h == 64);
    CHECK(s.m_v == 1);
    CHECK_THAT(s.objective_value, WithinAbs(0.0788, 1e-12));
    CHECK(s.objective_value < total_aperture_area(64, 8, 0.01, 100.0, 0.005, 0.5, 0.5));
    s = minimize_area(problem(2, Objective::area));
    CHECK((s.m_h == 2 && s.m_v == 1));
}

TEST_CASE("grid oracle agrees with the closed forms", "[optimizer]")
{
    auto r = grid_oracle(problem(64, Objective::length), 101, 101);
    CHECK(r.best.m_h == 8);
    CHECK(r.best.m_v == 8);
    CHECK_THAT(r.best.alpha, WithinAbs(0.5, 0.01));
    CHECK_THAT(r.best.gamma_split, WithinAbs(0.5, 0.01));
    CHECK(r.best.source == SolutionSource::grid_oracle);
    REQUIRE(r.surface.divisors.size() == 7);
    REQUIRE(r.surface.values.size() == 7);
    REQUIRE(r.surface.values[0].size() == 101);
    REQUIRE(r.surface.values[0][0].size() == 101);

    r = grid_oracle(problem(64, Objective::area), 101, 101);
    CHECK(r.best.m_h == 64);
    CHECK(r.best.m_v == 1);
    CHECK_THAT(r.best.objective_value, WithinAbs(0.0788, 1e-12));
    // For every (alpha, gamma) the best shape is a ULA
    const std::size_t nd = r.surface.divisors.size();
    for (std::size_t a = 0; a < r.surface.alphas.size(); a += 5)
        for (std::size_t g = 0; g < r.surface.gammas.size(); g += 5)
        {
            std::size_t best = 0;
            for (std::size_t di = 1; di < nd; ++di)
                if (r.surface.values[di][a][g] < r.surface.values[best][a][g])
                    best = di;
            REQUIRE((best == 0 || best == nd - 1));
        }

    r = grid_oracle(problem(4, Objective::length), 11, 11);
    CHECK((r.best.m_h == 2 && r.best.m_v == 2));
    CHECK_THROWS_AS(grid_oracle(problem(4, Objective::length), 1, 11), DomainError);
}

TEST_CASE("closed form and oracle agree for square counts", "[optimizer][property]")
{
    for (int m : {4, 16, 36, 64})
        for (Objective obj : {Objective::length, Objective::area})
        {
            const auto p = problem(m, obj);
            const auto cf = obj == Objective::length ? minimize_length(p) : minimize_area(p);
            const auto orc = grid_oracle(p, 101, 101).best;
            REQUIRE(orc.m_h == cf.m_h);
            REQUIRE(orc.m_v == cf.m_v);
            REQUIRE_THAT(orc.objective_value, WithinRel(cf.objective_value, 1e-12));
        }
}

TEST_CASE("total length is stationary at the equal split", "[optimizer][property]")
{
    const double h = 1e-5;
    for (int mh : divisors(64))
    {
        auto f = [&](double a, double g)
        { return total_aperture_length(64, mh, 0.01, 100.0, 0.005, a, g); };
        REQUIRE(std::abs((f(0.5 + h, 0.5) - f(0.5 - h, 0.5)) / (2 * h)) < 1e-6);
        REQUIRE(std::abs((f(0.5, 0.5 + h) - f(0.5, 0.5 - h)) / (2 * h)) < 1e-6);
    }
}

TEST_CASE("square arrays maximize the total area", "[optimizer][property]")
{
    for (int m : {16, 36, 64})
    {
        const int root = static_cast<int>(std::lround(std::sqrt(m)));
        double best = 0.0, worst = INFINITY;
        int arg_best = 0;
        for (int mh : divisors(m))
        {
            const double a = total_aperture_area(m, mh, 0.01, 100.0, 0.005, 0.5, 0.5);
            if (a > best)
            {
                best = a;
                arg_best = mh;
            }
            worst = std::min(worst, a);
        }
        REQUIRE(arg_best == root);
        REQUIRE_THAT(worst, WithinRel(total_aperture_area(m, m, 0.01, 100.0, 0.005, 0.5, 0.5), 1e-14));
        REQUIRE_THAT(worst, WithinRel(total_aperture_area(m, 1, 0.01, 100.0, 0.005, 0.5, 0.5), 1e-14));
    }
}

TEST_CASE("Fresnel capacity does not depend on the array shape", "[optimizer][property]")
{
    const double lambda = 0.01, d = 100.0;
    double ref = -1.0;
    for (int mh : divisors(16))
    {
        const auto link = optimal_link(lambda, d, mh, 16 / mh, 0.005, {0.3, 0.7});
        const double beta = channel_gain_far(link, IsotropicGain{});
        const auto s = kronecker_spectrum(gram_eigenvalues(fresnel_single_pol(link)), XpdModel::from_kappa(0.1));
        const double c = capacity(s, waterfill(s, 300.0 / beta, 1.0), 1.0).bits_per_use;
        if (ref < 0.0)
            ref = c;
        REQUIRE_THAT(c, WithinRel(ref, 1e-9));
    }
}
