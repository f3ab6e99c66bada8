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

#include "losmimo/optimizer.hpp"
#include "losmimo/errors.hpp"
#include "losmimo/geometry.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <tuple>

namespace losmimo
{
    namespace
    {
        struct Apertures
        {
            ApertureLengths tx;
            ApertureLengths rx;
        };

        Apertures split_apertures(int antennas, int m_h, double wavelength, double distance,
                                  double element_width, double alpha, double gamma_split)
        {
            if (m_h < 1 || antennas < 1 || antennas % m_h != 0)
                throw DomainError("m_h = " + std::to_string(m_h) + " does not divide M = " +
                                  std::to_string(antennas));
            const int m_v = antennas / m_h;
            const auto s = split_optimal_spacing(wavelength, distance, m_h, m_v, {alpha, gamma_split});
            const UraSpec tx{m_h, m_v, s.h_t, s.v_t, element_width};
            const UraSpec rx{m_h, m_v, s.h_r, s.v_r, element_width};
            return {aperture_lengths(tx), aperture_lengths(rx)};
        }

        // Lexicographic tie-break key; smaller is preferred. A horizontal ULA wins over its transpose.
        auto tie_key(const GeometrySolution &s)
        {
            return std::make_tuple(std::abs(s.m_h - s.m_v), s.m_v == 1 ? 0 : 1, s.m_h, s.alpha, s.gamma_split);
        }
    }

    void GeometryProblem::validate() const
    {
        if (antennas < 1)
            throw DomainError("M must be >= 1");
        if (!(wavelength > 0.0) || !(distance > 0.0))
            throw DomainError("wavelength and distance must be > 0");
        if (!(element_width >= 0.0))
            throw DomainError("element width must be >= 0");
    }

    std::vector<int> divisors(int n)
    {
        std::vector<int> low, high;
        for (int d = 1; d * d <= n; ++d)
            if (n % d == 0)
            {
                low.push_back(d);
                if (d != n / d)
                    high.push_back(n / d);
            }
        low.insert(low.end(), high.rbegin(), high.rend());
        return low;
    }

    double total_aperture_length(int antennas, int m_h, double wavelength, double distance,
                                 double element_width, double alpha, double gamma_split)
    {
        const auto a = split_apertures(antennas, m_h, wavelength, distance, element_width, alpha, gamma_split);
        return std::hypot(a.tx.horizontal, a.tx.vertical) + std::hypot(a.rx.horizontal, a.rx.vertical);
    }

    double total_aperture_area(int antennas, int m_h, double wavelength, double distance,
                               double element_width, double alpha, double gamma_split)
    {
        const auto a = split_apertures(antennas, m_h, wavelength, distance, element_width, alpha, gamma_split);
        return a.tx.horizontal * a.tx.vertical + a.rx.horizontal * a.rx.vertical;
    }

    double evaluate_objective(const GeometryProblem &p, int m_h, double alpha, double gamma_split)
    {
        return p.objective == Objective::length
                   ? total_aperture_length(p.antennas, m_h, p.wavelength, p.distance, p.element_width, alpha, gamma_split)
                   : total_aperture_area(p.antennas, m_h, p.wavelength, p.distance, p.element_width, alpha, gamma_split);
    }

    GeometrySolution minimize_length(const GeometryProblem &problem)
    {
        problem.validate();
        GeometryProblem p = problem;
        p.objective = Objective::length;

        // Non-square M cannot reach m_h = sqrt(M); scan the (few) divisors instead.
        GeometrySolution best;
        bool have = false;
        for (int m_h : divisors(p.antennas))
        {
            GeometrySolution s{m_h, p.antennas / m_h, 0.5, 0.5, evaluate_objective(p, m_h, 0.5, 0.5),
                               SolutionSource::closed_form};
            if (!have || s.objective_value < best.objective_value ||
                (s.objective_value == best.objective_value && tie_key(s) < tie_key(best)))
            {
                best = s;
                have = true;
            }
        }
        return best;
    }

    GeometrySolution minimize_area(const GeometryProblem &problem)
    {
        problem.validate();
        GeometryProblem p = problem;
        p.objective = Objective::area;
        return {p.antennas, 1, 0.5, 0.5, evaluate_objective(p, p.antennas, 0.5, 0.5), SolutionSource::closed_form};
    }

    OracleResult grid_oracle(const GeometryProblem &problem, int alpha_steps, int gamma_steps)
    {
        problem.validate();
        if (alpha_steps < 2 || gamma_steps < 2)
            throw DomainError("grid oracle needs at least 2 steps per axis");

        OracleResult out;
        auto &surf = out.surface;
        surf.divisors = divisors(problem.antennas);
        for (int a = 0; a < alpha_steps; ++a)
            surf.alphas.push_back(static_cast<double>(a) / (alpha_steps - 1));
        for (int g = 0; g < gamma_steps; ++g)
            surf.gammas.push_back(static_cast<double>(g) / (gamma_steps - 1));

        bool have = false;
        for (int m_h : surf.divisors)
        {
            auto &plane = surf.values.emplace_back(alpha_steps, std::vector<double>(gamma_steps));
            for (int a = 0; a < alpha_steps; ++a)
                for (int g = 0; g < gamma_steps; ++g)
                {
                    const double v = evaluate_objective(problem, m_h, surf.alphas[a], surf.gammas[g]);
                    plane[a][g] = v;
                    GeometrySolution s{m_h, problem.antennas / m_h, surf.alphas[a], surf.gammas[g], v,
                                       SolutionSource::grid_oracle};
                    if (!have || v < out.best.objective_value ||
                        (v == out.best.objective_value && tie_key(s) < tie_key(out.best)))
                    {
                        out.best = s;
                        have = true;
                    }
                }
        }
        return out;
    }
}
