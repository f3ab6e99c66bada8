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

#ifndef LOSMIMO_OPTIMIZER_HPP
#define LOSMIMO_OPTIMIZER_HPP

#include <vector>

namespace losmimo
{
    enum class Objective
    {
        length, // sum of the two array diagonals
        area    // sum of the two array face areas
    };

    enum class SolutionSource
    {
        closed_form,
        grid_oracle
    };

    struct GeometryProblem
    {
        int antennas = 1;         // M = m_h m_v
        double wavelength = 0.0;  // [m]
        double distance = 0.0;    // [m]
        double element_width = 0.0; // W in [m]
        Objective objective = Objective::length;

        void validate() const;
    };

    struct GeometrySolution
    {
        int m_h = 1;
        int m_v = 1;
        double alpha = 0.5;
        double gamma_split = 0.5;
        double objective_value = 0.0; // [m] or [m^2]
        SolutionSource source = SolutionSource::closed_form;
    };

    // Objective values over the full oracle grid, values[d][a][g] for divisors[d], alphas[a], gammas[g]
    struct OracleSurface
    {
        std::vector<int> divisors;
        std::vector<double> alphas;
        std::vector<double> gammas;
        std::vector<std::vector<std::vector<double>>> values;
    };

    struct OracleResult
    {
        GeometrySolution best;
        OracleSurface surface;
    };

    // Divisors of n in ascending order
    std::vector<int> divisors(int n);

    // Aperture objectives under the optimal-spacing constraint, spacings from the (alpha, gamma_split) split.
    // m_h must divide M.
    double total_aperture_length(int antennas, int m_h, double wavelength, double distance,
                                 double element_width, double alpha, double gamma_split);
    double total_aperture_area(int antennas, int m_h, double wavelength, double distance,
                               double element_width, double alpha, double gamma_split);

    double evaluate_objective(const GeometryProblem &problem, int m_h, double alpha, double gamma_split);

    // Equal-size arrays with the divisor pair that minimizes the total diagonal
    GeometrySolution minimize_length(const GeometryProblem &problem);

    // Horizontal ULAs (m_h = M, m_v = 1), equal-size arrays
    GeometrySolution minimize_area(const GeometryProblem &problem);

    // Exhaustive search over all divisor pairs and a uniform alpha/gamma grid on [0,1].
    // Ties: smaller |m_h - m_v|, then m_v = 1, then smaller m_h, then smaller alpha, then smaller gamma.
    OracleResult grid_oracle(const GeometryProblem &problem, int alpha_steps, int gamma_steps);
}

#endif
