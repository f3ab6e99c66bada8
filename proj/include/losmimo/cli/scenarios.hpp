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

#ifndef LOSMIMO_CLI_SCENARIOS_HPP
#define LOSMIMO_CLI_SCENARIOS_HPP

#include "losmimo/cli/config.hpp"
#include "losmimo/cli/csv.hpp"

#include <optional>
#include <string>
#include <vector>

namespace losmimo::cli
{
    struct RunOptions
    {
        int threads = 1;
        bool c_approx = false;             // c = 3e8 instead of 299792458
        std::optional<int> quad_order;     // overrides quad.order
    };

    struct ScenarioOutput
    {
        CsvTable table;
        std::vector<std::string> summary; // human readable lines for stdout
        std::vector<std::string> notices; // skipped points and accuracy warnings, for stderr
    };

    const std::vector<std::string> &scenario_names();

    // Runs the named scenario. Throws ConfigError for unknown names, missing or malformed keys,
    // DomainError / NumericError from the library.
    ScenarioOutput run_scenario(const std::string &name, const Config &config, const RunOptions &options);
}

#endif
