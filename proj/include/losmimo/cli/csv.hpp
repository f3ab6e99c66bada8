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

#ifndef LOSMIMO_CLI_CSV_HPP
#define LOSMIMO_CLI_CSV_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace losmimo::cli
{
    using Cell = std::variant<double, long long, std::string>;

    // %.17g, with "0" for zero and nan / inf spelled out
    std::string format_real(double v);

    // RFC 4180 quoting when the field holds a comma, quote or line break
    std::string quote_field(const std::string &s);

    struct CsvTable
    {
        std::vector<std::string> comments; // written as "# " lines before the column header
        std::vector<std::string> columns;
        std::vector<std::vector<Cell>> rows;

        void add_row(std::vector<Cell> row);
        void write(std::ostream &out) const;
        std::string str() const;
    };
}

#endif
