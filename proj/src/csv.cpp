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

#include "losmimo/cli/csv.hpp"
#include "losmimo/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace losmimo::cli
{
    std::string format_real(double v)
    {
        if (std::isnan(v))
            return "nan";
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        if (v == 0.0)
            return "0";
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

    std::string quote_field(const std::string &s)
    {
        if (s.find_first_of(",\"\r\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s)
        {
            if (c == '"')
                out += '"';
            out += c;
        }
        out += '"';
        return out;
    }

    void CsvTable::add_row(std::vector<Cell> row)
    {
        if (row.size() != columns.size())
            throw std::logic_error("CSV row has " + std::to_string(row.size()) + " cells, expected " +
                                   std::to_string(columns.size()));
        rows.push_back(std::move(row));
    }

    void CsvTable::write(std::ostream &out) const
    {
        for (const auto &c : comments)
            out << "# " << c << "\n";
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << quote_field(columns[i]);
        out << "\n";
        for (const auto &row : rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
            {
                if (i)
                    out << ',';
                if (const auto *d = std::get_if<double>(&row[i]))
                    out << format_real(*d);
                else if (const auto *n = std::get_if<long long>(&row[i]))
                    out << *n;
                else
                    out << quote_field(std::get<std::string>(row[i]));
            }
            out << "\n";
        }
    }

    std::string CsvTable::str() const
    {
        std::ostringstream ss;
        write(ss);
        return ss.str();
    }
}
