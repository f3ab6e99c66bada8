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

#ifndef LOSMIMO_CLI_CONFIG_HPP
#define LOSMIMO_CLI_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace losmimo::cli
{
    // Flat "section.key = value" text. '#' starts a comment, blank lines are ignored,
    // a key may appear only once.
    class Config
    {
    public:
        static Config parse(std::string_view text, const std::string &origin = "<string>");
        static Config load(const std::string &path);

        // Adds or replaces a key from a "key=value" override
        void set(const std::string &assignment);
        void set(const std::string &key, const std::string &value);

        bool has(const std::string &key) const;

        std::string get_string(const std::string &key) const;
        std::string get_string(const std::string &key, const std::string &fallback) const;
        double get_double(const std::string &key) const;
        double get_double(const std::string &key, double fallback) const;
        int get_int(const std::string &key) const;
        int get_int(const std::string &key, int fallback) const;
        bool get_bool(const std::string &key, bool fallback) const;

        // Comma separated reals
        std::vector<double> get_list(const std::string &key) const;

        // Every key with its raw value, sorted by key
        const std::map<std::string, std::string> &entries() const { return entries_; }

        // Keys never read by any getter
        std::vector<std::string> unused_keys() const;

        // FNV-1a 64 over the sorted "key=value\n" lines
        std::uint64_t hash() const;
        std::string hash_hex() const;

    private:
        const std::string &raw(const std::string &key) const;

        std::map<std::string, std::string> entries_;
        std::string origin_;
        mutable std::set<std::string> used_;
    };
}

#endif
