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

#include "losmimo/cli/config.hpp"
#include "losmimo/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace losmimo::cli
{
    namespace
    {
        std::string trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return std::string(s.substr(b, e - b + 1));
        }

        bool valid_key(const std::string &key)
        {
            if (key.empty() || key.front() == '.' || key.back() == '.')
                return false;
            for (char c : key)
                if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-'))
                    return false;
            return true;
        }

        double to_double(const std::string &key, const std::string &text)
        {
            double v = 0.0;
            const char *first = text.data();
            const char *last = first + text.size();
            if (first != last && *first == '+')
                ++first;
            const auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last || !std::isfinite(v))
                throw ConfigError("key '" + key + "': '" + text + "' is not a finite number");
            return v;
        }
    }

    Config Config::parse(std::string_view text, const std::string &origin)
    {
        Config cfg;
        cfg.origin_ = origin;
        std::istringstream in{std::string(text)};
        std::string line;
        int lineno = 0;
        while (std::getline(in, line))
        {
            ++lineno;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            const std::string body = trim(line);
            if (body.empty())
                continue;
            const auto eq = body.find('=');
            const std::string where = origin + ":" + std::to_string(lineno);
            if (eq == std::string::npos)
                throw ConfigError(where + ": expected 'key = value'");
            const std::string key = trim(std::string_view(body).substr(0, eq));
            const std::string value = trim(std::string_view(body).substr(eq + 1));
            if (!valid_key(key))
                throw ConfigError(where + ": invalid key '" + key + "'");
            if (value.empty())
                throw ConfigError(where + ": key '" + key + "' has no value");
            if (!cfg.entries_.emplace(key, value).second)
                throw ConfigError(where + ": duplicate key '" + key + "'");
        }
        return cfg;
    }

    Config Config::load(const std::string &path)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw ConfigError("cannot open config file '" + path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        return parse(ss.str(), path);
    }

    void Config::set(const std::string &assignment)
    {
        const auto eq = assignment.find('=');
        if (eq == std::string::npos)
            throw ConfigError("override '" + assignment + "' is not of the form key=value");
        set(trim(std::string_view(assignment).substr(0, eq)), trim(std::string_view(assignment).substr(eq + 1)));
    }

    void Config::set(const std::string &key, const std::string &value)
    {
        if (!valid_key(key))
            throw ConfigError("invalid key '" + key + "'");
        if (value.empty())
            throw ConfigError("key '" + key + "' has no value");
        entries_[key] = value;
    }

    bool Config::has(const std::string &key) const
    {
        return entries_.count(key) != 0;
    }

    const std::string &Config::raw(const std::string &key) const
    {
        const auto it = entries_.find(key);
        if (it == entries_.end())
            throw ConfigError("missing required key '" + key + "'");
        used_.insert(key);
        return it->second;
    }

    std::string Config::get_string(const std::string &key) const
    {
        return raw(key);
    }

    std::string Config::get_string(const std::string &key, const std::string &fallback) const
    {
        return has(key) ? raw(key) : fallback;
    }

    double Config::get_double(const std::string &key) const
    {
        return to_double(key, raw(key));
    }

    double Config::get_double(const std::string &key, double fallback) const
    {
        return has(key) ? get_double(key) : fallback;
    }

    int Config::get_int(const std::string &key) const
    {
        const std::string &text = raw(key);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc() || ptr != text.data() + text.size())
            throw ConfigError("key '" + key + "': '" + text + "' is not an integer");
        return v;
    }

    int Config::get_int(const std::string &key, int fallback) const
    {
        return has(key) ? get_int(key) : fallback;
    }

    bool Config::get_bool(const std::string &key, bool fallback) const
    {
        if (!has(key))
            return fallback;
        const std::string &v = raw(key);
        if (v == "true" || v == "1" || v == "yes" || v == "on")
            return true;
        if (v == "false" || v == "0" || v == "no" || v == "off")
            return false;
        throw ConfigError("key '" + key + "': '" + v + "' is not a boolean");
    }

    std::vector<double> Config::get_list(const std::string &key) const
    {
        const std::string &text = raw(key);
        std::vector<double> out;
        std::size_t start = 0;
        while (start <= text.size())
        {
            auto comma = text.find(',', start);
            if (comma == std::string::npos)
                comma = text.size();
            const std::string item = trim(std::string_view(text).substr(start, comma - start));
            if (item.empty())
                throw ConfigError("key '" + key + "': empty list item");
            out.push_back(to_double(key, item));
            start = comma + 1;
        }
        return out;
    }

    std::vector<std::string> Config::unused_keys() const
    {
        std::vector<std::string> out;
        for (const auto &[k, v] : entries_)
            if (!used_.count(k))
                out.push_back(k);
        return out;
    }

    std::uint64_t Config::hash() const
    {
        std::uint64_t h = 14695981039346656037ull;
        auto feed = [&h](std::string_view s)
        {
            for (unsigned char c : s)
            {
                h ^= c;
                h *= 1099511628211ull;
            }
        };
        for (const auto &[k, v] : entries_)
        {
            feed(k);
            feed("=");
            feed(v);
            feed("\n");
        }
        return h;
    }

    std::string Config::hash_hex() const
    {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
        return buf;
    }
}
