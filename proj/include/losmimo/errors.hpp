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

#ifndef LOSMIMO_ERRORS_HPP
#define LOSMIMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace losmimo
{
    // Input outside the mathematical domain of an operation (bad index, arcsin argument > 1, ...)
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Iterative routine failed to converge; carries the number of iterations spent
    class NumericError : public std::runtime_error
    {
    public:
        NumericError(const std::string &what, int iterations)
            : std::runtime_error(what + " (after " + std::to_string(iterations) + " iterations)"),
              iterations_(iterations) {}

        int iterations() const noexcept { return iterations_; }

    private:
        int iterations_;
    };

    // Malformed or incomplete experiment configuration
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
