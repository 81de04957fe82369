// Copyright 2026 The rvsoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "rvsoc/sim/config.hpp"

#include <string>
#include <variant>
#include <vector>

namespace rvsoc::sim {

/// Rejected command line. `exit_code` is 0 for --help, 1 otherwise;
/// `message` holds the diagnostic and/or help text.
struct UsageError {
    std::string message;
    int exit_code = 1;
};

/// Parses command-line arguments (without the program name).
std::variant<SimConfig, UsageError> parse_args(const std::vector<std::string>& args);

} // namespace rvsoc::sim
