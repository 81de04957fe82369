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

#include "rvsoc/sim/cli.hpp"
#include "rvsoc/sim/soc.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto parsed = rvsoc::sim::parse_args(args);
    if (auto* err = std::get_if<rvsoc::sim::UsageError>(&parsed)) {
        (err->exit_code == 0 ? std::cout : std::cerr) << err->message;
        return err->exit_code;
    }
    const auto status = rvsoc::sim::run_simulation(std::get<rvsoc::sim::SimConfig>(parsed), std::cerr);
    return static_cast<int>(status);
}
