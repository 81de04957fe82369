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

#include "rvsoc/core/executor.hpp"
#include "rvsoc/obs/logger.hpp"
#include "rvsoc/periph/trace.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rvsoc::sim {

// Bus addresses every guest program is built against.
namespace memory_map {
constexpr uint32_t kRamBase = 0x00000000;
constexpr uint32_t kDefaultRamSize = 16u * 1024u * 1024u;
constexpr uint32_t kTraceBase = 0x40000000;
constexpr uint32_t kTimerBase = 0x40004000;
} // namespace memory_map

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExitStatus : int { Normal = 0, ConfigOrLoadError = 1, FatalGuestError = 2, LogIoFailure = 3 };

struct SignatureSpec {
    uint32_t begin = 0;
    uint32_t end = 0;
    std::string out_path;

    friend bool operator==(const SignatureSpec&, const SignatureSpec&) = default;
};

struct SimConfig {
    std::string hex_path;
    uint32_t mem_size = memory_map::kDefaultRamSize;
    uint64_t cycle_ns = 10;
    obs::LogLevel log_level = obs::LogLevel::Error;
    std::optional<std::string> log_path;
    periph::TraceSinkSpec trace_sink{};
    std::optional<uint64_t> max_instructions;
    std::optional<uint64_t> max_sim_time_ns;
    std::optional<uint32_t> entry_pc_override;
    core::EbreakMode ebreak_mode = core::EbreakMode::Halt;
    std::optional<SignatureSpec> signature;
    bool strict_align = false;
    std::optional<std::string> stats_path;
    std::array<uint32_t, isa::kMnemonicCount> cycle_table = core::ExecutorConfig::make_unit_cycles();

    core::ExecutorConfig executor_config() const;

    /// Throws ConfigError for inconsistent settings (signature bounds,
    /// zero memory size, ...).
    void validate() const;
};

/// Parses `mnemonic=cycles` lines ('#' starts a comment) on top of the
/// all-ones default. Throws ConfigError naming the offending line.
std::array<uint32_t, isa::kMnemonicCount> parse_cycle_table(std::string_view text);

/// Accepts decimal or 0x-prefixed hexadecimal.
std::optional<uint64_t> parse_number(std::string_view text);

} // namespace rvsoc::sim
