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

#include "rvsoc/isa/decoder.hpp"

#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rvsoc::obs {

// Ordered by verbosity: a record passes when its level <= the configured one.
enum class LogLevel : uint8_t { None = 0, Error = 1, Info = 2, Debug = 3, Trace = 4 };

std::optional<LogLevel> parse_log_level(std::string_view text);
std::string_view level_name(LogLevel level);

class LogIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Side effects of one retired instruction, appended to its trace line.
struct InstructionEffects {
    std::optional<uint8_t> rd;
    uint32_t rd_value = 0;
    std::optional<uint32_t> mem_address;
};

/// Multi-level text log. Lines carry simulated time only, so two runs with
/// the same input produce identical files.
class Logger {
public:
    Logger() = default;
    Logger(const Logger&) = delete;
    Logger& operator=(const Logger&) = delete;
    ~Logger();

    void set_level(LogLevel level) { level_ = level; }
    LogLevel level() const { return level_; }

    /// Opens (truncating) a log file. Throws LogIoError when it cannot.
    void open_file(const std::string& path);
    /// Logs into a caller-owned stream; used by tests.
    void attach_stream(std::ostream& out);

    bool enabled(LogLevel level) const { return out_ != nullptr && level != LogLevel::None && level <= level_; }

    void log(LogLevel level, uint64_t time_ns, std::string_view message);

    /// `<time-ns> <pc> <raw> <disassembly>; <reg>=<value> addr=<address>`
    void record_instruction(uint64_t time_ns, uint32_t pc, const isa::DecodedInstruction& instr,
                            const InstructionEffects& effects);

    void flush();

private:
    void check_stream();

    LogLevel level_ = LogLevel::None;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* out_ = nullptr;
    std::string path_;
};

} // namespace rvsoc::obs
