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

#include "rvsoc/obs/logger.hpp"

#include <fmt/format.h>

#include <array>
#include <cctype>

namespace rvsoc::obs {

namespace {

constexpr std::array<std::string_view, 5> kLevelNames = {"none", "error", "info", "debug", "trace"};
constexpr std::array<std::string_view, 5> kLevelTags = {"", "ERROR", "INFO", "DEBUG", "TRACE"};

} // namespace

std::optional<LogLevel> parse_log_level(std::string_view text) {
    std::string lower;
    for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (std::size_t i = 0; i < kLevelNames.size(); ++i) {
        if (lower == kLevelNames[i] || lower == std::string(1, static_cast<char>('0' + i)))
            return static_cast<LogLevel>(i);
    }
    return std::nullopt;
}

std::string_view level_name(LogLevel level) { return kLevelNames[static_cast<std::size_t>(level)]; }

Logger::~Logger() {
    if (out_ != nullptr) out_->flush();
}

void Logger::open_file(const std::string& path) {
    auto f = std::make_unique<std::ofstream>(path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!f->is_open()) throw LogIoError(fmt::format("cannot open log file '{}'", path));
    file_ = std::move(f);
    out_ = file_.get();
    path_ = path;
}

void Logger::attach_stream(std::ostream& out) {
    file_.reset();
    out_ = &out;
    path_ = "<stream>";
}

void Logger::log(LogLevel level, uint64_t time_ns, std::string_view message) {
    if (!enabled(level)) return;
    fmt::memory_buffer buf;
    fmt::format_to(std::back_inserter(buf), "{} [{}] {}\n", time_ns, kLevelTags[static_cast<std::size_t>(level)],
                   message);
    out_->write(buf.data(), static_cast<std::streamsize>(buf.size()));
    check_stream();
}

void Logger::record_instruction(uint64_t time_ns, uint32_t pc, const isa::DecodedInstruction& instr,
                                const InstructionEffects& effects) {
    if (!enabled(LogLevel::Trace)) return;
    fmt::memory_buffer buf;
    auto it = std::back_inserter(buf);
    if (instr.compressed())
        fmt::format_to(it, "{} {:08x} {:04x} {}", time_ns, pc, instr.raw, isa::disassemble(instr));
    else
        fmt::format_to(it, "{} {:08x} {:08x} {}", time_ns, pc, instr.raw, isa::disassemble(instr));
    const char* sep = "; ";
    if (effects.rd) {
        fmt::format_to(it, "{}x{}={:08x}", sep, *effects.rd, effects.rd_value);
        sep = " ";
    }
    if (effects.mem_address) fmt::format_to(it, "{}addr={:08x}", sep, *effects.mem_address);
    buf.push_back('\n');
    out_->write(buf.data(), static_cast<std::streamsize>(buf.size()));
    check_stream();
}

void Logger::flush() {
    if (out_ == nullptr) return;
    out_->flush();
    check_stream();
}

void Logger::check_stream() {
    if (!*out_) throw LogIoError(fmt::format("write to log '{}' failed", path_));
}

} // namespace rvsoc::obs
