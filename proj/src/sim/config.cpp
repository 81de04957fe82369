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

#include "rvsoc/sim/config.hpp"

#include <fmt/format.h>

#include <charconv>

namespace rvsoc::sim {

core::ExecutorConfig SimConfig::executor_config() const {
    core::ExecutorConfig c;
    c.cycle_ns = cycle_ns;
    c.ebreak_mode = ebreak_mode;
    c.strict_align = strict_align;
    c.cycles = cycle_table;
    return c;
}

void SimConfig::validate() const {
    if (mem_size < 16) throw ConfigError("memory size must be at least 16 bytes");
    if (static_cast<uint64_t>(memory_map::kRamBase) + mem_size > memory_map::kTraceBase)
        throw ConfigError(fmt::format("memory size 0x{:x} overlaps the peripheral region", mem_size));
    if (signature) {
        const auto& s = *signature;
        if ((s.begin & 3u) != 0 || (s.end & 3u) != 0)
            throw ConfigError(fmt::format("signature bounds 0x{:x},0x{:x} are not word-aligned", s.begin, s.end));
        if (s.begin > s.end) throw ConfigError("signature begin is above its end");
        if (s.begin < memory_map::kRamBase ||
            static_cast<uint64_t>(s.end) > static_cast<uint64_t>(memory_map::kRamBase) + mem_size)
            throw ConfigError("signature range lies outside RAM");
        if (s.out_path.empty()) throw ConfigError("signature output path is empty");
    }
}

std::optional<uint64_t> parse_number(std::string_view text) {
    int base = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        base = 16;
        text.remove_prefix(2);
    }
    if (text.empty()) return std::nullopt;
    uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    return v;
}

std::array<uint32_t, isa::kMnemonicCount> parse_cycle_table(std::string_view text) {
    auto table = core::ExecutorConfig::make_unit_cycles();
    std::size_t lineno = 0;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(fmt::format("cycle table line {}: expected name=cycles", lineno));
        const auto name = trim(line.substr(0, eq));
        const auto count = parse_number(trim(line.substr(eq + 1)));
        if (!count || *count == 0 || *count > 0xFFFFFFFFu)
            throw ConfigError(fmt::format("cycle table line {}: bad cycle count", lineno));
        bool found = false;
        for (std::size_t i = 1; i < isa::kMnemonicCount; ++i) {
            if (isa::mnemonic_name(static_cast<isa::Mnemonic>(i)) == name) {
                table[i] = static_cast<uint32_t>(*count);
                found = true;
                break;
            }
        }
        if (!found) throw ConfigError(fmt::format("cycle table line {}: unknown mnemonic '{}'", lineno, name));
    }
    return table;
}

} // namespace rvsoc::sim
