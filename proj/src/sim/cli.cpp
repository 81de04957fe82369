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

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <sstream>

namespace rvsoc::sim {

namespace {

std::optional<SignatureSpec> parse_signature(const std::string& text) {
    const auto c1 = text.find(',');
    if (c1 == std::string::npos) return std::nullopt;
    const auto c2 = text.find(',', c1 + 1);
    if (c2 == std::string::npos) return std::nullopt;
    const auto begin = parse_number(std::string_view(text).substr(0, c1));
    const auto end = parse_number(std::string_view(text).substr(c1 + 1, c2 - c1 - 1));
    const std::string path = text.substr(c2 + 1);
    if (!begin || !end || *begin > 0xFFFFFFFFu || *end > 0xFFFFFFFFu || path.empty()) return std::nullopt;
    return SignatureSpec{static_cast<uint32_t>(*begin), static_cast<uint32_t>(*end), path};
}

std::optional<uint32_t> parse_hex_pc(std::string_view text) {
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) text.remove_prefix(2);
    const auto v = parse_number(fmt::format("0x{}", text));
    if (!v || *v > 0xFFFFFFFFu) return std::nullopt;
    return static_cast<uint32_t>(*v);
}

UsageError usage(const CLI::App& app, const std::string& message) {
    return UsageError{fmt::format("error: {}\n\n{}", message, app.help()), 1};
}

} // namespace

std::variant<SimConfig, UsageError> parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Whole-SoC simulator for an RV32IMAC_Zicsr_Zifencei microcontroller", "rvsoc"};
    app.set_help_flag("-h,--help", "Print this help and exit");

    SimConfig cfg;
    std::string mem_size, cycle_ns, log_level = "error", log_file, trace_sink = "stdout", max_instr, max_time, pc,
                                    ebreak = "halt", signature, stats_file, cycle_table;

    app.add_option("-f,--hex", cfg.hex_path, "Intel HEX image to load")->required();
    app.add_option("--mem-size", mem_size, "RAM size in bytes (default 16 MiB)");
    app.add_option("--cycle-ns", cycle_ns, "Nanoseconds per cycle (default 10)");
    app.add_option("-L,--log-level", log_level, "none|error|info|debug|trace (or 0-4)");
    app.add_option("--log-file", log_file, "Log file path (default: standard error)");
    app.add_option("--trace-sink", trace_sink, "stdout|file:PATH|capture");
    app.add_option("--max-instr", max_instr, "Stop after N retired instructions");
    app.add_option("--max-time-ns", max_time, "Stop once simulated time reaches N ns");
    app.add_option("--pc", pc, "Entry pc (hex) for images without a start record");
    app.add_option("--ebreak", ebreak, "halt|trap");
    app.add_option("--signature", signature, "BEGIN,END,PATH: dump [BEGIN,END) as hex words");
    app.add_flag("--strict-align", cfg.strict_align, "Trap on misaligned accesses; bus errors are fatal");
    app.add_option("--stats-file", stats_file, "Write key=value statistics to PATH");
    app.add_option("--cycle-table", cycle_table, "File of mnemonic=cycles lines");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return UsageError{app.help(), 0};
    } catch (const CLI::ParseError& e) {
        return usage(app, e.what());
    }

    auto number = [](const std::string& text, uint64_t max) -> std::optional<uint64_t> {
        const auto v = parse_number(text);
        if (!v || *v > max) return std::nullopt;
        return v;
    };

    if (!mem_size.empty()) {
        const auto v = number(mem_size, 0xFFFFFFFFu);
        if (!v) return usage(app, fmt::format("invalid --mem-size '{}'", mem_size));
        cfg.mem_size = static_cast<uint32_t>(*v);
    }
    if (!cycle_ns.empty()) {
        const auto v = number(cycle_ns, ~uint64_t{0});
        if (!v || *v == 0) return usage(app, fmt::format("invalid --cycle-ns '{}'", cycle_ns));
        cfg.cycle_ns = *v;
    }
    if (const auto lvl = obs::parse_log_level(log_level))
        cfg.log_level = *lvl;
    else
        return usage(app, fmt::format("invalid --log-level '{}'", log_level));
    if (!log_file.empty()) cfg.log_path = log_file;
    if (const auto sink = periph::TraceSinkSpec::parse(trace_sink))
        cfg.trace_sink = *sink;
    else
        return usage(app, fmt::format("invalid --trace-sink '{}'", trace_sink));
    if (!max_instr.empty()) {
        cfg.max_instructions = parse_number(max_instr);
        if (!cfg.max_instructions) return usage(app, fmt::format("invalid --max-instr '{}'", max_instr));
    }
    if (!max_time.empty()) {
        cfg.max_sim_time_ns = parse_number(max_time);
        if (!cfg.max_sim_time_ns) return usage(app, fmt::format("invalid --max-time-ns '{}'", max_time));
    }
    if (!pc.empty()) {
        cfg.entry_pc_override = parse_hex_pc(pc);
        if (!cfg.entry_pc_override) return usage(app, fmt::format("invalid --pc '{}'", pc));
    }
    if (ebreak == "halt")
        cfg.ebreak_mode = core::EbreakMode::Halt;
    else if (ebreak == "trap")
        cfg.ebreak_mode = core::EbreakMode::Trap;
    else
        return usage(app, fmt::format("invalid --ebreak '{}' (expected halt or trap)", ebreak));
    if (!signature.empty()) {
        cfg.signature = parse_signature(signature);
        if (!cfg.signature) return usage(app, fmt::format("invalid --signature '{}'", signature));
    }
    if (!stats_file.empty()) cfg.stats_path = stats_file;
    if (!cycle_table.empty()) {
        std::ifstream in(cycle_table);
        if (!in) return usage(app, fmt::format("cannot read --cycle-table '{}'", cycle_table));
        std::ostringstream ss;
        ss << in.rdbuf();
        try {
            cfg.cycle_table = parse_cycle_table(ss.str());
        } catch (const ConfigError& e) {
            return usage(app, e.what());
        }
    }
    return cfg;
}

} // namespace rvsoc::sim
