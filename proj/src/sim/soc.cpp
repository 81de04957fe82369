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

#include "rvsoc/sim/soc.hpp"

#include "rvsoc/sim/signature.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace rvsoc::sim {

namespace {

void register_or_throw(bus::Bus& bus, bus::AddressRange range) {
    const std::string name = range.name;
    if (bus.register_target(std::move(range)) != bus::RegisterResult::Ok)
        throw ConfigError(fmt::format("cannot map {} on the bus", name));
}

SimConfig validated(SimConfig c) {
    c.validate();
    return c;
}

} // namespace

Soc::Soc(SimConfig config) : config_(validated(std::move(config))), ram_(config_.mem_size) {
    logger_.set_level(config_.log_level);
    if (config_.log_path)
        logger_.open_file(*config_.log_path);
    else if (config_.log_level != obs::LogLevel::None)
        logger_.attach_stream(std::cerr);

    try {
        trace_ = std::make_unique<periph::Trace>(config_.trace_sink);
    } catch (const std::runtime_error& e) {
        throw ConfigError(e.what());
    }
    trace_->on_warning([this](std::string_view msg) {
        logger_.log(obs::LogLevel::Error, timer_.mtime(), fmt::format("warning: {}", msg));
    });

    bus_.attach_counters(&counters_);
    register_or_throw(bus_, {memory_map::kRamBase, config_.mem_size, &ram_, "ram"});
    register_or_throw(bus_, {memory_map::kTraceBase, periph::Trace::kSize, trace_.get(), "trace"});
    register_or_throw(bus_, {memory_map::kTimerBase, periph::Timer::kSize, &timer_, "timer"});

    hart_.attach_counters(&counters_);
    hart_.attach_timer(&timer_);

    // Harvard ports over one routing table: both ports are the same bus.
    executor_ = std::make_unique<core::Executor>(hart_, bus_, bus_, timer_, logger_, config_.executor_config());
    executor_->acquire_direct_access(memory_map::kRamBase);
    executor_->on_ecall([this](uint32_t pc) { log_snapshot("ecall", pc); });
}

memory::LoadResult Soc::load_hex_text(std::string_view text) {
    auto r = memory::load_hex(text, ram_, memory_map::kRamBase);
    image_entry_ = r.entry_pc;
    for (const auto& w : r.warnings) logger_.log(obs::LogLevel::Error, 0, fmt::format("warning: {}", w));
    logger_.log(obs::LogLevel::Info, 0, fmt::format("loaded {} bytes", r.bytes_loaded));
    return r;
}

memory::LoadResult Soc::load_hex_file(const std::string& path) {
    auto r = memory::load_hex_file(path, ram_, memory_map::kRamBase);
    image_entry_ = r.entry_pc;
    for (const auto& w : r.warnings) logger_.log(obs::LogLevel::Error, 0, fmt::format("warning: {}", w));
    logger_.log(obs::LogLevel::Info, 0, fmt::format("loaded {} bytes from {}", r.bytes_loaded, path));
    return r;
}

void Soc::reset() {
    uint32_t pc = 0;
    if (image_entry_) {
        pc = *image_entry_;
        if (config_.entry_pc_override && *config_.entry_pc_override != pc)
            logger_.log(obs::LogLevel::Info, 0,
                        fmt::format("image start address {:08x} takes precedence over --pc {:08x}", pc,
                                    *config_.entry_pc_override));
    } else if (config_.entry_pc_override) {
        pc = *config_.entry_pc_override;
    } else if (bus_.find(memory_map::kRamBase) != nullptr) {
        pc = memory_map::kRamBase;
    } else {
        throw ConfigError("no entry pc: the image has no start record and --pc was not given");
    }
    if ((pc & 1u) != 0) throw ConfigError(fmt::format("entry pc {:08x} is not 2-byte aligned", pc));

    hart_.reset(pc);
    const uint64_t top = static_cast<uint64_t>(memory_map::kRamBase) + config_.mem_size - 16;
    hart_.write_gpr(2, static_cast<uint32_t>(top & ~uint64_t{0xF}));
    timer_.reset();
    obs::PerfCounters discarded;
    executor_->reconcile_counters(discarded);
    counters_ = {};
    logger_.log(obs::LogLevel::Info, 0, fmt::format("reset: pc={:08x} sp={:08x}", hart_.pc(), hart_.gpr(2)));
}

obs::PerfCounters Soc::counters() {
    executor_->reconcile_counters(counters_);
    counters_.simulated_time_ns = timer_.mtime();
    return counters_;
}

void Soc::log_snapshot(std::string_view what, uint32_t pc) {
    if (!logger_.enabled(obs::LogLevel::Info)) return;
    const auto c = counters();
    logger_.log(obs::LogLevel::Info, timer_.mtime(),
                fmt::format("{} at {:08x}: instructions={} register_reads={} register_writes={} memory_reads={} "
                            "memory_writes={}",
                            what, pc, c.instructions, c.register_reads, c.register_writes, c.memory_reads,
                            c.memory_writes));
}

RunResult Soc::run() {
    const auto start = std::chrono::steady_clock::now();
    RunResult result;
    const uint64_t max_instr = config_.max_instructions.value_or(~uint64_t{0});
    const uint64_t max_time = config_.max_sim_time_ns.value_or(~uint64_t{0});
    auto& exec = *executor_;

    for (;;) {
        if (hart_.instret() >= max_instr) {
            result.reason = core::HaltReason::InstructionBudget;
            break;
        }
        if (timer_.mtime() >= max_time) {
            result.reason = core::HaltReason::TimeBudget;
            break;
        }
        const auto outcome = exec.step();
        if (outcome.is_halted()) {
            result.reason = outcome.halt;
            break;
        }
    }

    counters_.host_elapsed += std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    result.status =
        result.reason == core::HaltReason::FatalBusError ? ExitStatus::FatalGuestError : ExitStatus::Normal;
    log_snapshot(core::halt_reason_name(result.reason), hart_.pc());
    logger_.flush();
    trace_->flush();
    return result;
}

ExitStatus run_simulation(const SimConfig& config, std::ostream& err) {
    try {
        Soc soc(config);
        try {
            soc.load_hex_file(config.hex_path);
        } catch (const std::exception& e) {
            fmt::print(err, "error: {}\n", e.what());
            return ExitStatus::ConfigOrLoadError;
        }
        soc.reset();
        const RunResult r = soc.run();

        const auto counters = soc.counters();
        fmt::print(err, "# Simulation halted: {} at pc {:08x}\n", core::halt_reason_name(r.reason), soc.hart().pc());
        obs::dump_stats(counters, err);
        if (config.stats_path) {
            std::ofstream out(*config.stats_path, std::ios::trunc);
            if (!out) throw ConfigError(fmt::format("cannot write stats file '{}'", *config.stats_path));
            obs::write_stats_kv(counters, out);
        }
        if (config.signature)
            dump_signature_file(soc.ram(), memory_map::kRamBase, config.signature->begin, config.signature->end,
                                config.signature->out_path);
        if (config.trace_sink.kind == periph::TraceSinkSpec::Kind::Capture) {
            const auto& captured = soc.trace().captured();
            std::fwrite(captured.data(), 1, captured.size(), stdout);
            std::fflush(stdout);
        }
        return r.status;
    } catch (const obs::LogIoError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return ExitStatus::LogIoFailure;
    } catch (const std::exception& e) {
        fmt::print(err, "error: {}\n", e.what());
        return ExitStatus::ConfigOrLoadError;
    }
}

} // namespace rvsoc::sim
