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

#include "rvsoc/bus/bus.hpp"
#include "rvsoc/core/executor.hpp"
#include "rvsoc/hart/hart_state.hpp"
#include "rvsoc/memory/intel_hex.hpp"
#include "rvsoc/memory/ram.hpp"
#include "rvsoc/obs/logger.hpp"
#include "rvsoc/obs/perf.hpp"
#include "rvsoc/periph/timer.hpp"
#include "rvsoc/periph/trace.hpp"
#include "rvsoc/sim/config.hpp"

#include <memory>
#include <optional>
#include <string_view>

namespace rvsoc::sim {

struct RunResult {
    core::HaltReason reason = core::HaltReason::Ebreak;
    ExitStatus status = ExitStatus::Normal;
};

/// The whole SoC: hart, bus, RAM, timer and trace, wired per the memory
/// map. The owner drives it with load / reset / run.
class Soc {
public:
    /// Builds and wires the components. Opens the log file and trace sink
    /// named in `config`; throws ConfigError or obs::LogIoError.
    explicit Soc(SimConfig config);
    Soc(const Soc&) = delete;
    Soc& operator=(const Soc&) = delete;

    memory::LoadResult load_hex_text(std::string_view text);
    memory::LoadResult load_hex_file(const std::string& path);

    /// Applies reset state. The entry pc comes from the loaded image's
    /// start record, else the configured override, else the RAM base.
    void reset();

    /// Runs until EBREAK, a budget, or a fatal bus error.
    RunResult run();

    /// Counters including accesses made through the direct path.
    obs::PerfCounters counters();

    const SimConfig& config() const { return config_; }
    hart::HartState& hart() { return hart_; }
    bus::Bus& bus() { return bus_; }
    memory::Ram& ram() { return ram_; }
    periph::Timer& timer() { return timer_; }
    periph::Trace& trace() { return *trace_; }
    obs::Logger& logger() { return logger_; }
    core::Executor& executor() { return *executor_; }

private:
    void log_snapshot(std::string_view what, uint32_t pc);

    SimConfig config_;
    obs::PerfCounters counters_;
    obs::Logger logger_;
    memory::Ram ram_;
    periph::Timer timer_;
    std::unique_ptr<periph::Trace> trace_;
    bus::Bus bus_;
    hart::HartState hart_;
    std::unique_ptr<core::Executor> executor_;
    std::optional<uint32_t> image_entry_;
};

/// Full batch run from a configuration: load, reset, run, then statistics,
/// stats file and signature. Diagnostics go to `err`.
ExitStatus run_simulation(const SimConfig& config, std::ostream& err);

} // namespace rvsoc::sim
