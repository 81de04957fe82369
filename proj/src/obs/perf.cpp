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

#include "rvsoc/obs/perf.hpp"

#include <fmt/ostream.h>

#include <ostream>

namespace rvsoc::obs {

double PerfCounters::instructions_per_second() const {
    const double secs = std::chrono::duration<double>(host_elapsed).count();
    if (secs <= 0.0) return 0.0;
    return static_cast<double>(instructions) / secs;
}

bool PerfCounters::same_counts(const PerfCounters& o) const {
    return instructions == o.instructions && register_reads == o.register_reads &&
           register_writes == o.register_writes && memory_reads == o.memory_reads &&
           memory_writes == o.memory_writes && simulated_time_ns == o.simulated_time_ns;
}

void dump_stats(const PerfCounters& c, std::ostream& out) {
    const double secs = std::chrono::duration<double>(c.host_elapsed).count();
    fmt::print(out, "# Simulation statistics\n");
    fmt::print(out, "#   instructions executed : {}\n", c.instructions);
    fmt::print(out, "#   register reads        : {}\n", c.register_reads);
    fmt::print(out, "#   register writes       : {}\n", c.register_writes);
    fmt::print(out, "#   memory reads          : {}\n", c.memory_reads);
    fmt::print(out, "#   memory writes         : {}\n", c.memory_writes);
    fmt::print(out, "#   simulated time        : {} ns\n", c.simulated_time_ns);
    fmt::print(out, "#   host elapsed          : {:.6f} s\n", secs);
    fmt::print(out, "#   instructions / second : {:.0f}\n", c.instructions_per_second());
}

void write_stats_kv(const PerfCounters& c, std::ostream& out) {
    fmt::print(out, "instructions={}\n", c.instructions);
    fmt::print(out, "register_reads={}\n", c.register_reads);
    fmt::print(out, "register_writes={}\n", c.register_writes);
    fmt::print(out, "memory_reads={}\n", c.memory_reads);
    fmt::print(out, "memory_writes={}\n", c.memory_writes);
    fmt::print(out, "simulated_time_ns={}\n", c.simulated_time_ns);
    fmt::print(out, "host_elapsed_ns={}\n", c.host_elapsed.count());
    fmt::print(out, "instructions_per_second={:.0f}\n", c.instructions_per_second());
}

} // namespace rvsoc::obs
