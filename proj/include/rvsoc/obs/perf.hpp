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

#include <chrono>
#include <cstdint>
#include <iosfwd>

namespace rvsoc::obs {

/// Simulation statistics. Counters only grow during a run; `instructions`
/// tracks minstret exactly.
struct PerfCounters {
    uint64_t instructions = 0;
    uint64_t register_reads = 0;
    uint64_t register_writes = 0;
    uint64_t memory_reads = 0;
    uint64_t memory_writes = 0;
    uint64_t simulated_time_ns = 0;
    std::chrono::nanoseconds host_elapsed{0};

    double instructions_per_second() const;

    // Host time is excluded: it is the only non-deterministic field.
    bool same_counts(const PerfCounters& other) const;
};

/// Human-readable block, one field per line.
void dump_stats(const PerfCounters& counters, std::ostream& out);

/// Machine-readable `key=value` lines.
void write_stats_kv(const PerfCounters& counters, std::ostream& out);

} // namespace rvsoc::obs
