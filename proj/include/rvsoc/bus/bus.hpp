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

#include "rvsoc/bus/transaction.hpp"
#include "rvsoc/obs/perf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rvsoc::bus {

struct AddressRange {
    uint32_t base = 0;
    uint32_t size = 0;
    Target* target = nullptr;
    std::string name;

    uint64_t end() const { return static_cast<uint64_t>(base) + size; }
    bool contains(uint32_t address) const { return address >= base && address < end(); }
};

enum class RegisterResult { Ok, Overlap, Empty };

/// Address decoder shared by the instruction and data ports.
class Bus {
public:
    /// Routed accesses are counted into `counters` when it is set.
    void attach_counters(obs::PerfCounters* counters) { counters_ = counters; }

    RegisterResult register_target(AddressRange range);

    /// Dispatches to the unique covering target, or answers
    /// AddressDecodeError. Always leaves a final response.
    void route(BusTransaction& txn);

    /// Grants the whole backing store of the target covering
    /// [address, address + length) when that target allows it.
    std::optional<DirectMemoryHandle> direct_access(uint32_t address, uint32_t length = 1) const;

    const AddressRange* find(uint32_t address) const;
    const std::vector<AddressRange>& ranges() const { return ranges_; }

private:
    std::vector<AddressRange> ranges_; // sorted by base, pairwise disjoint
    obs::PerfCounters* counters_ = nullptr;
};

} // namespace rvsoc::bus
