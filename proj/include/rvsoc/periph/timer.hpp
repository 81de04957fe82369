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

#include <cstdint>

namespace rvsoc::periph {

/// Machine timer: 64-bit mtime (simulated nanoseconds) and mtimecmp,
/// exposed as four 32-bit registers.
///
///   +0x0  mtime[31:0]      read-only
///   +0x4  mtime[63:32]     read-only
///   +0x8  mtimecmp[31:0]   read/write
///   +0xC  mtimecmp[63:32]  read/write
///
/// The interrupt line is level-sensitive: pending while mtime >= mtimecmp.
class Timer final : public bus::Target {
public:
    static constexpr uint32_t kSize = 0x10;
    static constexpr uint64_t kFarFuture = ~uint64_t{0};

    uint64_t mtime() const { return mtime_; }
    uint64_t mtimecmp() const { return mtimecmp_; }

    void tick(uint64_t elapsed_ns) { mtime_ += elapsed_ns; }
    /// Moves time forward to `t`; never backwards.
    void advance_to(uint64_t t) {
        if (t > mtime_) mtime_ = t;
    }
    void set_mtimecmp(uint64_t value) { mtimecmp_ = value; }

    bool irq_pending() const { return mtime_ >= mtimecmp_; }

    void reset() {
        mtime_ = 0;
        mtimecmp_ = kFarFuture;
    }

    void transport(bus::BusTransaction& txn, uint32_t offset) override;

private:
    uint64_t mtime_ = 0;
    uint64_t mtimecmp_ = kFarFuture;
};

} // namespace rvsoc::periph
