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

#include "rvsoc/periph/timer.hpp"

namespace rvsoc::periph {

void Timer::transport(bus::BusTransaction& txn, uint32_t offset) {
    if (txn.length != 4 || (offset & 0x3u) != 0 || offset >= kSize) {
        txn.response = bus::Response::TargetError;
        return;
    }
    const unsigned shift = (offset & 0x4u) ? 32 : 0;
    const bool is_cmp = offset >= 0x8;

    if (txn.command == bus::Command::Read) {
        const uint64_t reg = is_cmp ? mtimecmp_ : mtime_;
        txn.set_value(static_cast<uint32_t>(reg >> shift));
        txn.response = bus::Response::Ok;
        return;
    }
    if (!is_cmp) {
        txn.response = bus::Response::TargetError;
        return;
    }
    const uint64_t keep = shift ? 0x00000000FFFFFFFFull : 0xFFFFFFFF00000000ull;
    mtimecmp_ = (mtimecmp_ & keep) | (static_cast<uint64_t>(static_cast<uint32_t>(txn.value())) << shift);
    txn.response = bus::Response::Ok;
}

} // namespace rvsoc::periph
