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

#include "rvsoc/memory/ram.hpp"

#include <algorithm>

namespace rvsoc::memory {

bool Ram::read(uint32_t offset, std::span<uint8_t> out) const {
    if (!in_range(offset, out.size())) return false;
    std::copy_n(bytes_.begin() + offset, out.size(), out.begin());
    return true;
}

bool Ram::write(uint32_t offset, std::span<const uint8_t> in) {
    if (!in_range(offset, in.size())) return false;
    std::copy(in.begin(), in.end(), bytes_.begin() + offset);
    return true;
}

void Ram::clear() { std::fill(bytes_.begin(), bytes_.end(), uint8_t{0}); }

void Ram::transport(bus::BusTransaction& txn, uint32_t offset) {
    const bool ok = txn.command == bus::Command::Read ? read(offset, txn.bytes()) : write(offset, txn.bytes());
    txn.response = ok ? bus::Response::Ok : bus::Response::TargetError;
}

} // namespace rvsoc::memory
