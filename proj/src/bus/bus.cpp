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

#include "rvsoc/bus/bus.hpp"

#include <algorithm>

namespace rvsoc::bus {

RegisterResult Bus::register_target(AddressRange range) {
    if (range.size == 0 || range.target == nullptr) return RegisterResult::Empty;
    const auto pos = std::lower_bound(ranges_.begin(), ranges_.end(), range.base,
                                      [](const AddressRange& r, uint32_t base) { return r.base < base; });
    if (pos != ranges_.end() && pos->base < range.end()) return RegisterResult::Overlap;
    if (pos != ranges_.begin() && std::prev(pos)->end() > range.base) return RegisterResult::Overlap;
    ranges_.insert(pos, std::move(range));
    return RegisterResult::Ok;
}

const AddressRange* Bus::find(uint32_t address) const {
    auto it = std::upper_bound(ranges_.begin(), ranges_.end(), address,
                               [](uint32_t a, const AddressRange& r) { return a < r.base; });
    if (it == ranges_.begin()) return nullptr;
    --it;
    return it->contains(address) ? &*it : nullptr;
}

void Bus::route(BusTransaction& txn) {
    if (counters_ != nullptr) {
        if (txn.command == Command::Read)
            ++counters_->memory_reads;
        else
            ++counters_->memory_writes;
    }
    const AddressRange* r = find(txn.address);
    if (r == nullptr) {
        txn.response = Response::AddressDecodeError;
        return;
    }
    txn.response = Response::Incomplete;
    r->target->transport(txn, txn.address - r->base);
    if (txn.response == Response::Incomplete) txn.response = Response::TargetError;
}

std::optional<DirectMemoryHandle> Bus::direct_access(uint32_t address, uint32_t length) const {
    const AddressRange* r = find(address);
    if (r == nullptr || !r->target->grants_direct_access()) return std::nullopt;
    if (static_cast<uint64_t>(address) + length > r->end()) return std::nullopt;
    auto storage = r->target->direct_storage();
    if (storage.size() < r->size) return std::nullopt;
    return DirectMemoryHandle{r->base, storage.first(r->size)};
}

} // namespace rvsoc::bus
