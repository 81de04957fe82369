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
#include <span>
#include <vector>

namespace rvsoc::memory {

/// Zero-initialized RAM serving both instruction and data accesses.
class Ram final : public bus::Target {
public:
    explicit Ram(uint32_t size) : bytes_(size, 0) {}

    uint32_t size() const { return static_cast<uint32_t>(bytes_.size()); }

    /// False when [offset, offset + out.size()) leaves the RAM.
    bool read(uint32_t offset, std::span<uint8_t> out) const;
    bool write(uint32_t offset, std::span<const uint8_t> in);

    std::span<const uint8_t> contents() const { return bytes_; }
    void clear();

    void transport(bus::BusTransaction& txn, uint32_t offset) override;
    bool grants_direct_access() const override { return true; }
    std::span<uint8_t> direct_storage() override { return bytes_; }

private:
    bool in_range(uint32_t offset, std::size_t length) const {
        return static_cast<uint64_t>(offset) + length <= bytes_.size();
    }

    std::vector<uint8_t> bytes_;
};

} // namespace rvsoc::memory
