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

#include <array>
#include <cstdint>
#include <span>

namespace rvsoc::bus {

enum class Command : uint8_t { Read, Write };

enum class Response : uint8_t { Incomplete, Ok, AddressDecodeError, TargetError };

/// A single initiator-to-target access. `length` is 1, 2, 4 or 8 and the
/// first `length` bytes of `data` carry the payload (little-endian for
/// multi-byte values).
struct BusTransaction {
    Command command = Command::Read;
    uint32_t address = 0;
    uint8_t length = 0;
    std::array<uint8_t, 8> data{};
    Response response = Response::Incomplete;

    static BusTransaction read(uint32_t address, uint8_t length) {
        BusTransaction t;
        t.command = Command::Read;
        t.address = address;
        t.length = length;
        return t;
    }

    static BusTransaction write(uint32_t address, uint8_t length, uint64_t value) {
        BusTransaction t;
        t.command = Command::Write;
        t.address = address;
        t.length = length;
        t.set_value(value);
        return t;
    }

    std::span<uint8_t> bytes() { return {data.data(), length}; }
    std::span<const uint8_t> bytes() const { return {data.data(), length}; }

    uint64_t value() const {
        uint64_t v = 0;
        for (unsigned i = 0; i < length; ++i) v |= static_cast<uint64_t>(data[i]) << (8 * i);
        return v;
    }

    void set_value(uint64_t v) {
        for (unsigned i = 0; i < length; ++i) data[i] = static_cast<uint8_t>(v >> (8 * i));
    }

    bool ok() const { return response == Response::Ok; }
};

/// Granted fast path into a target's backing store: `base` is the bus
/// address of `storage[0]`.
struct DirectMemoryHandle {
    uint32_t base = 0;
    std::span<uint8_t> storage;

    bool contains(uint32_t address, uint32_t length) const {
        const uint64_t off = static_cast<uint64_t>(address) - base;
        return address >= base && off + length <= storage.size();
    }
    uint8_t* at(uint32_t address) const { return storage.data() + (address - base); }
};

/// Something that answers bus transactions at target-relative offsets.
class Target {
public:
    virtual ~Target() = default;

    /// Completes `txn` and sets its response. `offset` is relative to the
    /// base the target was registered at.
    virtual void transport(BusTransaction& txn, uint32_t offset) = 0;

    /// Devices with side effects deny direct access.
    virtual bool grants_direct_access() const { return false; }
    virtual std::span<uint8_t> direct_storage() { return {}; }
};

} // namespace rvsoc::bus
