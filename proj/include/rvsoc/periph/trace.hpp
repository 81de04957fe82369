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

#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace rvsoc::periph {

/// Where trace bytes go. Parsed from `stdout`, `file:PATH` or `capture`.
struct TraceSinkSpec {
    enum class Kind { Stdout, File, Capture };
    Kind kind = Kind::Stdout;
    std::string path;

    static std::optional<TraceSinkSpec> parse(std::string_view text);
    friend bool operator==(const TraceSinkSpec&, const TraceSinkSpec&) = default;
};

/// Write-only byte port: each 1-byte write at offset 0 is forwarded,
/// unmodified and in order, to the sink.
class Trace final : public bus::Target {
public:
    static constexpr uint32_t kSize = 4;

    Trace() = default;
    explicit Trace(const TraceSinkSpec& spec);
    ~Trace() override;
    Trace(const Trace&) = delete;
    Trace& operator=(const Trace&) = delete;

    /// Called on sink I/O failure; the guest still sees the write succeed.
    void on_warning(std::function<void(std::string_view)> fn) { warn_ = std::move(fn); }

    void write_byte(uint8_t byte);
    const std::string& captured() const { return captured_; }
    const TraceSinkSpec& spec() const { return spec_; }
    void flush();

    void transport(bus::BusTransaction& txn, uint32_t offset) override;

private:
    TraceSinkSpec spec_;
    std::FILE* file_ = nullptr;
    std::string captured_;
    std::function<void(std::string_view)> warn_;
    bool failed_ = false;
};

} // namespace rvsoc::periph
