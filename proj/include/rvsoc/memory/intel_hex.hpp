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

#include "rvsoc/memory/ram.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rvsoc::memory {

enum class HexErrorKind { ChecksumMismatch, MalformedRecord, AddressOutOfRange, MissingEof };

std::string_view hex_error_name(HexErrorKind kind);

class HexError : public std::runtime_error {
public:
    HexError(HexErrorKind kind, std::size_t line, const std::string& detail);

    HexErrorKind kind() const { return kind_; }
    /// 1-based line of the offending record.
    std::size_t line() const { return line_; }

private:
    HexErrorKind kind_;
    std::size_t line_;
};

struct LoadResult {
    std::optional<uint32_t> entry_pc;
    uint64_t bytes_loaded = 0;
    std::vector<std::string> warnings;
};

/// Parses Intel HEX text into `ram`, which is mapped at bus address
/// `ram_base`. Records 00/01/02/03/04/05 are understood; a start address
/// (05, or 03 converted to CS*16+IP) becomes `entry_pc`. Throws HexError.
LoadResult load_hex(std::string_view text, Ram& ram, uint32_t ram_base = 0);

/// Reads the file and forwards to load_hex. Throws std::runtime_error when
/// the file cannot be read.
LoadResult load_hex_file(const std::string& path, Ram& ram, uint32_t ram_base = 0);

} // namespace rvsoc::memory
