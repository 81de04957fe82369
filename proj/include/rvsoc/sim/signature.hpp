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
#include <iosfwd>
#include <string>

namespace rvsoc::sim {

/// Writes one line per 32-bit word in [begin, end): eight lowercase hex
/// digits of the little-endian word and a newline. `begin`/`end` are bus
/// addresses and `ram_base` is where the RAM is mapped. Throws ConfigError
/// on misaligned or out-of-range bounds.
void dump_signature(const memory::Ram& ram, uint32_t ram_base, uint32_t begin, uint32_t end, std::ostream& out);

/// Same, into a file. Throws ConfigError when the file cannot be written.
void dump_signature_file(const memory::Ram& ram, uint32_t ram_base, uint32_t begin, uint32_t end,
                         const std::string& path);

} // namespace rvsoc::sim
