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

#include "rvsoc/sim/signature.hpp"

#include "rvsoc/sim/config.hpp"

#include <fmt/format.h>

#include <fstream>
#include <ostream>

namespace rvsoc::sim {

void dump_signature(const memory::Ram& ram, uint32_t ram_base, uint32_t begin, uint32_t end, std::ostream& out) {
    if ((begin & 3u) != 0 || (end & 3u) != 0) throw ConfigError("signature bounds must be word-aligned");
    if (begin > end) throw ConfigError("signature begin is above its end");
    if (begin < ram_base || static_cast<uint64_t>(end) - ram_base > ram.size())
        throw ConfigError("signature range lies outside RAM");

    const auto bytes = ram.contents();
    fmt::memory_buffer buf;
    for (uint32_t a = begin - ram_base; a < end - ram_base; a += 4) {
        const uint32_t word = static_cast<uint32_t>(bytes[a]) | (static_cast<uint32_t>(bytes[a + 1]) << 8) |
                              (static_cast<uint32_t>(bytes[a + 2]) << 16) | (static_cast<uint32_t>(bytes[a + 3]) << 24);
        fmt::format_to(std::back_inserter(buf), "{:08x}\n", word);
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void dump_signature_file(const memory::Ram& ram, uint32_t ram_base, uint32_t begin, uint32_t end,
                         const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError(fmt::format("cannot write signature file '{}'", path));
    dump_signature(ram, ram_base, begin, end, out);
    out.flush();
    if (!out) throw ConfigError(fmt::format("cannot write signature file '{}'", path));
}

} // namespace rvsoc::sim
