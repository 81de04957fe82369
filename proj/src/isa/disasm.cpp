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

#include "rvsoc/isa/decoder.hpp"

#include <fmt/format.h>

namespace rvsoc::isa {

std::string disassemble(const DecodedInstruction& d) {
    const auto name = mnemonic_name(d.mnemonic);
    using M = Mnemonic;
    switch (d.mnemonic) {
    case M::Illegal: return fmt::format("illegal 0x{:x}", d.raw);
    case M::Lui:
    case M::Auipc:
        return fmt::format("{} x{}, 0x{:x}", name, d.rd, static_cast<uint32_t>(d.imm) >> 12);
    case M::Jal: return fmt::format("{} x{}, {}", name, d.rd, d.imm);
    case M::Jalr:
    case M::Lb:
    case M::Lh:
    case M::Lw:
    case M::Lbu:
    case M::Lhu: return fmt::format("{} x{}, {}(x{})", name, d.rd, d.imm, d.rs1);
    case M::Sb:
    case M::Sh:
    case M::Sw: return fmt::format("{} x{}, {}(x{})", name, d.rs2, d.imm, d.rs1);
    case M::Beq:
    case M::Bne:
    case M::Blt:
    case M::Bge:
    case M::Bltu:
    case M::Bgeu: return fmt::format("{} x{}, x{}, {}", name, d.rs1, d.rs2, d.imm);
    case M::Addi:
    case M::Slti:
    case M::Sltiu:
    case M::Xori:
    case M::Ori:
    case M::Andi:
    case M::Slli:
    case M::Srli:
    case M::Srai: return fmt::format("{} x{}, x{}, {}", name, d.rd, d.rs1, d.imm);
    case M::Fence:
    case M::FenceI:
    case M::Ecall:
    case M::Ebreak:
    case M::Mret:
    case M::Wfi: return std::string(name);
    case M::Csrrw:
    case M::Csrrs:
    case M::Csrrc: return fmt::format("{} x{}, 0x{:03x}, x{}", name, d.rd, d.csr, d.rs1);
    case M::Csrrwi:
    case M::Csrrsi:
    case M::Csrrci: return fmt::format("{} x{}, 0x{:03x}, {}", name, d.rd, d.csr, d.imm);
    case M::LrW: return fmt::format("{} x{}, (x{})", name, d.rd, d.rs1);
    case M::ScW:
    case M::AmoswapW:
    case M::AmoaddW:
    case M::AmoxorW:
    case M::AmoandW:
    case M::AmoorW:
    case M::AmominW:
    case M::AmomaxW:
    case M::AmominuW:
    case M::AmomaxuW: return fmt::format("{} x{}, x{}, (x{})", name, d.rd, d.rs2, d.rs1);
    default: return fmt::format("{} x{}, x{}, x{}", name, d.rd, d.rs1, d.rs2);
    }
}

} // namespace rvsoc::isa
