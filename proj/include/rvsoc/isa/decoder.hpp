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

#include <cstdint>
#include <string>
#include <string_view>

namespace rvsoc::isa {

enum class Format : uint8_t { R, I, S, B, U, J, Compressed };

// Operation identifiers for RV32IMAC_Zicsr_Zifencei. Compressed encodings
// are expanded onto the 32-bit mnemonic they stand for.
enum class Mnemonic : uint8_t {
    Illegal,
    // RV32I
    Lui, Auipc, Jal, Jalr,
    Beq, Bne, Blt, Bge, Bltu, Bgeu,
    Lb, Lh, Lw, Lbu, Lhu,
    Sb, Sh, Sw,
    Addi, Slti, Sltiu, Xori, Ori, Andi, Slli, Srli, Srai,
    Add, Sub, Sll, Slt, Sltu, Xor, Srl, Sra, Or, And,
    Fence, Ecall, Ebreak,
    // Zifencei
    FenceI,
    // privileged
    Mret, Wfi,
    // Zicsr
    Csrrw, Csrrs, Csrrc, Csrrwi, Csrrsi, Csrrci,
    // M
    Mul, Mulh, Mulhsu, Mulhu, Div, Divu, Rem, Remu,
    // A
    LrW, ScW, AmoswapW, AmoaddW, AmoxorW, AmoandW, AmoorW,
    AmominW, AmomaxW, AmominuW, AmomaxuW,
    Count_
};

inline constexpr std::size_t kMnemonicCount = static_cast<std::size_t>(Mnemonic::Count_);

std::string_view mnemonic_name(Mnemonic m);

struct DecodedInstruction {
    Mnemonic mnemonic = Mnemonic::Illegal;
    Format format = Format::R;
    uint8_t rd = 0;
    uint8_t rs1 = 0;
    uint8_t rs2 = 0;
    int32_t imm = 0;
    uint16_t csr = 0;
    uint32_t raw = 0;

    bool legal() const { return mnemonic != Mnemonic::Illegal; }
    bool compressed() const { return format == Format::Compressed; }
    // Encoding width in bytes; the pc advances by this much.
    uint32_t length() const { return compressed() ? 2u : 4u; }

    friend bool operator==(const DecodedInstruction&, const DecodedInstruction&) = default;
};

/// True when the low two bits mark a 16-bit encoding.
constexpr bool is_compressed(uint32_t bits) { return (bits & 0x3u) != 0x3u; }

/// Sign-extended immediate of a 32-bit encoding in the given format.
/// R and Compressed have no immediate field and yield 0.
int32_t extract_immediate(uint32_t word, Format format);

/// Decodes a 32-bit encoding. Undefined encodings produce a value whose
/// mnemonic is Illegal; the function never fails.
DecodedInstruction decode32(uint32_t word);

/// Expands a 16-bit RVC encoding into its 32-bit equivalent, tagged
/// Format::Compressed. Reserved and F/D-only encodings are Illegal.
DecodedInstruction expand_compressed(uint16_t halfword);

/// Dispatches to expand_compressed or decode32 on the low two bits.
inline DecodedInstruction decode(uint32_t bits) {
    return is_compressed(bits) ? expand_compressed(static_cast<uint16_t>(bits)) : decode32(bits);
}

/// Assembly text such as "addi x1, x0, 5" or "lw x5, -4(x2)".
std::string disassemble(const DecodedInstruction& instr);

} // namespace rvsoc::isa
