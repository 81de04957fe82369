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

#include <array>

namespace rvsoc::isa {

namespace {

constexpr uint32_t bits(uint32_t w, unsigned hi, unsigned lo) {
    return (w >> lo) & ((1u << (hi - lo + 1)) - 1u);
}

constexpr int32_t sign_extend(uint32_t value, unsigned width) {
    const uint32_t m = 1u << (width - 1);
    return static_cast<int32_t>((value ^ m) - m);
}

namespace opcode {
constexpr uint32_t Load = 0x03;
constexpr uint32_t MiscMem = 0x0F;
constexpr uint32_t OpImm = 0x13;
constexpr uint32_t Auipc = 0x17;
constexpr uint32_t Store = 0x23;
constexpr uint32_t Amo = 0x2F;
constexpr uint32_t Op = 0x33;
constexpr uint32_t Lui = 0x37;
constexpr uint32_t Branch = 0x63;
constexpr uint32_t Jalr = 0x67;
constexpr uint32_t Jal = 0x6F;
constexpr uint32_t System = 0x73;
} // namespace opcode

constexpr std::array<std::string_view, kMnemonicCount> kNames = {
    "illegal",
    "lui", "auipc", "jal", "jalr",
    "beq", "bne", "blt", "bge", "bltu", "bgeu",
    "lb", "lh", "lw", "lbu", "lhu",
    "sb", "sh", "sw",
    "addi", "slti", "sltiu", "xori", "ori", "andi", "slli", "srli", "srai",
    "add", "sub", "sll", "slt", "sltu", "xor", "srl", "sra", "or", "and",
    "fence", "ecall", "ebreak",
    "fence.i",
    "mret", "wfi",
    "csrrw", "csrrs", "csrrc", "csrrwi", "csrrsi", "csrrci",
    "mul", "mulh", "mulhsu", "mulhu", "div", "divu", "rem", "remu",
    "lr.w", "sc.w", "amoswap.w", "amoadd.w", "amoxor.w", "amoand.w", "amoor.w",
    "amomin.w", "amomax.w", "amominu.w", "amomaxu.w",
};

Format format_of(uint32_t op) {
    switch (op) {
    case opcode::Lui:
    case opcode::Auipc: return Format::U;
    case opcode::Jal: return Format::J;
    case opcode::Branch: return Format::B;
    case opcode::Store: return Format::S;
    case opcode::Op:
    case opcode::Amo: return Format::R;
    default: return Format::I;
    }
}

Mnemonic decode_load(uint32_t f3) {
    switch (f3) {
    case 0: return Mnemonic::Lb;
    case 1: return Mnemonic::Lh;
    case 2: return Mnemonic::Lw;
    case 4: return Mnemonic::Lbu;
    case 5: return Mnemonic::Lhu;
    default: return Mnemonic::Illegal;
    }
}

Mnemonic decode_store(uint32_t f3) {
    switch (f3) {
    case 0: return Mnemonic::Sb;
    case 1: return Mnemonic::Sh;
    case 2: return Mnemonic::Sw;
    default: return Mnemonic::Illegal;
    }
}

Mnemonic decode_branch(uint32_t f3) {
    switch (f3) {
    case 0: return Mnemonic::Beq;
    case 1: return Mnemonic::Bne;
    case 4: return Mnemonic::Blt;
    case 5: return Mnemonic::Bge;
    case 6: return Mnemonic::Bltu;
    case 7: return Mnemonic::Bgeu;
    default: return Mnemonic::Illegal;
    }
}

Mnemonic decode_op_imm(uint32_t f3, uint32_t f7) {
    switch (f3) {
    case 0: return Mnemonic::Addi;
    case 1: return f7 == 0 ? Mnemonic::Slli : Mnemonic::Illegal;
    case 2: return Mnemonic::Slti;
    case 3: return Mnemonic::Sltiu;
    case 4: return Mnemonic::Xori;
    case 5:
        if (f7 == 0x00) return Mnemonic::Srli;
        if (f7 == 0x20) return Mnemonic::Srai;
        return Mnemonic::Illegal;
    case 6: return Mnemonic::Ori;
    default: return Mnemonic::Andi;
    }
}

Mnemonic decode_op(uint32_t f3, uint32_t f7) {
    if (f7 == 0x00) {
        constexpr std::array<Mnemonic, 8> base = {Mnemonic::Add, Mnemonic::Sll, Mnemonic::Slt, Mnemonic::Sltu,
                                                  Mnemonic::Xor, Mnemonic::Srl, Mnemonic::Or,  Mnemonic::And};
        return base[f3];
    }
    if (f7 == 0x01) {
        constexpr std::array<Mnemonic, 8> muldiv = {Mnemonic::Mul, Mnemonic::Mulh, Mnemonic::Mulhsu, Mnemonic::Mulhu,
                                                    Mnemonic::Div, Mnemonic::Divu, Mnemonic::Rem,    Mnemonic::Remu};
        return muldiv[f3];
    }
    if (f7 == 0x20) {
        if (f3 == 0) return Mnemonic::Sub;
        if (f3 == 5) return Mnemonic::Sra;
    }
    return Mnemonic::Illegal;
}

Mnemonic decode_amo(uint32_t f3, uint32_t f5, uint32_t rs2) {
    if (f3 != 2) return Mnemonic::Illegal;
    switch (f5) {
    case 0x02: return rs2 == 0 ? Mnemonic::LrW : Mnemonic::Illegal;
    case 0x03: return Mnemonic::ScW;
    case 0x01: return Mnemonic::AmoswapW;
    case 0x00: return Mnemonic::AmoaddW;
    case 0x04: return Mnemonic::AmoxorW;
    case 0x0C: return Mnemonic::AmoandW;
    case 0x08: return Mnemonic::AmoorW;
    case 0x10: return Mnemonic::AmominW;
    case 0x14: return Mnemonic::AmomaxW;
    case 0x18: return Mnemonic::AmominuW;
    case 0x1C: return Mnemonic::AmomaxuW;
    default: return Mnemonic::Illegal;
    }
}

Mnemonic decode_system(uint32_t word, uint32_t f3) {
    switch (f3) {
    case 0:
        switch (word) {
        case 0x00000073: return Mnemonic::Ecall;
        case 0x00100073: return Mnemonic::Ebreak;
        case 0x30200073: return Mnemonic::Mret;
        case 0x10500073: return Mnemonic::Wfi;
        default: return Mnemonic::Illegal;
        }
    case 1: return Mnemonic::Csrrw;
    case 2: return Mnemonic::Csrrs;
    case 3: return Mnemonic::Csrrc;
    case 5: return Mnemonic::Csrrwi;
    case 6: return Mnemonic::Csrrsi;
    case 7: return Mnemonic::Csrrci;
    default: return Mnemonic::Illegal;
    }
}

} // namespace

std::string_view mnemonic_name(Mnemonic m) {
    const auto i = static_cast<std::size_t>(m);
    return i < kNames.size() ? kNames[i] : "illegal";
}

int32_t extract_immediate(uint32_t w, Format format) {
    switch (format) {
    case Format::I: return sign_extend(bits(w, 31, 20), 12);
    case Format::S: return sign_extend((bits(w, 31, 25) << 5) | bits(w, 11, 7), 12);
    case Format::B:
        return sign_extend((bits(w, 31, 31) << 12) | (bits(w, 7, 7) << 11) | (bits(w, 30, 25) << 5) |
                               (bits(w, 11, 8) << 1),
                           13);
    case Format::U: return static_cast<int32_t>(w & 0xFFFFF000u);
    case Format::J:
        return sign_extend((bits(w, 31, 31) << 20) | (bits(w, 19, 12) << 12) | (bits(w, 20, 20) << 11) |
                               (bits(w, 30, 21) << 1),
                           21);
    case Format::R:
    case Format::Compressed: return 0;
    }
    return 0;
}

DecodedInstruction decode32(uint32_t word) {
    DecodedInstruction d;
    d.raw = word;
    const uint32_t op = bits(word, 6, 0);
    d.format = format_of(op);
    if ((op & 0x3u) != 0x3u) return d;

    d.rd = static_cast<uint8_t>(bits(word, 11, 7));
    d.rs1 = static_cast<uint8_t>(bits(word, 19, 15));
    d.rs2 = static_cast<uint8_t>(bits(word, 24, 20));
    const uint32_t f3 = bits(word, 14, 12);
    const uint32_t f7 = bits(word, 31, 25);

    Mnemonic m = Mnemonic::Illegal;
    switch (op) {
    case opcode::Lui: m = Mnemonic::Lui; break;
    case opcode::Auipc: m = Mnemonic::Auipc; break;
    case opcode::Jal: m = Mnemonic::Jal; break;
    case opcode::Jalr: m = f3 == 0 ? Mnemonic::Jalr : Mnemonic::Illegal; break;
    case opcode::Branch: m = decode_branch(f3); break;
    case opcode::Load: m = decode_load(f3); break;
    case opcode::Store: m = decode_store(f3); break;
    case opcode::OpImm: m = decode_op_imm(f3, f7); break;
    case opcode::Op: m = decode_op(f3, f7); break;
    case opcode::MiscMem:
        if (f3 == 0) m = Mnemonic::Fence;
        else if (f3 == 1) m = Mnemonic::FenceI;
        break;
    case opcode::System: m = decode_system(word, f3); break;
    case opcode::Amo: m = decode_amo(f3, bits(word, 31, 27), d.rs2); break;
    default: break;
    }
    d.mnemonic = m;
    if (m == Mnemonic::Illegal) return d;

    // Fields that the format does not carry are reported as zero.
    switch (d.format) {
    case Format::I: d.rs2 = 0; break;
    case Format::S:
    case Format::B: d.rd = 0; break;
    case Format::U:
    case Format::J: d.rs1 = d.rs2 = 0; break;
    default: break;
    }

    switch (m) {
    case Mnemonic::Slli:
    case Mnemonic::Srli:
    case Mnemonic::Srai: d.imm = static_cast<int32_t>(bits(word, 24, 20)); break;
    case Mnemonic::Csrrw:
    case Mnemonic::Csrrs:
    case Mnemonic::Csrrc:
        d.csr = static_cast<uint16_t>(bits(word, 31, 20));
        break;
    case Mnemonic::Csrrwi:
    case Mnemonic::Csrrsi:
    case Mnemonic::Csrrci:
        d.csr = static_cast<uint16_t>(bits(word, 31, 20));
        d.imm = static_cast<int32_t>(d.rs1);
        break;
    default: d.imm = extract_immediate(word, d.format); break;
    }
    return d;
}

} // namespace rvsoc::isa
