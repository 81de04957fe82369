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

// RVC expansion (RV32C subset; the F/D load/store forms are not supported).

#include "rvsoc/isa/decoder.hpp"

namespace rvsoc::isa {

namespace {

constexpr uint32_t bit(uint32_t h, unsigned n) { return (h >> n) & 1u; }

constexpr uint32_t bits(uint32_t h, unsigned hi, unsigned lo) {
    return (h >> lo) & ((1u << (hi - lo + 1)) - 1u);
}

constexpr int32_t sign_extend(uint32_t value, unsigned width) {
    const uint32_t m = 1u << (width - 1);
    return static_cast<int32_t>((value ^ m) - m);
}

// 3-bit register fields address x8..x15.
constexpr uint8_t creg(uint32_t field) { return static_cast<uint8_t>(field + 8); }

struct Builder {
    DecodedInstruction d;

    explicit Builder(uint16_t h) {
        d.raw = h;
        d.format = Format::Compressed;
    }
    DecodedInstruction make(Mnemonic m, uint8_t rd, uint8_t rs1, uint8_t rs2, int32_t imm) {
        d.mnemonic = m;
        d.rd = rd;
        d.rs1 = rs1;
        d.rs2 = rs2;
        d.imm = imm;
        return d;
    }
    DecodedInstruction illegal() { return d; }
};

int32_t imm6(uint32_t h) { return sign_extend((bit(h, 12) << 5) | bits(h, 6, 2), 6); }

int32_t jump_offset(uint32_t h) {
    const uint32_t v = (bit(h, 12) << 11) | (bit(h, 11) << 4) | (bits(h, 10, 9) << 8) | (bit(h, 8) << 10) |
                       (bit(h, 7) << 6) | (bit(h, 6) << 7) | (bits(h, 5, 3) << 1) | (bit(h, 2) << 5);
    return sign_extend(v, 12);
}

int32_t branch_offset(uint32_t h) {
    const uint32_t v = (bit(h, 12) << 8) | (bits(h, 11, 10) << 3) | (bits(h, 6, 5) << 6) | (bits(h, 4, 3) << 1) |
                       (bit(h, 2) << 5);
    return sign_extend(v, 9);
}

DecodedInstruction quadrant0(uint32_t h, Builder& b) {
    const uint8_t rd = creg(bits(h, 4, 2));
    const uint8_t rs1 = creg(bits(h, 9, 7));
    const int32_t word_off = static_cast<int32_t>((bits(h, 12, 10) << 3) | (bit(h, 6) << 2) | (bit(h, 5) << 6));
    switch (bits(h, 15, 13)) {
    case 0: { // c.addi4spn
        const uint32_t nzuimm = (bits(h, 12, 11) << 4) | (bits(h, 10, 7) << 6) | (bit(h, 6) << 2) | (bit(h, 5) << 3);
        if (nzuimm == 0) return b.illegal();
        return b.make(Mnemonic::Addi, rd, 2, 0, static_cast<int32_t>(nzuimm));
    }
    case 2: return b.make(Mnemonic::Lw, rd, rs1, 0, word_off);           // c.lw
    case 6: return b.make(Mnemonic::Sw, 0, rs1, rd, word_off);           // c.sw
    default: return b.illegal();
    }
}

DecodedInstruction quadrant1(uint32_t h, Builder& b) {
    const uint8_t rd = static_cast<uint8_t>(bits(h, 11, 7));
    switch (bits(h, 15, 13)) {
    case 0: return b.make(Mnemonic::Addi, rd, rd, 0, imm6(h));          // c.addi / c.nop
    case 1: return b.make(Mnemonic::Jal, 1, 0, 0, jump_offset(h));       // c.jal
    case 2: return b.make(Mnemonic::Addi, rd, 0, 0, imm6(h));           // c.li
    case 3:
        if (rd == 2) { // c.addi16sp
            const uint32_t v = (bit(h, 12) << 9) | (bit(h, 6) << 4) | (bit(h, 5) << 6) | (bits(h, 4, 3) << 7) |
                               (bit(h, 2) << 5);
            if (v == 0) return b.illegal();
            return b.make(Mnemonic::Addi, 2, 2, 0, sign_extend(v, 10));
        } else { // c.lui
            const int32_t v = imm6(h);
            if (v == 0) return b.illegal();
            return b.make(Mnemonic::Lui, rd, 0, 0, static_cast<int32_t>(static_cast<uint32_t>(v) << 12));
        }
    case 4: {
        const uint8_t r = creg(bits(h, 9, 7));
        const uint8_t r2 = creg(bits(h, 4, 2));
        switch (bits(h, 11, 10)) {
        case 0:
            if (bit(h, 12)) return b.illegal();
            return b.make(Mnemonic::Srli, r, r, 0, static_cast<int32_t>(bits(h, 6, 2)));
        case 1:
            if (bit(h, 12)) return b.illegal();
            return b.make(Mnemonic::Srai, r, r, 0, static_cast<int32_t>(bits(h, 6, 2)));
        case 2: return b.make(Mnemonic::Andi, r, r, 0, imm6(h));
        default:
            if (bit(h, 12)) return b.illegal(); // subw/addw are RV64 only
            switch (bits(h, 6, 5)) {
            case 0: return b.make(Mnemonic::Sub, r, r, r2, 0);
            case 1: return b.make(Mnemonic::Xor, r, r, r2, 0);
            case 2: return b.make(Mnemonic::Or, r, r, r2, 0);
            default: return b.make(Mnemonic::And, r, r, r2, 0);
            }
        }
    }
    case 5: return b.make(Mnemonic::Jal, 0, 0, 0, jump_offset(h));            // c.j
    case 6: return b.make(Mnemonic::Beq, 0, creg(bits(h, 9, 7)), 0, branch_offset(h)); // c.beqz
    default: return b.make(Mnemonic::Bne, 0, creg(bits(h, 9, 7)), 0, branch_offset(h)); // c.bnez
    }
}

DecodedInstruction quadrant2(uint32_t h, Builder& b) {
    const uint8_t rd = static_cast<uint8_t>(bits(h, 11, 7));
    const uint8_t rs2 = static_cast<uint8_t>(bits(h, 6, 2));
    switch (bits(h, 15, 13)) {
    case 0:
        if (bit(h, 12)) return b.illegal();
        return b.make(Mnemonic::Slli, rd, rd, 0, static_cast<int32_t>(rs2)); // c.slli
    case 2: { // c.lwsp
        if (rd == 0) return b.illegal();
        const uint32_t off = (bit(h, 12) << 5) | (bits(h, 6, 4) << 2) | (bits(h, 3, 2) << 6);
        return b.make(Mnemonic::Lw, rd, 2, 0, static_cast<int32_t>(off));
    }
    case 4:
        if (!bit(h, 12)) {
            if (rs2 == 0) {
                if (rd == 0) return b.illegal();
                return b.make(Mnemonic::Jalr, 0, rd, 0, 0); // c.jr
            }
            return b.make(Mnemonic::Add, rd, 0, rs2, 0); // c.mv
        }
        if (rs2 == 0) {
            if (rd == 0) return b.make(Mnemonic::Ebreak, 0, 0, 0, 0); // c.ebreak
            return b.make(Mnemonic::Jalr, 1, rd, 0, 0);              // c.jalr
        }
        return b.make(Mnemonic::Add, rd, rd, rs2, 0); // c.add
    case 6: { // c.swsp
        const uint32_t off = (bits(h, 12, 9) << 2) | (bits(h, 8, 7) << 6);
        return b.make(Mnemonic::Sw, 0, 2, rs2, static_cast<int32_t>(off));
    }
    default: return b.illegal();
    }
}

} // namespace

DecodedInstruction expand_compressed(uint16_t halfword) {
    Builder b(halfword);
    const uint32_t h = halfword;
    switch (h & 0x3u) {
    case 0: return quadrant0(h, b);
    case 1: return quadrant1(h, b);
    case 2: return quadrant2(h, b);
    default: return b.illegal();
    }
}

} // namespace rvsoc::isa
