#!/usr/bin/env python3
# Copyright 2026 The rvsoc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the 16-bit compressed-instruction reference table.

Every halfword 0x0000..0xFFFF gets one line:

    hhhh L <mnemonic> <rd> <rs1> <rs2> <imm> <source>
    hhhh I <source>

Operands are those of the 32-bit equivalent, taken from Capstone's decoding.
<source> says how the verdict was reached:

    cs     Capstone's verdict and operands, used as-is
    hint   a HINT encoding (rd = x0) that Capstone rejects; operands come from
           Capstone's decoding of the same bits with rd = x1, rd reset to x0
    fd     a C.FLW/C.FSW/C.FLD/C.FSD family encoding; reserved without F/D
    rv32   a shift with shamt[5] = 1, reserved on RV32
    rsv    C.LUI with a zero immediate, reserved
    unimp  the all-zero halfword, defined illegal
    q3     low bits 11, not a 16-bit encoding
    cs-no  Capstone rejects it and no rule above applies
"""

import pathlib
import sys

from capstone import Cs, CS_ARCH_RISCV, CS_MODE_RISCV32, CS_MODE_RISCVC
from capstone.riscv_const import RISCV_OP_REG, RISCV_OP_IMM

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "rvc_reference.txt"

md = Cs(CS_ARCH_RISCV, CS_MODE_RISCV32 | CS_MODE_RISCVC)
md.detail = True

# Families whose rd = x0 forms the ISA designates as HINTs.
HINT_FAMILIES = {"c.nop", "c.addi", "c.li", "c.lui", "c.mv", "c.add", "c.slli"}


def capstone(h):
    ins = list(md.disasm(h.to_bytes(2, "little"), 0))
    if not ins or ins[0].size != 2:
        return None
    i = ins[0]
    regs, imms = [], []
    for op in i.operands:
        if op.type == RISCV_OP_REG:
            regs.append(op.reg - 1)
        elif op.type == RISCV_OP_IMM:
            imms.append(op.imm)
    return i.mnemonic, regs, imms


def s32(v):
    v &= 0xFFFFFFFF
    return v - (1 << 32) if v & 0x80000000 else v


def expand(mn, regs, imms):
    """Maps a Capstone compressed decoding to (mnemonic, rd, rs1, rs2, imm)."""
    imm = s32(imms[0]) if imms else 0
    table = {
        "c.addi4spn": lambda: ("addi", regs[0], 2, 0, imm),
        "c.lw": lambda: ("lw", regs[0], regs[1], 0, imm),
        "c.sw": lambda: ("sw", 0, regs[1], regs[0], imm),
        "c.addi": lambda: ("addi", regs[0], regs[0], 0, imm),
        "c.jal": lambda: ("jal", 1, 0, 0, imm),
        "c.li": lambda: ("addi", regs[0], 0, 0, imm),
        "c.addi16sp": lambda: ("addi", 2, 2, 0, imm),
        "c.lui": lambda: ("lui", regs[0], 0, 0, s32(imms[0] << 12)),
        "c.srli": lambda: ("srli", regs[0], regs[0], 0, imm),
        "c.srai": lambda: ("srai", regs[0], regs[0], 0, imm),
        "c.slli": lambda: ("slli", regs[0], regs[0], 0, imm),
        "c.andi": lambda: ("andi", regs[0], regs[0], 0, imm),
        "c.sub": lambda: ("sub", regs[0], regs[0], regs[1], 0),
        "c.xor": lambda: ("xor", regs[0], regs[0], regs[1], 0),
        "c.or": lambda: ("or", regs[0], regs[0], regs[1], 0),
        "c.and": lambda: ("and", regs[0], regs[0], regs[1], 0),
        "c.j": lambda: ("jal", 0, 0, 0, imm),
        "c.beqz": lambda: ("beq", 0, regs[0], 0, imm),
        "c.bnez": lambda: ("bne", 0, regs[0], 0, imm),
        "c.lwsp": lambda: ("lw", regs[0], 2, 0, imm),
        "c.jr": lambda: ("jalr", 0, regs[0], 0, 0),
        "c.mv": lambda: ("add", regs[0], 0, regs[1], 0),
        "c.ebreak": lambda: ("ebreak", 0, 0, 0, 0),
        "c.jalr": lambda: ("jalr", 1, regs[0], 0, 0),
        "c.add": lambda: ("add", regs[0], regs[0], regs[1], 0),
        "c.swsp": lambda: ("sw", 0, 2, regs[0], imm),
    }
    return table[mn]()


def with_rd_x1(h):
    return (h & ~(0x1F << 7)) | (1 << 7)


def hint_decoding(h):
    """Decodes an rd = x0 HINT via the same encoding with rd = x1."""
    if (h >> 7) & 0x1F != 0:
        return None
    alt = capstone(with_rd_x1(h))
    if alt is None:
        return None
    mn, regs, imms = alt
    family = mn
    # rd = x0 in quadrant 1 funct3 0 is c.nop; its rd = x1 twin is c.addi.
    if mn == "c.addi":
        family = "c.nop"
    if family not in HINT_FAMILIES and mn not in HINT_FAMILIES:
        return None
    # c.jr/c.jalr twins are not HINT forms; rd = x1 there is rs1.
    if mn in ("c.jr", "c.jalr"):
        return None
    name, _, rs1, rs2, imm = expand(mn, regs, imms)
    rs1 = 0 if rs1 == 1 else rs1
    return name, 0, rs1, rs2, imm


def classify(h):
    if h & 3 == 3:
        return ("I", "q3")
    quadrant, funct3 = h & 3, h >> 13
    if (quadrant, funct3) in {(0, 1), (0, 3), (0, 5), (0, 7), (2, 1), (2, 3), (2, 5), (2, 7)}:
        return ("I", "fd")
    is_shift = (quadrant == 2 and funct3 == 0) or (quadrant == 1 and funct3 == 4 and (h >> 10) & 3 in (0, 1))
    if is_shift and (h >> 12) & 1:
        return ("I", "rv32")
    rd = (h >> 7) & 0x1F
    if quadrant == 1 and funct3 == 3 and rd != 2 and ((h >> 12) & 1) == 0 and (h >> 2) & 0x1F == 0:
        return ("I", "rsv")
    cs = capstone(h)
    if cs is not None:
        mn, regs, imms = cs
        if mn == "c.unimp":
            return ("I", "unimp")
        if mn == "c.nop":
            # Capstone prints no operands; the immediate comes from the rd = x1 twin.
            hint = hint_decoding(h)
            return ("L", *hint, "cs")
        return ("L", *expand(mn, regs, imms), "cs")
    hint = hint_decoding(h)
    if hint is not None:
        return ("L", *hint, "hint")
    return ("I", "cs-no")


def main():
    lines = []
    counts = {}
    for h in range(0x10000):
        verdict = classify(h)
        counts[verdict[-1]] = counts.get(verdict[-1], 0) + 1
        if verdict[0] == "L":
            _, mn, rd, rs1, rs2, imm, src = verdict
            lines.append(f"{h:04x} L {mn} {rd} {rs1} {rs2} {imm} {src}")
        else:
            lines.append(f"{h:04x} I {verdict[1]}")
    OUT.write_text("\n".join(lines) + "\n")
    print(" ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return 0


if __name__ == "__main__":
    sys.exit(main())
