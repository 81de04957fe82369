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
"""Builds the guest fixtures and their reference outputs.

Guests are compiled with clang/ld.lld, converted to Intel HEX, then executed
on Unicorn (an independent RV32 emulator) to record reference signatures and
trace output. Run from the repository root; outputs land in tests/fixtures.
"""

import argparse
import pathlib
import random
import struct
import subprocess
import sys

from elftools.elf.elffile import ELFFile
from unicorn import Uc, UC_ARCH_RISCV, UC_MODE_RISCV32, UC_HOOK_MEM_WRITE, UC_HOOK_INTR
from unicorn.riscv_const import UC_RISCV_REG_X2, UC_RISCV_REG_PC

LICENSE_HEADER = """// Copyright 2026 The rvsoc Authors
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

"""

ROOT = pathlib.Path(__file__).resolve().parent.parent
GUEST = ROOT / "tests" / "fixtures" / "guest"
OUT = ROOT / "tests" / "fixtures"
RAM_SIZE = 16 << 20
TRACE_ADDR = 0x40000000
RESET_SP = RAM_SIZE - 16

CLANG = ["clang", "--target=riscv32-unknown-elf", "-march=rv32imac", "-mabi=ilp32", "-mno-relax",
         "-nostdlib", "-ffreestanding", "-fuse-ld=lld", "-Wl,--no-relax", "-static"]

EDGE = [0, 1, 2, 0xFFFFFFFF, 0xFFFFFFFE, 0x7FFFFFFF, 0x80000000, 0x80000001,
        0x0000FFFF, 0xFFFF0000, 0x12345678, 0xDEADBEEF, 31, 32, 33]


# ---------------------------------------------------------------------------
# Generated ALU fixtures

def s32(v):
    v &= 0xFFFFFFFF
    return v - (1 << 32) if v & 0x80000000 else v


def pairs(rng, n_random):
    out = [(a, b) for a in EDGE[:10] for b in EDGE[:10]]
    out += [(rng.getrandbits(32), rng.getrandbits(32)) for _ in range(n_random)]
    return out


def reg_reg_fixture(ops, operand_pairs, norvc=True):
    lines = ['#include "test_macros.h"', ""]
    if norvc:
        lines.append(".option norvc")
    lines.append("TEST_BEGIN")
    words = 0
    for a, b in operand_pairs:
        lines.append(f"    li a0, {s32(a)}")
        lines.append(f"    li a1, {s32(b)}")
        for op in ops:
            lines.append(f"    {op} a2, a0, a1")
            lines.append("    SIG(a2)")
            words += 1
    lines.append("TEST_END")
    lines.append(f"SIGNATURE({words})")
    return "\n".join(lines) + "\n"


def reg_imm_fixture(ops, values):
    lines = ['#include "test_macros.h"', "", ".option norvc", "TEST_BEGIN"]
    words = 0
    for a in values:
        lines.append(f"    li a0, {s32(a)}")
        for op, imm_set in ops:
            for imm in imm_set:
                lines.append(f"    {op} a2, a0, {imm}")
                lines.append("    SIG(a2)")
                words += 1
    lines.append("TEST_END")
    lines.append(f"SIGNATURE({words})")
    return "\n".join(lines) + "\n"


def branch_fixture(operand_pairs):
    ops = ["beq", "bne", "blt", "bge", "bltu", "bgeu"]
    lines = ['#include "test_macros.h"', "", ".option norvc", "TEST_BEGIN"]
    words = 0
    label = 0
    for a, b in operand_pairs:
        lines.append(f"    li a0, {s32(a)}")
        lines.append(f"    li a1, {s32(b)}")
        for op in ops:
            # Forward and backward targets both record taken (1) / not taken (0).
            lines += [f"    li a2, 0",
                      f"    {op} a0, a1, 1f",
                      f"    j 2f",
                      f"1:  li a2, 1",
                      f"2:  SIG(a2)",
                      f"    li a2, 0",
                      f"    j 4f",
                      f"3:  li a2, 1",
                      f"    j 5f",
                      f"4:  {op} a0, a1, 3b",
                      f"5:  SIG(a2)"]
            words += 2
            label += 1
    lines.append("TEST_END")
    lines.append(f"SIGNATURE({words})")
    return "\n".join(lines) + "\n"


def generated_sources():
    rng = random.Random(20261015)
    shift_vals = EDGE + [rng.getrandbits(32) for _ in range(8)]
    small_imms = [0, 1, -1, 2047, -2048, 0x555, -0x556, 100]
    shamts = [0, 1, 4, 15, 16, 31]
    return {
        "rv32i_add": reg_reg_fixture(["add"], pairs(rng, 20)),
        "rv32i_sub": reg_reg_fixture(["sub"], pairs(rng, 20)),
        "rv32i_logic": reg_reg_fixture(["and", "or", "xor"], pairs(rng, 20)),
        "rv32i_shift": reg_reg_fixture(["sll", "srl", "sra"], [(a, b) for a in shift_vals for b in EDGE]),
        "rv32i_compare": reg_reg_fixture(["slt", "sltu"], pairs(rng, 20)),
        "rv32i_imm": reg_imm_fixture([("addi", small_imms), ("slti", small_imms), ("sltiu", small_imms),
                                      ("xori", small_imms), ("ori", small_imms), ("andi", small_imms),
                                      ("slli", shamts), ("srli", shamts), ("srai", shamts)], shift_vals),
        "rv32i_branch": branch_fixture(pairs(rng, 10)),
        "rv32m_mul": reg_reg_fixture(["mul", "mulh", "mulhsu", "mulhu"], pairs(rng, 40)),
        "rv32m_div": reg_reg_fixture(["div", "divu", "rem", "remu"], pairs(rng, 40)),
    }


# ---------------------------------------------------------------------------
# Build and conversion

def compile_guest(sources, elf, extra_flags=()):
    cmd = CLANG + list(extra_flags) + [f"-I{GUEST / 'compliance'}", f"-T{GUEST / 'link.ld'}",
                                       "-o", str(elf)] + [str(s) for s in sources]
    subprocess.run(cmd, check=True)


def load_segments(elf_path):
    with open(elf_path, "rb") as f:
        elf = ELFFile(f)
        segs = []
        for seg in elf.iter_segments():
            if seg["p_type"] != "PT_LOAD" or seg["p_filesz"] == 0:
                continue
            segs.append((seg["p_paddr"], seg.data()[: seg["p_filesz"]]))
        symbols = {}
        symtab = elf.get_section_by_name(".symtab")
        for sym in symtab.iter_symbols():
            if sym.name:
                symbols[sym.name] = sym["st_value"]
        return elf.header["e_entry"], segs, symbols


def hex_record(rtype, addr, payload):
    body = bytes([len(payload), (addr >> 8) & 0xFF, addr & 0xFF, rtype]) + payload
    checksum = (-sum(body)) & 0xFF
    return ":" + (body + bytes([checksum])).hex().upper()


def to_hex(entry, segs):
    lines = []
    upper = None
    for base, data in segs:
        for off in range(0, len(data), 16):
            addr = base + off
            chunk = data[off: off + 16]
            if addr >> 16 != upper:
                upper = addr >> 16
                lines.append(hex_record(0x04, 0, struct.pack(">H", upper)))
            # Records never straddle a 64 KiB boundary because chunks are 16-aligned.
            lines.append(hex_record(0x00, addr & 0xFFFF, chunk))
    lines.append(hex_record(0x05, 0, struct.pack(">I", entry)))
    lines.append(hex_record(0x01, 0, b""))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Reference execution

class GuestFault(Exception):
    pass


def reference_run(entry, segs, stop_at, max_instr=50_000_000):
    uc = Uc(UC_ARCH_RISCV, UC_MODE_RISCV32)
    uc.mem_map(0, RAM_SIZE)
    uc.mem_map(TRACE_ADDR, 0x1000)
    for base, data in segs:
        uc.mem_write(base, bytes(data))
    uc.reg_write(UC_RISCV_REG_X2, RESET_SP)
    out = bytearray()

    def on_write(_uc, _access, address, size, value, _user):
        if address == TRACE_ADDR and size == 1:
            out.append(value & 0xFF)

    def on_intr(_uc, intno, _user):
        pc = _uc.reg_read(UC_RISCV_REG_PC)
        raise GuestFault(f"unexpected exception {intno} at pc {pc:08x}")

    uc.hook_add(UC_HOOK_MEM_WRITE, on_write, begin=TRACE_ADDR, end=TRACE_ADDR + 3)
    uc.hook_add(UC_HOOK_INTR, on_intr)
    uc.emu_start(entry, stop_at, count=max_instr)
    if uc.reg_read(UC_RISCV_REG_PC) != stop_at:
        raise GuestFault("reference run did not reach the halt label")
    return uc, bytes(out)


def signature_words(uc, begin, end):
    data = uc.mem_read(begin, end - begin)
    return [struct.unpack_from("<I", data, i)[0] for i in range(0, len(data), 4)]


# ---------------------------------------------------------------------------

def build_compliance():
    src_dir = GUEST / "compliance"
    out_dir = OUT / "compliance"
    build_dir = ROOT / "build" / "fixtures"
    out_dir.mkdir(parents=True, exist_ok=True)
    build_dir.mkdir(parents=True, exist_ok=True)

    for name, text in generated_sources().items():
        header = LICENSE_HEADER + "/* Generated by scripts/build_fixtures.py; do not edit. */\n"
        (src_dir / f"{name}.S").write_text(header + text)

    manifest = []
    for src in sorted(src_dir.glob("*.S")):
        name = src.stem
        elf = build_dir / f"{name}.elf"
        extra = ["-march=rv32imac"] if name.startswith("rv32c") else []
        compile_guest([src], elf, extra)
        entry, segs, syms = load_segments(elf)
        begin, end = syms["begin_signature"], syms["end_signature"]
        (out_dir / f"{name}.hex").write_text(to_hex(entry, segs))
        uc, _ = reference_run(entry, segs, syms["halt"])
        words = signature_words(uc, begin, end)
        (out_dir / f"{name}.sig").write_text("".join(f"{w:08x}\n" for w in words))
        manifest.append(f"{name} {begin:08x} {end:08x}")
        print(f"  {name}: {len(words)} signature words")
    (out_dir / "manifest.txt").write_text("\n".join(manifest) + "\n")


def build_dhrystone():
    src_dir = GUEST / "dhrystone"
    build_dir = ROOT / "build" / "fixtures"
    build_dir.mkdir(parents=True, exist_ok=True)
    elf = build_dir / "dhrystone.elf"
    compile_guest(sorted(src_dir.glob("*.c")) + sorted(src_dir.glob("*.S")), elf,
                  ["-O2", "-fno-builtin", "-fno-common", "-w"])
    entry, segs, syms = load_segments(elf)
    (OUT / "dhrystone.hex").write_text(to_hex(entry, segs))
    _, out = reference_run(entry, segs, syms["halt"])
    (OUT / "dhrystone.expected").write_bytes(out)
    print(f"  dhrystone: {len(out)} bytes of trace output")


def build_timer():
    src_dir = GUEST / "timer"
    build_dir = ROOT / "build" / "fixtures"
    build_dir.mkdir(parents=True, exist_ok=True)
    elf = build_dir / "timer_irq.elf"
    compile_guest([src_dir / "timer_irq.S"], elf)
    entry, segs, syms = load_segments(elf)
    (OUT / "timer_irq.hex").write_text(to_hex(entry, segs))
    (OUT / "timer_irq.sym").write_text("".join(f"{k} {syms[k]:08x}\n" for k in
                                               ("result", "halt", "handler")))
    print("  timer_irq: built")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("what", nargs="*", default=["compliance", "dhrystone", "timer"])
    args = parser.parse_args()
    steps = {"compliance": build_compliance, "dhrystone": build_dhrystone, "timer": build_timer}
    for w in args.what:
        print(f"building {w}")
        steps[w]()
    return 0


if __name__ == "__main__":
    sys.exit(main())
