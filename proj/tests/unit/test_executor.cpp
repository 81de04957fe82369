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

#include "rvsoc/core/executor.hpp"

#include "encode.hpp"
#include "machine.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace rvsoc;
using core::StepOutcome;
using test::Machine;
namespace enc = rvsoc::test::enc;
namespace csr = rvsoc::hart::csr;

namespace {

constexpr uint32_t kIntMin = 0x80000000u;

void set_mtvec(Machine& m, uint32_t v) { REQUIRE(m.hart.write_csr(csr::Mtvec, v) == hart::CsrStatus::Ok); }

} // namespace

TEST_CASE("ADDI retires and advances pc") {
    Machine m;
    m.program({0x00500093});
    const auto o = m.step();
    CHECK(o.is_retired());
    CHECK(m.x(1) == 5);
    CHECK(m.hart.pc() == 4);
    CHECK(m.hart.instret() == 1);
    CHECK(*m.hart.read_csr(csr::Minstret) == 1);
}

TEST_CASE("all-zero word traps as an illegal instruction") {
    Machine m;
    set_mtvec(m, 0x200);
    const auto o = m.step();
    REQUIRE(o.is_trapped());
    CHECK(o.trap.code == core::cause::IllegalInstruction);
    CHECK(m.hart.pc() == 0x200);
    CHECK(m.hart.mepc() == 0);
    CHECK(m.hart.mcause() == 2);
    CHECK(m.hart.mtval() == 0);
    CHECK(m.hart.instret() == 0);
}

TEST_CASE("illegal 32-bit word at pc=8 with direct mtvec") {
    Machine m;
    set_mtvec(m, 0x200);
    m.program({enc::kNop, enc::kNop, 0xFFFFFFFF});
    m.step();
    m.step();
    const auto o = m.step();
    REQUIRE(o.is_trapped());
    CHECK(m.hart.pc() == 0x200);
    CHECK(m.hart.mepc() == 8);
    CHECK(m.hart.mcause() == 2);
    CHECK(m.hart.mtval() == 0xFFFFFFFF);
}

TEST_CASE("EBREAK halts by default and traps in trap mode") {
    SUBCASE("halt") {
        Machine m;
        m.program({enc::kEbreak});
        const auto o = m.step();
        REQUIRE(o.is_halted());
        CHECK(o.halt == core::HaltReason::Ebreak);
    }
    SUBCASE("trap") {
        core::ExecutorConfig cfg;
        cfg.ebreak_mode = core::EbreakMode::Trap;
        Machine m(cfg);
        set_mtvec(m, 0x100);
        m.program({enc::kNop, enc::kEbreak});
        m.step();
        const auto o = m.step();
        REQUIRE(o.is_trapped());
        CHECK(m.hart.mcause() == 3);
        CHECK(m.hart.mepc() == 4);
        CHECK(m.hart.mtval() == 4);
        CHECK(m.hart.pc() == 0x100);
    }
}

TEST_CASE("ADD of 7 and -3") {
    Machine m;
    m.set_x(5, 7);
    m.set_x(6, static_cast<uint32_t>(-3));
    m.program({enc::add(7, 5, 6)});
    m.step();
    CHECK(m.x(7) == 4);
}

TEST_CASE("JALR clears bit 0 of the target") {
    Machine m;
    m.set_x(5, 0x101);
    m.program({enc::jalr(1, 5, 0)});
    m.step();
    CHECK(m.hart.pc() == 0x100);
    CHECK(m.x(1) == 4);

    Machine n; // rd == rs1 uses the old rs1
    n.set_x(5, 0x41);
    n.program({enc::jalr(5, 5, 2)});
    n.step();
    CHECK(n.hart.pc() == 0x42);
    CHECK(n.x(5) == 4);
}

TEST_CASE("store/load round trip at 0x4") {
    Machine m;
    m.hart.set_pc(0x100);
    m.set_x(2, 0xCAFEBABE);
    m.program({enc::sw(2, 0, 4), enc::lw(3, 0, 4)}, 0x100);
    m.step();
    m.step();
    CHECK(m.x(3) == 0xCAFEBABE);
    CHECK(m.peek32(4) == 0xCAFEBABE);
}

TEST_CASE("sub-word loads sign/zero extend") {
    Machine m;
    m.hart.set_pc(0x100);
    m.poke32(0x40, 0x80FF7F01);
    m.program({enc::lb(1, 0, 0x42), enc::lbu(2, 0, 0x42), enc::lh(3, 0, 0x42), enc::lhu(4, 0, 0x42),
               enc::lb(5, 0, 0x41)},
              0x100);
    for (int i = 0; i < 5; ++i) m.step();
    CHECK(m.x(1) == 0xFFFFFFFF);
    CHECK(m.x(2) == 0xFF);
    CHECK(m.x(3) == 0xFFFF80FF);
    CHECK(m.x(4) == 0x80FF);
    CHECK(m.x(5) == 0x7F);
}

TEST_CASE("M extension examples and corner cases") {
    using isa::Mnemonic;
    CHECK(core::muldiv(Mnemonic::Mul, kIntMin, 2) == 0);
    CHECK(core::muldiv(Mnemonic::Div, kIntMin, 0xFFFFFFFF) == kIntMin);
    CHECK(core::muldiv(Mnemonic::Rem, kIntMin, 0xFFFFFFFF) == 0);
    CHECK(core::muldiv(Mnemonic::Divu, 1234, 0) == 0xFFFFFFFF);
    CHECK(core::muldiv(Mnemonic::Remu, 1234, 0) == 1234);
    CHECK(core::muldiv(Mnemonic::Div, 1234, 0) == 0xFFFFFFFF);
    CHECK(core::muldiv(Mnemonic::Rem, static_cast<uint32_t>(-1234), 0) == static_cast<uint32_t>(-1234));
    CHECK(core::muldiv(Mnemonic::Div, static_cast<uint32_t>(-7), 2) == static_cast<uint32_t>(-3));
    CHECK(core::muldiv(Mnemonic::Rem, static_cast<uint32_t>(-7), 2) == static_cast<uint32_t>(-1));
    CHECK(core::muldiv(Mnemonic::Mulh, kIntMin, kIntMin) == 0x40000000);
    CHECK(core::muldiv(Mnemonic::Mulhu, 0xFFFFFFFF, 0xFFFFFFFF) == 0xFFFFFFFE);
    CHECK(core::muldiv(Mnemonic::Mulhsu, 0xFFFFFFFF, 0xFFFFFFFF) == 0xFFFFFFFF);

    // the same corners through the pipeline of fetch/decode/execute
    Machine m;
    m.set_x(1, kIntMin);
    m.set_x(2, 0xFFFFFFFF);
    m.set_x(3, 0);
    m.program({enc::div(4, 1, 2), enc::rem(5, 1, 2), enc::divu(6, 1, 3), enc::remu(7, 1, 3)});
    for (int i = 0; i < 4; ++i) CHECK(m.step().is_retired());
    CHECK(m.x(4) == kIntMin);
    CHECK(m.x(5) == 0);
    CHECK(m.x(6) == 0xFFFFFFFF);
    CHECK(m.x(7) == kIntMin);
}

TEST_CASE("division totality") {
    using isa::Mnemonic;
    std::mt19937 rng(31337);
    for (int i = 0; i < 100000; ++i) {
        uint32_t a = rng(), b = rng();
        if (i % 7 == 0) b = 0;
        if (i % 11 == 0) b = 0xFFFFFFFF;
        if (i % 13 == 0) a = kIntMin;
        if (i % 17 == 0) b = 1 + (rng() % 4);
        const uint32_t q = core::muldiv(Mnemonic::Div, a, b), r = core::muldiv(Mnemonic::Rem, a, b);
        const uint32_t qu = core::muldiv(Mnemonic::Divu, a, b), ru = core::muldiv(Mnemonic::Remu, a, b);
        if (b != 0) {
            REQUIRE(a == q * b + r);
            REQUIRE(a == qu * b + ru);
        } else {
            REQUIRE(q == 0xFFFFFFFF);
            REQUIRE(r == a);
            REQUIRE(qu == 0xFFFFFFFF);
            REQUIRE(ru == a);
        }
    }
}

TEST_CASE("LR/SC") {
    SUBCASE("paired succeeds") {
        Machine m;
        m.hart.set_pc(0x400);
        m.set_x(1, 0x100);
        m.set_x(3, 77);
        m.poke32(0x100, 5);
        m.program({enc::lr_w(2, 1), enc::sc_w(4, 1, 3)}, 0x400);
        m.step();
        CHECK(m.x(2) == 5);
        m.step();
        CHECK(m.x(4) == 0);
        CHECK(m.peek32(0x100) == 77);
    }
    SUBCASE("without LR fails and leaves memory") {
        Machine m;
        m.hart.set_pc(0x400);
        m.set_x(1, 0x100);
        m.set_x(3, 77);
        m.poke32(0x100, 5);
        m.program({enc::sc_w(4, 1, 3)}, 0x400);
        m.step();
        CHECK(m.x(4) == 1);
        CHECK(m.peek32(0x100) == 5);
    }
    SUBCASE("an intervening store invalidates, even with the same value") {
        Machine m;
        m.hart.set_pc(0x400);
        m.set_x(1, 0x100);
        m.set_x(3, 77);
        m.poke32(0x100, 5);
        m.program({enc::lr_w(2, 1), enc::sw(2, 1, 0), enc::sc_w(4, 1, 3)}, 0x400);
        m.run(3);
        CHECK(m.x(4) == 1);
        CHECK(m.peek32(0x100) == 5);
    }
    SUBCASE("different address fails") {
        Machine m;
        m.hart.set_pc(0x400);
        m.set_x(1, 0x100);
        m.set_x(5, 0x104);
        m.set_x(3, 77);
        m.program({enc::lr_w(2, 1), enc::sc_w(4, 5, 3)}, 0x400);
        m.run(2);
        CHECK(m.x(4) == 1);
        CHECK(m.peek32(0x104) == 0);
    }
    SUBCASE("a trap invalidates the reservation") {
        Machine m;
        m.hart.set_pc(0x400);
        set_mtvec(m, 0x500);
        m.set_x(1, 0x100);
        m.set_x(3, 77);
        // handler: sc then ebreak
        m.program({enc::lr_w(2, 1), enc::kEcall}, 0x400);
        m.program({enc::sc_w(4, 1, 3), enc::kEbreak}, 0x500);
        m.run(10);
        CHECK(m.x(4) == 1);
        CHECK(m.peek32(0x100) == 0);
    }
    SUBCASE("misaligned LR/SC/AMO trap") {
        Machine m;
        m.hart.set_pc(0x400);
        set_mtvec(m, 0x600);
        m.set_x(1, 0x102);
        m.program({enc::lr_w(2, 1)}, 0x400);
        CHECK(m.step().trap.code == core::cause::LoadAddressMisaligned);
        CHECK(m.hart.mtval() == 0x102);
        m.hart.set_pc(0x404);
        m.program({enc::sc_w(2, 1, 3)}, 0x404);
        CHECK(m.step().trap.code == core::cause::StoreAddressMisaligned);
        m.hart.set_pc(0x408);
        m.program({enc::amoadd_w(2, 1, 3)}, 0x408);
        CHECK(m.step().trap.code == core::cause::StoreAddressMisaligned);
    }
}

TEST_CASE("SC never writes memory when it reports failure") {
    std::mt19937 rng(5);
    for (int i = 0; i < 2000; ++i) {
        Machine m({}, 8192);
        m.hart.set_pc(0x1000);
        const uint32_t a = 0x100 + 4 * (rng() % 16);
        const uint32_t b = 0x100 + 4 * (rng() % 16);
        const uint32_t old = rng();
        m.poke32(b, old);
        m.set_x(1, a);
        m.set_x(5, b);
        m.set_x(3, rng());
        const bool with_lr = rng() & 1;
        m.program({with_lr ? enc::lr_w(2, 1) : enc::kNop, enc::sc_w(4, 5, 3)}, 0x1000);
        m.run(2);
        if (m.x(4) == 1) {
            REQUIRE(m.peek32(b) == old);
        } else {
            REQUIRE(with_lr);
            REQUIRE(a == b);
            REQUIRE(m.peek32(b) == m.x(3));
        }
    }
}

TEST_CASE("AMOADD returns the old value") {
    Machine m;
    m.hart.set_pc(0x400);
    m.poke32(0x100, 7);
    m.set_x(1, 0x100);
    m.set_x(3, 3);
    m.program({enc::amoadd_w(2, 1, 3)}, 0x400);
    m.step();
    CHECK(m.x(2) == 7);
    CHECK(m.peek32(0x100) == 10);
}

TEST_CASE("Zicsr semantics") {
    SUBCASE("CSRRW swaps") {
        Machine m;
        m.hart.write_csr(csr::Mscratch, 0x55);
        m.set_x(2, 0xAA);
        m.program({enc::csrrw(1, csr::Mscratch, 2)});
        m.step();
        CHECK(m.x(1) == 0x55);
        CHECK(*m.hart.read_csr(csr::Mscratch) == 0xAA);
    }
    SUBCASE("CSRRS with x0 reads only, even on a read-only CSR") {
        Machine m;
        m.hart.write_csr(csr::Mscratch, 0x1234);
        m.program({enc::csrrs(1, csr::Mscratch, 0), enc::csrrs(2, csr::Mvendorid, 0), enc::csrrsi(3, csr::Mhartid, 0)});
        for (int i = 0; i < 3; ++i) CHECK(m.step().is_retired());
        CHECK(m.x(1) == 0x1234);
        CHECK(*m.hart.read_csr(csr::Mscratch) == 0x1234);
    }
    SUBCASE("CSRRW to a read-only CSR traps") {
        Machine m;
        set_mtvec(m, 0x200);
        m.set_x(2, 1);
        const uint32_t w = enc::csrrw(1, csr::Mvendorid, 2);
        m.program({w});
        const auto o = m.step();
        REQUIRE(o.is_trapped());
        CHECK(m.hart.mcause() == 2);
        CHECK(m.hart.mtval() == w);
        CHECK(m.x(1) == 0);
    }
    SUBCASE("unimplemented CSR traps") {
        Machine m;
        set_mtvec(m, 0x200);
        m.program({enc::csrrs(1, 0x7C0, 0)});
        CHECK(m.step().is_trapped());
        CHECK(m.hart.mcause() == 2);
    }
    SUBCASE("set/clear with non-zero sources") {
        Machine m;
        m.hart.write_csr(csr::Mscratch, 0xF0);
        m.set_x(2, 0x0F);
        m.set_x(3, 0x30);
        m.program({enc::csrrs(1, csr::Mscratch, 2), enc::csrrc(4, csr::Mscratch, 3)});
        m.run(2);
        CHECK(m.x(1) == 0xF0);
        CHECK(m.x(4) == 0xFF);
        CHECK(*m.hart.read_csr(csr::Mscratch) == 0xCF);
    }
    SUBCASE("minstret read reflects instructions retired before it") {
        Machine m;
        m.program({enc::kNop, enc::kNop, enc::csrrs(1, csr::Minstret, 0)});
        m.run(3);
        CHECK(m.x(1) == 2);
    }
}

TEST_CASE("ECALL traps and continues at the handler") {
    Machine m;
    set_mtvec(m, 0x100);
    int hook_calls = 0;
    uint32_t hook_pc = 0;
    m.exec->on_ecall([&](uint32_t pc) {
        ++hook_calls;
        hook_pc = pc;
    });
    m.program({enc::kNop, enc::kEcall});
    m.program({enc::addi(5, 0, 9)}, 0x100);
    m.step();
    const auto o = m.step();
    REQUIRE(o.is_trapped());
    CHECK(m.hart.pc() == 0x100);
    CHECK(m.hart.mepc() == 4);
    CHECK(m.hart.mcause() == 11);
    CHECK(m.hart.mtval() == 0);
    CHECK(hook_calls == 1);
    CHECK(hook_pc == 4);
    CHECK(m.step().is_retired());
    CHECK(m.x(5) == 9);
}

TEST_CASE("trap entry updates mstatus and MRET restores it") {
    for (bool mie : {false, true}) {
        CAPTURE(mie);
        Machine m;
        set_mtvec(m, 0x100);
        m.hart.write_csr(csr::Mstatus, mie ? hart::mstatus::MIE : 0u);
        m.program({enc::kNop, enc::kEcall, enc::addi(6, 0, 1)});
        // handler: advance mepc past the ecall, then mret
        m.program({enc::csrrs(5, csr::Mepc, 0), enc::addi(5, 5, 4), enc::csrrw(0, csr::Mepc, 5), enc::kMret}, 0x100);
        m.step();
        m.step();
        CHECK((m.hart.mstatus() & hart::mstatus::MIE) == 0);
        CHECK(((m.hart.mstatus() & hart::mstatus::MPIE) != 0) == mie);
        m.run(4);
        CHECK(m.hart.pc() == 8);
        CHECK(((m.hart.mstatus() & hart::mstatus::MIE) != 0) == mie);
        CHECK((m.hart.mstatus() & hart::mstatus::MPIE) != 0);
        m.step();
        CHECK(m.x(6) == 1);
    }
}

TEST_CASE("trap round trip: synchronous trap then immediate MRET") {
    std::mt19937 rng(8);
    for (int i = 0; i < 200; ++i) {
        Machine m;
        const bool mie = rng() & 1;
        const uint32_t pc = 4 * (1 + rng() % 32);
        set_mtvec(m, 0x400);
        m.hart.write_csr(csr::Mstatus, mie ? hart::mstatus::MIE : 0u);
        m.hart.set_pc(pc);
        m.program({0xFFFFFFFF}, pc); // illegal
        m.program({enc::kMret}, 0x400);
        REQUIRE(m.step().is_trapped());
        REQUIRE(m.step().is_retired());
        REQUIRE(m.hart.pc() == m.hart.mepc());
        REQUIRE(m.hart.pc() == pc);
        REQUIRE(((m.hart.mstatus() & hart::mstatus::MIE) != 0) == mie);
    }
}

TEST_CASE("vectored mtvec dispatches interrupts to base + 4*code") {
    Machine m;
    set_mtvec(m, 0x200 | 1);
    m.hart.write_csr(csr::Mie, hart::kMieMtie);
    m.hart.write_csr(csr::Mstatus, hart::mstatus::MIE);
    m.timer.set_mtimecmp(0);
    m.program({enc::kNop});
    const auto o = m.step();
    REQUIRE(o.is_trapped());
    CHECK(o.trap.is_interrupt);
    CHECK(m.hart.pc() == 0x200 + 28);
    CHECK(m.hart.mcause() == 0x80000007u);
    CHECK(m.hart.mepc() == 0);
    CHECK(m.hart.instret() == 0);

    // synchronous exceptions still go to the base
    Machine n;
    set_mtvec(n, 0x200 | 1);
    n.program({0});
    n.step();
    CHECK(n.hart.pc() == 0x200);
}

TEST_CASE("interrupt gating needs MIE, MTIE and MTIP") {
    for (int bits = 0; bits < 8; ++bits) {
        const bool mie = bits & 1, mtie = bits & 2, mtip = bits & 4;
        Machine m;
        set_mtvec(m, 0x300);
        m.hart.write_csr(csr::Mstatus, mie ? hart::mstatus::MIE : 0u);
        m.hart.write_csr(csr::Mie, mtie ? hart::kMieMtie : 0u);
        m.timer.set_mtimecmp(mtip ? 0 : 1000000);
        m.program({enc::kNop});
        const bool expect = mie && mtie && mtip;
        CHECK(m.exec->check_pending_interrupt().has_value() == expect);
        const auto o = m.step();
        CHECK(o.is_trapped() == expect);
        if (expect) CHECK(o.trap.code == 7);
    }
}

TEST_CASE("WFI jumps to the next timer event only when it can fire") {
    SUBCASE("enabled") {
        Machine m;
        m.hart.write_csr(csr::Mie, hart::kMieMtie);
        m.timer.set_mtimecmp(5000);
        m.program({enc::kWfi});
        m.step();
        CHECK(m.timer.mtime() == 5000 + 10);
        CHECK(m.timer.irq_pending());
    }
    SUBCASE("disabled") {
        Machine m;
        m.timer.set_mtimecmp(5000);
        m.program({enc::kWfi});
        m.step();
        CHECK(m.timer.mtime() == 10);
    }
}

TEST_CASE("timer ticks once per retired instruction") {
    Machine m;
    for (uint32_t i = 0; i < 10; ++i) m.program({enc::kNop}, 4 * i);
    for (int i = 0; i < 10; ++i) m.step();
    CHECK(m.timer.mtime() == 100);

    core::ExecutorConfig cfg;
    cfg.cycle_ns = 3;
    cfg.cycles[static_cast<std::size_t>(isa::Mnemonic::Mul)] = 4;
    Machine n(cfg);
    n.program({enc::kNop, enc::mul(1, 2, 3)});
    n.run(2);
    CHECK(n.timer.mtime() == 3 + 12);
    CHECK(n.hart.cycle() == 5);
    CHECK(n.hart.instret() == 2);
}

TEST_CASE("misaligned accesses: permissive by default, trapping when strict") {
    SUBCASE("permissive") {
        Machine m;
        m.hart.set_pc(0x400);
        m.poke32(0x100, 0x44332211);
        m.poke32(0x104, 0x88776655);
        m.set_x(1, 0x101);
        m.set_x(3, 0xAABBCCDD);
        m.program({enc::lw(2, 1, 0), enc::sw(3, 1, 2)}, 0x400);
        m.run(2);
        CHECK(m.x(2) == 0x55443322);
        CHECK(m.peek32(0x100) == 0xDD332211); // byte 0x103 <- DD
        CHECK(m.peek32(0x104) == 0x88AABBCC);
    }
    SUBCASE("strict") {
        core::ExecutorConfig cfg;
        cfg.strict_align = true;
        Machine m(cfg);
        m.hart.set_pc(0x400);
        set_mtvec(m, 0x600);
        m.set_x(1, 0x102);
        m.program({enc::lw(2, 1, 0)}, 0x400);
        auto o = m.step();
        REQUIRE(o.is_trapped());
        CHECK(o.trap.code == 4);
        CHECK(m.hart.mtval() == 0x102);
        m.hart.set_pc(0x404);
        m.program({enc::sh(2, 1, 1)}, 0x404);
        o = m.step();
        CHECK(o.trap.code == 6);
        CHECK(m.hart.mtval() == 0x103);
    }
}

TEST_CASE("bus errors: access faults, or fatal in strict mode") {
    SUBCASE("load fault") {
        Machine m;
        set_mtvec(m, 0x600);
        m.set_x(1, 0x50000000);
        m.program({enc::lw(2, 1, 0)});
        const auto o = m.step();
        REQUIRE(o.is_trapped());
        CHECK(o.trap.code == 5);
        CHECK(m.hart.mtval() == 0x50000000);
    }
    SUBCASE("store fault, including a store to read-only mtime") {
        Machine m;
        set_mtvec(m, 0x600);
        m.set_x(1, test::kTimerBase);
        m.program({enc::sw(0, 1, 0)});
        const auto o = m.step();
        REQUIRE(o.is_trapped());
        CHECK(o.trap.code == 7);
    }
    SUBCASE("strict") {
        core::ExecutorConfig cfg;
        cfg.strict_align = true;
        Machine m(cfg);
        m.set_x(1, 0x50000000);
        m.program({enc::lw(2, 1, 0)});
        const auto o = m.step();
        REQUIRE(o.is_halted());
        CHECK(o.halt == core::HaltReason::FatalBusError);
    }
    SUBCASE("fetch from unmapped space") {
        Machine m;
        set_mtvec(m, 0x600);
        m.hart.set_pc(0x50000000);
        const auto o = m.step();
        REQUIRE(o.is_trapped());
        CHECK(o.trap.code == 1);
        CHECK(m.hart.mtval() == 0x50000000);
    }
}

TEST_CASE("compressed instructions advance pc by 2") {
    Machine m;
    m.poke16(0, 0x4515); // c.li a0, 5
    m.poke16(2, 0x0505); // c.addi a0, 1
    m.poke32(4, enc::addi(11, 10, 1));
    m.poke16(8, 0x0001); // c.nop
    m.step();
    CHECK(m.hart.pc() == 2);
    m.step();
    CHECK(m.hart.pc() == 4);
    m.step();
    CHECK(m.hart.pc() == 8);
    m.step();
    CHECK(m.hart.pc() == 10);
    CHECK(m.x(10) == 6);
    CHECK(m.x(11) == 7);
}

TEST_CASE("retired-count exactness and pc progress over random straight-line code") {
    std::mt19937 rng(77);
    Machine m({}, 1 << 20);
    uint32_t at = 0;
    std::vector<uint32_t> lengths;
    for (int i = 0; i < 5000; ++i) {
        const uint32_t rd = 1 + rng() % 31, rs1 = rng() % 32, rs2 = rng() % 32;
        switch (rng() % 6) {
        case 0: m.poke32(at, enc::addi(rd, rs1, static_cast<int32_t>(rng() % 4096) - 2048)); lengths.push_back(4); break;
        case 1: m.poke32(at, enc::add(rd, rs1, rs2)); lengths.push_back(4); break;
        case 2: m.poke32(at, enc::mul(rd, rs1, rs2)); lengths.push_back(4); break;
        case 3: m.poke32(at, enc::div(rd, rs1, rs2)); lengths.push_back(4); break;
        case 4: m.poke16(at, 0x0001); lengths.push_back(2); break;         // c.nop
        default: m.poke16(at, static_cast<uint16_t>(0x4001 | (rd << 7) | ((rng() % 32) << 2))); lengths.push_back(2); // c.li
        }
        at += lengths.back();
    }
    uint32_t pc = 0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        REQUIRE(m.step().is_retired());
        pc += lengths[i];
        REQUIRE(m.hart.pc() == pc);
        REQUIRE(m.x(0) == 0);
    }
    obs::PerfCounters c = m.counters;
    m.exec->reconcile_counters(c);
    CHECK(m.hart.instret() == lengths.size());
    CHECK(*m.hart.read_csr(csr::Minstret) == lengths.size());
    CHECK(c.instructions == lengths.size());
}

TEST_CASE("direct and routed paths give identical state and counters") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        Machine a({}, 4096, true), b({}, 4096, false);
        std::vector<uint32_t> prog;
        for (int i = 0; i < 400; ++i) {
            const uint32_t rd = 1 + rng() % 15, rs = 1 + rng() % 15;
            const int32_t off = static_cast<int32_t>(4 * (rng() % 64));
            switch (rng() % 4) {
            case 0: prog.push_back(enc::addi(rd, rs, static_cast<int32_t>(rng() % 2048))); break;
            case 1: prog.push_back(enc::sw(rs, 0, 0x800 + off)); break;
            case 2: prog.push_back(enc::lw(rd, 0, 0x800 + off)); break;
            default: prog.push_back(enc::lbu(rd, 0, 0x800 + off + static_cast<int32_t>(rng() % 4)));
            }
        }
        prog.push_back(enc::kEbreak);
        for (std::size_t i = 0; i < prog.size(); ++i) {
            a.poke32(static_cast<uint32_t>(4 * i), prog[i]);
            b.poke32(static_cast<uint32_t>(4 * i), prog[i]);
        }
        a.run();
        b.run();
        for (unsigned r = 0; r < 32; ++r) REQUIRE(a.x(r) == b.x(r));
        REQUIRE(std::equal(a.ram.contents().begin(), a.ram.contents().end(), b.ram.contents().begin()));
        obs::PerfCounters ca = a.counters, cb = b.counters;
        a.exec->reconcile_counters(ca);
        b.exec->reconcile_counters(cb);
        REQUIRE(ca.same_counts(cb));
        REQUIRE(ca.memory_reads > 0);
    }
}
