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

#include <fmt/format.h>

#include <algorithm>
#include <limits>

namespace rvsoc::core {

using isa::DecodedInstruction;
using isa::Mnemonic;

std::string_view halt_reason_name(HaltReason reason) {
    switch (reason) {
    case HaltReason::Ebreak: return "ebreak";
    case HaltReason::InstructionBudget: return "instruction budget reached";
    case HaltReason::TimeBudget: return "time budget reached";
    case HaltReason::FatalBusError: return "fatal bus error";
    }
    return "unknown";
}

uint32_t muldiv(Mnemonic op, uint32_t a, uint32_t b) {
    const auto sa = static_cast<int32_t>(a);
    const auto sb = static_cast<int32_t>(b);
    switch (op) {
    case Mnemonic::Mul: return a * b;
    case Mnemonic::Mulh:
        return static_cast<uint32_t>(static_cast<uint64_t>(static_cast<int64_t>(sa) * static_cast<int64_t>(sb)) >> 32);
    case Mnemonic::Mulhsu:
        return static_cast<uint32_t>(static_cast<uint64_t>(static_cast<int64_t>(sa) * static_cast<int64_t>(b)) >> 32);
    case Mnemonic::Mulhu: return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) >> 32);
    case Mnemonic::Div:
        if (b == 0) return 0xFFFFFFFFu;
        if (sa == std::numeric_limits<int32_t>::min() && sb == -1) return a;
        return static_cast<uint32_t>(sa / sb);
    case Mnemonic::Divu: return b == 0 ? 0xFFFFFFFFu : a / b;
    case Mnemonic::Rem:
        if (b == 0) return a;
        if (sa == std::numeric_limits<int32_t>::min() && sb == -1) return 0;
        return static_cast<uint32_t>(sa % sb);
    case Mnemonic::Remu: return b == 0 ? a : a % b;
    default: return 0;
    }
}

Executor::Executor(hart::HartState& hart, bus::Bus& instruction_bus, bus::Bus& data_bus, periph::Timer& timer,
                   obs::Logger& logger, ExecutorConfig config)
    : hart_(hart), ibus_(instruction_bus), dbus_(data_bus), timer_(timer), logger_(logger), config_(config) {}

void Executor::acquire_direct_access(uint32_t address) {
    auto i = ibus_.direct_access(address);
    auto d = dbus_.direct_access(address);
    if (i && d && i->base == d->base && i->storage.data() == d->storage.data())
        direct_ = i;
    else
        direct_.reset();
}

void Executor::reconcile_counters(obs::PerfCounters& counters) {
    counters.memory_reads += direct_reads_;
    counters.memory_writes += direct_writes_;
    direct_reads_ = 0;
    direct_writes_ = 0;
}

std::optional<TrapCause> Executor::check_pending_interrupt() const {
    if ((hart_.mstatus() & hart::mstatus::MIE) == 0) return std::nullopt;
    if ((hart_.mie() & hart::kMieMtie) == 0) return std::nullopt;
    if ((hart_.mip() & hart::kMipMtip) == 0) return std::nullopt;
    return TrapCause{true, cause::MachineTimerInterrupt, 0};
}

void Executor::raise_trap(const TrapCause& c) {
    const uint32_t status = hart_.mstatus();
    const uint32_t mpie = (status & hart::mstatus::MIE) ? hart::mstatus::MPIE : 0u;
    hart_.set_mstatus_bits(mpie);
    hart_.set_trap_registers(hart_.pc(), c.mcause(), c.tval);
    hart_.clear_reservation();

    const uint32_t tvec = hart_.mtvec();
    const uint32_t base = tvec & ~0x3u;
    const bool vectored = (tvec & 0x3u) == 1;
    hart_.set_pc(vectored && c.is_interrupt ? base + 4 * c.code : base);

    if (logger_.enabled(obs::LogLevel::Debug)) {
        logger_.log(obs::LogLevel::Debug, timer_.mtime(),
                    fmt::format("{} {} mepc={:08x} mtval={:08x} -> pc={:08x}",
                                c.is_interrupt ? "interrupt" : "exception", c.code, hart_.mepc(), c.tval,
                                hart_.pc()));
    }
}

bool Executor::fetch(uint32_t pc, uint32_t& bits) {
    if (direct_ && direct_->contains(pc, 2)) {
        const uint8_t* p = direct_->at(pc);
        bits = static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8);
        if (!isa::is_compressed(bits)) {
            if (!direct_->contains(pc, 4)) return false;
            bits |= (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
            ++direct_reads_;
        }
        // One count per 16-bit parcel, as on the routed path.
        ++direct_reads_;
        return true;
    }
    auto lo = bus::BusTransaction::read(pc, 2);
    ibus_.route(lo);
    if (!lo.ok()) return false;
    bits = static_cast<uint32_t>(lo.value());
    if (!isa::is_compressed(bits)) {
        auto hi = bus::BusTransaction::read(pc + 2, 2);
        ibus_.route(hi);
        if (!hi.ok()) return false;
        bits |= static_cast<uint32_t>(hi.value()) << 16;
    }
    return true;
}

Executor::Access Executor::load(uint32_t address, unsigned length, uint32_t& value) {
    if (config_.strict_align && (address & (length - 1)) != 0) return Access::Misaligned;
    effects_.mem_address = address;
    if (direct_ && direct_->contains(address, length)) {
        const uint8_t* p = direct_->at(address);
        uint32_t v = 0;
        for (unsigned i = 0; i < length; ++i) v |= static_cast<uint32_t>(p[i]) << (8 * i);
        value = v;
        ++direct_reads_;
        return Access::Ok;
    }
    auto txn = bus::BusTransaction::read(address, static_cast<uint8_t>(length));
    dbus_.route(txn);
    if (!txn.ok()) return Access::Fault;
    value = static_cast<uint32_t>(txn.value());
    return Access::Ok;
}

Executor::Access Executor::store(uint32_t address, unsigned length, uint32_t value) {
    if (config_.strict_align && (address & (length - 1)) != 0) return Access::Misaligned;
    effects_.mem_address = address;
    hart_.clear_reservation();
    if (direct_ && direct_->contains(address, length)) {
        uint8_t* p = direct_->at(address);
        for (unsigned i = 0; i < length; ++i) p[i] = static_cast<uint8_t>(value >> (8 * i));
        ++direct_writes_;
        return Access::Ok;
    }
    auto txn = bus::BusTransaction::write(address, static_cast<uint8_t>(length), value);
    dbus_.route(txn);
    return txn.ok() ? Access::Ok : Access::Fault;
}

Executor::Flow Executor::memory_fault(Access a, uint32_t address, bool is_store) {
    if (a == Access::Misaligned)
        return trap(is_store ? cause::StoreAddressMisaligned : cause::LoadAddressMisaligned, address);
    if (config_.strict_align) {
        fatal_ = true;
        if (logger_.enabled(obs::LogLevel::Error))
            logger_.log(obs::LogLevel::Error, timer_.mtime(),
                        fmt::format("bus error on {} at {:08x} (pc {:08x})", is_store ? "store" : "load", address,
                                    hart_.pc()));
        return Flow::Halt;
    }
    return trap(is_store ? cause::StoreAccessFault : cause::LoadAccessFault, address);
}

void Executor::set_rd(const DecodedInstruction& d, uint32_t value) {
    hart_.write_gpr(d.rd, value);
    if (d.rd != 0) {
        effects_.rd = d.rd;
        effects_.rd_value = value;
    }
}

StepOutcome Executor::step() {
    if (auto irq = check_pending_interrupt()) {
        raise_trap(*irq);
        return StepOutcome::trapped(*irq);
    }

    const uint32_t pc = hart_.pc();
    uint32_t bits = 0;
    if (!fetch(pc, bits)) {
        if (config_.strict_align) {
            if (logger_.enabled(obs::LogLevel::Error))
                logger_.log(obs::LogLevel::Error, timer_.mtime(), fmt::format("fetch bus error at {:08x}", pc));
            return StepOutcome::halted(HaltReason::FatalBusError);
        }
        const TrapCause c{false, cause::InstructionAccessFault, pc};
        raise_trap(c);
        return StepOutcome::trapped(c);
    }

    const DecodedInstruction d = isa::decode(bits);
    next_pc_ = pc + d.length();
    effects_ = {};
    fatal_ = false;

    Flow flow = Flow::Continue;
    switch (d.mnemonic) {
    case Mnemonic::Illegal: flow = illegal(d); break;
    case Mnemonic::Mul:
    case Mnemonic::Mulh:
    case Mnemonic::Mulhsu:
    case Mnemonic::Mulhu:
    case Mnemonic::Div:
    case Mnemonic::Divu:
    case Mnemonic::Rem:
    case Mnemonic::Remu: flow = exec_m(d); break;
    case Mnemonic::LrW:
    case Mnemonic::ScW:
    case Mnemonic::AmoswapW:
    case Mnemonic::AmoaddW:
    case Mnemonic::AmoxorW:
    case Mnemonic::AmoandW:
    case Mnemonic::AmoorW:
    case Mnemonic::AmominW:
    case Mnemonic::AmomaxW:
    case Mnemonic::AmominuW:
    case Mnemonic::AmomaxuW: flow = exec_a(d); break;
    case Mnemonic::Csrrw:
    case Mnemonic::Csrrs:
    case Mnemonic::Csrrc:
    case Mnemonic::Csrrwi:
    case Mnemonic::Csrrsi:
    case Mnemonic::Csrrci: flow = exec_zicsr(d); break;
    case Mnemonic::Ecall:
    case Mnemonic::Ebreak:
    case Mnemonic::Mret:
    case Mnemonic::Wfi:
    case Mnemonic::Fence:
    case Mnemonic::FenceI: flow = exec_system(d); break;
    default: flow = exec_base(d); break;
    }

    if (flow == Flow::Trap) {
        raise_trap(trap_);
        if (trap_.code == cause::EcallFromMachine && ecall_hook_) ecall_hook_(pc);
        return StepOutcome::trapped(trap_);
    }
    if (flow == Flow::Halt && fatal_) return StepOutcome::halted(HaltReason::FatalBusError);

    const uint32_t cycles = config_.cycles[static_cast<std::size_t>(d.mnemonic)];
    hart_.retire(cycles);
    timer_.tick(static_cast<uint64_t>(cycles) * config_.cycle_ns);
    if (logger_.enabled(obs::LogLevel::Trace)) logger_.record_instruction(timer_.mtime(), pc, d, effects_);

    if (flow == Flow::Halt) return StepOutcome::halted(HaltReason::Ebreak);
    hart_.set_pc(next_pc_);
    return StepOutcome::retired();
}

Executor::Flow Executor::exec_base(const DecodedInstruction& d) {
    const uint32_t pc = hart_.pc();
    const auto imm = static_cast<uint32_t>(d.imm);

    auto jump = [&](uint32_t target) {
        if ((target & 1u) != 0) return trap(cause::InstructionAddressMisaligned, target);
        next_pc_ = target;
        return Flow::Continue;
    };
    auto branch = [&](bool taken) { return taken ? jump(pc + imm) : Flow::Continue; };
    auto do_load = [&](unsigned len, bool sign) {
        const uint32_t addr = hart_.read_gpr(d.rs1) + imm;
        uint32_t v = 0;
        const Access a = load(addr, len, v);
        if (a != Access::Ok) return memory_fault(a, addr, false);
        if (sign && len < 4) {
            const unsigned shift = 32 - 8 * len;
            v = static_cast<uint32_t>(static_cast<int32_t>(v << shift) >> shift);
        }
        set_rd(d, v);
        return Flow::Continue;
    };
    auto do_store = [&](unsigned len) {
        const uint32_t addr = hart_.read_gpr(d.rs1) + imm;
        const uint32_t v = hart_.read_gpr(d.rs2);
        const Access a = store(addr, len, v);
        if (a != Access::Ok) return memory_fault(a, addr, true);
        return Flow::Continue;
    };
    auto op_imm = [&](uint32_t result) {
        set_rd(d, result);
        return Flow::Continue;
    };

    switch (d.mnemonic) {
    case Mnemonic::Lui: return op_imm(imm);
    case Mnemonic::Auipc: return op_imm(pc + imm);
    case Mnemonic::Jal: {
        const Flow f = jump(pc + imm);
        if (f == Flow::Continue) set_rd(d, pc + d.length());
        return f;
    }
    case Mnemonic::Jalr: {
        const uint32_t target = (hart_.read_gpr(d.rs1) + imm) & ~1u;
        const Flow f = jump(target);
        if (f == Flow::Continue) set_rd(d, pc + d.length());
        return f;
    }
    case Mnemonic::Beq: return branch(hart_.read_gpr(d.rs1) == hart_.read_gpr(d.rs2));
    case Mnemonic::Bne: return branch(hart_.read_gpr(d.rs1) != hart_.read_gpr(d.rs2));
    case Mnemonic::Blt:
        return branch(static_cast<int32_t>(hart_.read_gpr(d.rs1)) < static_cast<int32_t>(hart_.read_gpr(d.rs2)));
    case Mnemonic::Bge:
        return branch(static_cast<int32_t>(hart_.read_gpr(d.rs1)) >= static_cast<int32_t>(hart_.read_gpr(d.rs2)));
    case Mnemonic::Bltu: return branch(hart_.read_gpr(d.rs1) < hart_.read_gpr(d.rs2));
    case Mnemonic::Bgeu: return branch(hart_.read_gpr(d.rs1) >= hart_.read_gpr(d.rs2));
    case Mnemonic::Lb: return do_load(1, true);
    case Mnemonic::Lh: return do_load(2, true);
    case Mnemonic::Lw: return do_load(4, false);
    case Mnemonic::Lbu: return do_load(1, false);
    case Mnemonic::Lhu: return do_load(2, false);
    case Mnemonic::Sb: return do_store(1);
    case Mnemonic::Sh: return do_store(2);
    case Mnemonic::Sw: return do_store(4);
    default: break;
    }

    const uint32_t a = hart_.read_gpr(d.rs1);
    switch (d.mnemonic) {
    case Mnemonic::Addi: return op_imm(a + imm);
    case Mnemonic::Slti: return op_imm(static_cast<int32_t>(a) < d.imm ? 1u : 0u);
    case Mnemonic::Sltiu: return op_imm(a < imm ? 1u : 0u);
    case Mnemonic::Xori: return op_imm(a ^ imm);
    case Mnemonic::Ori: return op_imm(a | imm);
    case Mnemonic::Andi: return op_imm(a & imm);
    case Mnemonic::Slli: return op_imm(a << (imm & 31u));
    case Mnemonic::Srli: return op_imm(a >> (imm & 31u));
    case Mnemonic::Srai: return op_imm(static_cast<uint32_t>(static_cast<int32_t>(a) >> (imm & 31u)));
    default: break;
    }

    const uint32_t b = hart_.read_gpr(d.rs2);
    switch (d.mnemonic) {
    case Mnemonic::Add: return op_imm(a + b);
    case Mnemonic::Sub: return op_imm(a - b);
    case Mnemonic::Sll: return op_imm(a << (b & 31u));
    case Mnemonic::Slt: return op_imm(static_cast<int32_t>(a) < static_cast<int32_t>(b) ? 1u : 0u);
    case Mnemonic::Sltu: return op_imm(a < b ? 1u : 0u);
    case Mnemonic::Xor: return op_imm(a ^ b);
    case Mnemonic::Srl: return op_imm(a >> (b & 31u));
    case Mnemonic::Sra: return op_imm(static_cast<uint32_t>(static_cast<int32_t>(a) >> (b & 31u)));
    case Mnemonic::Or: return op_imm(a | b);
    case Mnemonic::And: return op_imm(a & b);
    default: return illegal(d);
    }
}

Executor::Flow Executor::exec_m(const DecodedInstruction& d) {
    const uint32_t a = hart_.read_gpr(d.rs1);
    const uint32_t b = hart_.read_gpr(d.rs2);
    set_rd(d, muldiv(d.mnemonic, a, b));
    return Flow::Continue;
}

Executor::Flow Executor::exec_a(const DecodedInstruction& d) {
    const uint32_t addr = hart_.read_gpr(d.rs1);
    const bool is_lr = d.mnemonic == Mnemonic::LrW;
    if ((addr & 3u) != 0) return trap(is_lr ? cause::LoadAddressMisaligned : cause::StoreAddressMisaligned, addr);

    if (is_lr) {
        uint32_t v = 0;
        const Access a = load(addr, 4, v);
        if (a != Access::Ok) return memory_fault(a, addr, false);
        set_rd(d, v);
        hart_.set_reservation(addr);
        return Flow::Continue;
    }

    const uint32_t src = hart_.read_gpr(d.rs2);
    if (d.mnemonic == Mnemonic::ScW) {
        const auto r = hart_.reservation();
        if (!r || *r != addr) {
            hart_.clear_reservation();
            set_rd(d, 1);
            return Flow::Continue;
        }
        const Access a = store(addr, 4, src);
        if (a != Access::Ok) return memory_fault(a, addr, true);
        set_rd(d, 0);
        return Flow::Continue;
    }

    uint32_t old = 0;
    Access acc = load(addr, 4, old);
    // AMO faults are reported as store/AMO faults.
    if (acc != Access::Ok) return memory_fault(acc, addr, true);
    const auto so = static_cast<int32_t>(old);
    const auto ss = static_cast<int32_t>(src);
    uint32_t result = 0;
    switch (d.mnemonic) {
    case Mnemonic::AmoswapW: result = src; break;
    case Mnemonic::AmoaddW: result = old + src; break;
    case Mnemonic::AmoxorW: result = old ^ src; break;
    case Mnemonic::AmoandW: result = old & src; break;
    case Mnemonic::AmoorW: result = old | src; break;
    case Mnemonic::AmominW: result = static_cast<uint32_t>(std::min(so, ss)); break;
    case Mnemonic::AmomaxW: result = static_cast<uint32_t>(std::max(so, ss)); break;
    case Mnemonic::AmominuW: result = std::min(old, src); break;
    case Mnemonic::AmomaxuW: result = std::max(old, src); break;
    default: return illegal(d);
    }
    acc = store(addr, 4, result);
    if (acc != Access::Ok) return memory_fault(acc, addr, true);
    set_rd(d, old);
    return Flow::Continue;
}

Executor::Flow Executor::exec_zicsr(const DecodedInstruction& d) {
    const bool imm_form =
        d.mnemonic == Mnemonic::Csrrwi || d.mnemonic == Mnemonic::Csrrsi || d.mnemonic == Mnemonic::Csrrci;
    const uint32_t operand = imm_form ? static_cast<uint32_t>(d.imm) : hart_.read_gpr(d.rs1);

    if (d.mnemonic == Mnemonic::Csrrw || d.mnemonic == Mnemonic::Csrrwi) {
        uint32_t old = 0;
        if (d.rd != 0) {
            const auto v = hart_.read_csr(d.csr);
            if (!v) return illegal(d);
            old = *v;
        }
        if (hart_.write_csr(d.csr, operand) != hart::CsrStatus::Ok) return illegal(d);
        if (d.rd != 0) set_rd(d, old);
        return Flow::Continue;
    }

    const auto v = hart_.read_csr(d.csr);
    if (!v) return illegal(d);
    // rs1 == x0 (or a zero immediate) reads without writing.
    const bool writes = imm_form ? operand != 0 : d.rs1 != 0;
    if (writes) {
        const bool set = d.mnemonic == Mnemonic::Csrrs || d.mnemonic == Mnemonic::Csrrsi;
        const uint32_t nv = set ? (*v | operand) : (*v & ~operand);
        if (hart_.write_csr(d.csr, nv) != hart::CsrStatus::Ok) return illegal(d);
    }
    set_rd(d, *v);
    return Flow::Continue;
}

Executor::Flow Executor::exec_system(const DecodedInstruction& d) {
    switch (d.mnemonic) {
    case Mnemonic::Ecall: return trap(cause::EcallFromMachine, 0);
    case Mnemonic::Ebreak:
        if (config_.ebreak_mode == EbreakMode::Trap) return trap(cause::Breakpoint, hart_.pc());
        return Flow::Halt;
    case Mnemonic::Mret: {
        const uint32_t status = hart_.mstatus();
        const uint32_t mie = (status & hart::mstatus::MPIE) ? hart::mstatus::MIE : 0u;
        hart_.set_mstatus_bits(mie | hart::mstatus::MPIE);
        next_pc_ = hart_.mepc();
        return Flow::Continue;
    }
    case Mnemonic::Wfi:
        if ((hart_.mie() & hart::kMieMtie) != 0 && timer_.mtimecmp() != periph::Timer::kFarFuture)
            timer_.advance_to(timer_.mtimecmp());
        return Flow::Continue;
    case Mnemonic::FenceI: invalidate_decode_cache(); return Flow::Continue;
    case Mnemonic::Fence: return Flow::Continue;
    default: return illegal(d);
    }
}

} // namespace rvsoc::core
