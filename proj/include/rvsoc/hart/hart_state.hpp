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

#include "rvsoc/obs/perf.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace rvsoc::periph {
class Timer;
}

namespace rvsoc::hart {

namespace csr {
constexpr uint16_t Mstatus = 0x300;
constexpr uint16_t Misa = 0x301;
constexpr uint16_t Mie = 0x304;
constexpr uint16_t Mtvec = 0x305;
constexpr uint16_t Mscratch = 0x340;
constexpr uint16_t Mepc = 0x341;
constexpr uint16_t Mcause = 0x342;
constexpr uint16_t Mtval = 0x343;
constexpr uint16_t Mip = 0x344;
constexpr uint16_t Mcycle = 0xB00;
constexpr uint16_t Minstret = 0xB02;
constexpr uint16_t Mcycleh = 0xB80;
constexpr uint16_t Minstreth = 0xB82;
constexpr uint16_t Time = 0xC01;
constexpr uint16_t Timeh = 0xC81;
constexpr uint16_t Mvendorid = 0xF11;
constexpr uint16_t Marchid = 0xF12;
constexpr uint16_t Mimpid = 0xF13;
constexpr uint16_t Mhartid = 0xF14;
} // namespace csr

namespace mstatus {
constexpr uint32_t MIE = 1u << 3;
constexpr uint32_t MPIE = 1u << 7;
constexpr uint32_t MPP = 3u << 11;
} // namespace mstatus

constexpr uint32_t kMipMtip = 1u << 7;
constexpr uint32_t kMieMtie = 1u << 7;

// MXL=1 (32-bit) with A, C, I and M.
constexpr uint32_t kMisaValue = (1u << 30) | (1u << ('A' - 'A')) | (1u << ('C' - 'A')) | (1u << ('I' - 'A')) |
                                (1u << ('M' - 'A'));

enum class CsrAccess : uint8_t { ReadWrite, ReadOnly };

struct CsrSpec {
    uint16_t address;
    std::string_view name;
    CsrAccess access;
    uint32_t writable_mask;
    uint32_t reset_value;
};

/// The implemented CSR set; nullptr for anything else.
const CsrSpec* find_csr(uint16_t address);
std::span<const CsrSpec> implemented_csrs();

constexpr bool csr_is_read_only(uint16_t address) { return (address >> 10) == 0x3; }

enum class CsrStatus : uint8_t { Ok, IllegalAccess };

/// Architectural state of the single hart: x0..x31, pc, CSRs, the LR/SC
/// reservation and the retirement counters.
class HartState {
public:
    explicit HartState(obs::PerfCounters* counters = nullptr) : counters_(counters) {}

    /// Live sources for mip.MTIP and time/timeh.
    void attach_timer(const periph::Timer* timer) { timer_ = timer; }
    void attach_counters(obs::PerfCounters* counters) { counters_ = counters; }

    /// Zeroes registers and counters and restores CSR reset values.
    void reset(uint32_t pc = 0);

    uint32_t read_gpr(unsigned index) {
        if (counters_ != nullptr) ++counters_->register_reads;
        return gpr_[index & 31u];
    }

    void write_gpr(unsigned index, uint32_t value) {
        if (counters_ != nullptr) ++counters_->register_writes;
        if ((index & 31u) != 0) gpr_[index & 31u] = value;
    }

    /// Uncounted access for logging and inspection.
    uint32_t gpr(unsigned index) const { return gpr_[index & 31u]; }

    uint32_t pc() const { return pc_; }
    void set_pc(uint32_t pc) { pc_ = pc & ~1u; }

    std::optional<uint32_t> read_csr(uint16_t address) const;
    CsrStatus write_csr(uint16_t address, uint32_t value);

    uint32_t mstatus() const { return mstatus_ | mstatus::MPP; }
    void set_mstatus_bits(uint32_t value) { mstatus_ = value & (mstatus::MIE | mstatus::MPIE); }
    uint32_t mie() const { return mie_; }
    uint32_t mtvec() const { return mtvec_; }
    uint32_t mepc() const { return mepc_; }
    uint32_t mcause() const { return mcause_; }
    uint32_t mtval() const { return mtval_; }
    uint32_t mip() const;

    /// Trap-entry bookkeeping; kept separate from write_csr so hardware
    /// updates bypass the read-only checks.
    void set_trap_registers(uint32_t epc, uint32_t cause, uint32_t tval) {
        mepc_ = epc & ~1u;
        mcause_ = cause;
        mtval_ = tval;
    }

    std::optional<uint32_t> reservation() const { return reservation_; }
    void set_reservation(uint32_t address) { reservation_ = address; }
    void clear_reservation() { reservation_.reset(); }

    uint64_t instret() const { return instret_; }
    uint64_t cycle() const { return cycle_; }
    /// One instruction retired, costing `cycles` cycles.
    void retire(uint32_t cycles = 1) {
        ++instret_;
        cycle_ += cycles;
        if (counters_ != nullptr) ++counters_->instructions;
    }

private:
    std::array<uint32_t, 32> gpr_{};
    uint32_t pc_ = 0;

    uint32_t mstatus_ = 0; // MIE and MPIE only
    uint32_t mie_ = 0;
    uint32_t mtvec_ = 0;
    uint32_t mscratch_ = 0;
    uint32_t mepc_ = 0;
    uint32_t mcause_ = 0;
    uint32_t mtval_ = 0;

    std::optional<uint32_t> reservation_;
    uint64_t instret_ = 0;
    uint64_t cycle_ = 0;

    const periph::Timer* timer_ = nullptr;
    obs::PerfCounters* counters_ = nullptr;
};

} // namespace rvsoc::hart
