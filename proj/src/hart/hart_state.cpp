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

#include "rvsoc/hart/hart_state.hpp"

#include "rvsoc/periph/timer.hpp"

#include <algorithm>

namespace rvsoc::hart {

namespace {

using enum CsrAccess;

constexpr std::array kCsrs = {
    CsrSpec{csr::Mstatus, "mstatus", ReadWrite, mstatus::MIE | mstatus::MPIE, mstatus::MPP},
    CsrSpec{csr::Misa, "misa", ReadWrite, 0, kMisaValue},
    CsrSpec{csr::Mie, "mie", ReadWrite, kMieMtie, 0},
    CsrSpec{csr::Mtvec, "mtvec", ReadWrite, 0xFFFFFFFFu, 0},
    CsrSpec{csr::Mscratch, "mscratch", ReadWrite, 0xFFFFFFFFu, 0},
    CsrSpec{csr::Mepc, "mepc", ReadWrite, ~1u, 0},
    CsrSpec{csr::Mcause, "mcause", ReadWrite, 0xFFFFFFFFu, 0},
    CsrSpec{csr::Mtval, "mtval", ReadWrite, 0xFFFFFFFFu, 0},
    CsrSpec{csr::Mip, "mip", ReadWrite, 0, 0},
    CsrSpec{csr::Mcycle, "mcycle", ReadWrite, 0, 0},
    CsrSpec{csr::Minstret, "minstret", ReadWrite, 0, 0},
    CsrSpec{csr::Mcycleh, "mcycleh", ReadWrite, 0, 0},
    CsrSpec{csr::Minstreth, "minstreth", ReadWrite, 0, 0},
    CsrSpec{csr::Time, "time", ReadOnly, 0, 0},
    CsrSpec{csr::Timeh, "timeh", ReadOnly, 0, 0},
    CsrSpec{csr::Mvendorid, "mvendorid", ReadOnly, 0, 0},
    CsrSpec{csr::Marchid, "marchid", ReadOnly, 0, 0},
    CsrSpec{csr::Mimpid, "mimpid", ReadOnly, 0, 0},
    CsrSpec{csr::Mhartid, "mhartid", ReadOnly, 0, 0},
};

// mtvec.MODE values 2 and 3 are reserved and read back as direct mode.
constexpr uint32_t legalize_mtvec(uint32_t value) {
    return (value & 0x3u) >= 2 ? (value & ~0x3u) : value;
}

} // namespace

const CsrSpec* find_csr(uint16_t address) {
    const auto it = std::find_if(kCsrs.begin(), kCsrs.end(), [&](const CsrSpec& s) { return s.address == address; });
    return it == kCsrs.end() ? nullptr : &*it;
}

std::span<const CsrSpec> implemented_csrs() { return kCsrs; }

void HartState::reset(uint32_t pc) {
    gpr_.fill(0);
    pc_ = pc & ~1u;
    mstatus_ = 0;
    mie_ = 0;
    mtvec_ = 0;
    mscratch_ = 0;
    mepc_ = 0;
    mcause_ = 0;
    mtval_ = 0;
    reservation_.reset();
    instret_ = 0;
    cycle_ = 0;
}

uint32_t HartState::mip() const { return (timer_ != nullptr && timer_->irq_pending()) ? kMipMtip : 0u; }

std::optional<uint32_t> HartState::read_csr(uint16_t address) const {
    switch (address) {
    case csr::Mstatus: return mstatus();
    case csr::Misa: return kMisaValue;
    case csr::Mie: return mie_;
    case csr::Mtvec: return mtvec_;
    case csr::Mscratch: return mscratch_;
    case csr::Mepc: return mepc_;
    case csr::Mcause: return mcause_;
    case csr::Mtval: return mtval_;
    case csr::Mip: return mip();
    case csr::Mcycle: return static_cast<uint32_t>(cycle_);
    case csr::Mcycleh: return static_cast<uint32_t>(cycle_ >> 32);
    case csr::Minstret: return static_cast<uint32_t>(instret_);
    case csr::Minstreth: return static_cast<uint32_t>(instret_ >> 32);
    case csr::Time: return timer_ != nullptr ? static_cast<uint32_t>(timer_->mtime()) : 0u;
    case csr::Timeh: return timer_ != nullptr ? static_cast<uint32_t>(timer_->mtime() >> 32) : 0u;
    case csr::Mvendorid:
    case csr::Marchid:
    case csr::Mimpid:
    case csr::Mhartid: return 0u;
    default: return std::nullopt;
    }
}

CsrStatus HartState::write_csr(uint16_t address, uint32_t value) {
    const CsrSpec* spec = find_csr(address);
    if (spec == nullptr || spec->access == CsrAccess::ReadOnly || csr_is_read_only(address))
        return CsrStatus::IllegalAccess;
    const uint32_t v = value & spec->writable_mask;
    switch (address) {
    case csr::Mstatus: mstatus_ = v; break;
    case csr::Mie: mie_ = v; break;
    case csr::Mtvec: mtvec_ = legalize_mtvec(v); break;
    case csr::Mscratch: mscratch_ = v; break;
    case csr::Mepc: mepc_ = v; break;
    case csr::Mcause: mcause_ = v; break;
    case csr::Mtval: mtval_ = v; break;
    default: break; // misa, mip and the counters ignore writes
    }
    return CsrStatus::Ok;
}

} // namespace rvsoc::hart
