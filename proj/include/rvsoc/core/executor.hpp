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

#include "rvsoc/bus/bus.hpp"
#include "rvsoc/hart/hart_state.hpp"
#include "rvsoc/isa/decoder.hpp"
#include "rvsoc/obs/logger.hpp"
#include "rvsoc/periph/timer.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace rvsoc::core {

namespace cause {
constexpr uint32_t InstructionAddressMisaligned = 0;
constexpr uint32_t InstructionAccessFault = 1;
constexpr uint32_t IllegalInstruction = 2;
constexpr uint32_t Breakpoint = 3;
constexpr uint32_t LoadAddressMisaligned = 4;
constexpr uint32_t LoadAccessFault = 5;
constexpr uint32_t StoreAddressMisaligned = 6;
constexpr uint32_t StoreAccessFault = 7;
constexpr uint32_t EcallFromMachine = 11;
// interrupt codes
constexpr uint32_t MachineTimerInterrupt = 7;
} // namespace cause

struct TrapCause {
    bool is_interrupt = false;
    uint32_t code = 0;
    uint32_t tval = 0;

    uint32_t mcause() const { return (is_interrupt ? 0x80000000u : 0u) | code; }
    friend bool operator==(const TrapCause&, const TrapCause&) = default;
};

enum class HaltReason : uint8_t { Ebreak, InstructionBudget, TimeBudget, FatalBusError };

std::string_view halt_reason_name(HaltReason reason);

struct StepOutcome {
    enum class Kind : uint8_t { Retired, Trapped, Halted };

    Kind kind = Kind::Retired;
    TrapCause trap{};
    HaltReason halt = HaltReason::Ebreak;

    static StepOutcome retired() { return {}; }
    static StepOutcome trapped(TrapCause t) { return {Kind::Trapped, t, HaltReason::Ebreak}; }
    static StepOutcome halted(HaltReason r) { return {Kind::Halted, {}, r}; }

    bool is_retired() const { return kind == Kind::Retired; }
    bool is_trapped() const { return kind == Kind::Trapped; }
    bool is_halted() const { return kind == Kind::Halted; }
};

enum class EbreakMode : uint8_t { Halt, Trap };

struct ExecutorConfig {
    uint64_t cycle_ns = 10;
    EbreakMode ebreak_mode = EbreakMode::Halt;
    bool strict_align = false;
    /// Cycles charged per mnemonic; all ones by default.
    std::array<uint32_t, isa::kMnemonicCount> cycles = make_unit_cycles();

    static constexpr std::array<uint32_t, isa::kMnemonicCount> make_unit_cycles() {
        std::array<uint32_t, isa::kMnemonicCount> c{};
        c.fill(1);
        return c;
    }
};

/// M-extension arithmetic, including the architected division corner
/// cases (x/0 and INT_MIN/-1). Never traps.
uint32_t muldiv(isa::Mnemonic op, uint32_t a, uint32_t b);

/// Fetch/decode/execute engine for one hart. It is the only mutator of the
/// HartState and the only bus initiator.
class Executor {
public:
    Executor(hart::HartState& hart, bus::Bus& instruction_bus, bus::Bus& data_bus, periph::Timer& timer,
             obs::Logger& logger, ExecutorConfig config = {});

    const ExecutorConfig& config() const { return config_; }

    /// Requests the direct-access path covering `address` on both ports.
    void acquire_direct_access(uint32_t address);
    bool has_direct_access() const { return direct_.has_value(); }

    /// One step: interrupt check, fetch, decode, execute, retire.
    StepOutcome step();

    std::optional<TrapCause> check_pending_interrupt() const;
    void raise_trap(const TrapCause& cause);

    /// Folds accesses made through the direct path into `counters`.
    void reconcile_counters(obs::PerfCounters& counters);

    /// Decoded-instruction caches would be dropped here; none exist yet.
    void invalidate_decode_cache() {}

    /// Called on ECALL with the pc of the call; used for statistics dumps.
    void on_ecall(std::function<void(uint32_t)> fn) { ecall_hook_ = std::move(fn); }

private:
    enum class Flow : uint8_t { Continue, Trap, Halt };
    enum class Access : uint8_t { Ok, Misaligned, Fault };

    Flow exec_base(const isa::DecodedInstruction& d);
    Flow exec_m(const isa::DecodedInstruction& d);
    Flow exec_a(const isa::DecodedInstruction& d);
    Flow exec_zicsr(const isa::DecodedInstruction& d);
    Flow exec_system(const isa::DecodedInstruction& d);

    bool fetch(uint32_t pc, uint32_t& bits);
    Access load(uint32_t address, unsigned length, uint32_t& value);
    Access store(uint32_t address, unsigned length, uint32_t value);
    Flow memory_fault(Access a, uint32_t address, bool is_store);

    Flow trap(uint32_t code, uint32_t tval) {
        trap_ = TrapCause{false, code, tval};
        return Flow::Trap;
    }
    Flow illegal(const isa::DecodedInstruction& d) { return trap(cause::IllegalInstruction, d.raw); }
    void set_rd(const isa::DecodedInstruction& d, uint32_t value);

    hart::HartState& hart_;
    bus::Bus& ibus_;
    bus::Bus& dbus_;
    periph::Timer& timer_;
    obs::Logger& logger_;
    ExecutorConfig config_;
    std::optional<bus::DirectMemoryHandle> direct_;
    std::function<void(uint32_t)> ecall_hook_;

    // per-step scratch
    uint32_t next_pc_ = 0;
    TrapCause trap_{};
    bool fatal_ = false;
    obs::InstructionEffects effects_{};

    uint64_t direct_reads_ = 0;
    uint64_t direct_writes_ = 0;
};

} // namespace rvsoc::core
