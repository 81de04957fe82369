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

#include "rvsoc/periph/trace.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace rvsoc::periph {

std::optional<TraceSinkSpec> TraceSinkSpec::parse(std::string_view text) {
    if (text == "stdout") return TraceSinkSpec{Kind::Stdout, {}};
    if (text == "capture") return TraceSinkSpec{Kind::Capture, {}};
    constexpr std::string_view file_prefix = "file:";
    if (text.starts_with(file_prefix) && text.size() > file_prefix.size())
        return TraceSinkSpec{Kind::File, std::string(text.substr(file_prefix.size()))};
    return std::nullopt;
}

Trace::Trace(const TraceSinkSpec& spec) : spec_(spec) {
    if (spec_.kind == TraceSinkSpec::Kind::File) {
        file_ = std::fopen(spec_.path.c_str(), "wb");
        if (file_ == nullptr) throw std::runtime_error(fmt::format("cannot open trace sink '{}'", spec_.path));
    }
}

Trace::~Trace() {
    flush();
    if (file_ != nullptr) std::fclose(file_);
}

void Trace::write_byte(uint8_t byte) {
    std::FILE* out = nullptr;
    switch (spec_.kind) {
    case TraceSinkSpec::Kind::Capture: captured_.push_back(static_cast<char>(byte)); return;
    case TraceSinkSpec::Kind::Stdout: out = stdout; break;
    case TraceSinkSpec::Kind::File: out = file_; break;
    }
    if (std::fputc(byte, out) == EOF && !failed_) {
        failed_ = true;
        if (warn_) warn_("trace sink write failed; further trace output may be lost");
    }
}

void Trace::flush() {
    if (spec_.kind == TraceSinkSpec::Kind::Stdout)
        std::fflush(stdout);
    else if (file_ != nullptr)
        std::fflush(file_);
}

void Trace::transport(bus::BusTransaction& txn, uint32_t offset) {
    if (txn.command != bus::Command::Write || txn.length != 1 || offset != 0) {
        txn.response = bus::Response::TargetError;
        return;
    }
    write_byte(txn.data[0]);
    txn.response = bus::Response::Ok;
}

} // namespace rvsoc::periph
