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

#include "rvsoc/memory/intel_hex.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>

namespace rvsoc::memory {

namespace {

enum RecordType : uint8_t {
    Data = 0x00,
    EndOfFile = 0x01,
    ExtendedSegment = 0x02,
    StartSegment = 0x03,
    ExtendedLinear = 0x04,
    StartLinear = 0x05,
};

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

std::vector<uint8_t> decode_record(std::string_view line, std::size_t lineno) {
    if (line.front() != ':') throw HexError(HexErrorKind::MalformedRecord, lineno, "record does not start with ':'");
    line.remove_prefix(1);
    if (line.size() % 2 != 0 || line.size() < 10)
        throw HexError(HexErrorKind::MalformedRecord, lineno, "truncated record");
    std::vector<uint8_t> bytes;
    bytes.reserve(line.size() / 2);
    for (std::size_t i = 0; i < line.size(); i += 2) {
        const int hi = hex_digit(line[i]);
        const int lo = hex_digit(line[i + 1]);
        if (hi < 0 || lo < 0) throw HexError(HexErrorKind::MalformedRecord, lineno, "non-hex character");
        bytes.push_back(static_cast<uint8_t>((hi << 4) | lo));
    }
    if (bytes.size() != static_cast<std::size_t>(bytes[0]) + 5)
        throw HexError(HexErrorKind::MalformedRecord, lineno, "byte count does not match record length");
    uint8_t sum = 0;
    for (uint8_t b : bytes) sum = static_cast<uint8_t>(sum + b);
    if (sum != 0) throw HexError(HexErrorKind::ChecksumMismatch, lineno, "checksum mismatch");
    return bytes;
}

} // namespace

std::string_view hex_error_name(HexErrorKind kind) {
    switch (kind) {
    case HexErrorKind::ChecksumMismatch: return "checksum-mismatch";
    case HexErrorKind::MalformedRecord: return "malformed-record";
    case HexErrorKind::AddressOutOfRange: return "address-out-of-range";
    case HexErrorKind::MissingEof: return "missing-EOF";
    }
    return "unknown";
}

HexError::HexError(HexErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error(fmt::format("{} at line {}: {}", hex_error_name(kind), line, detail)), kind_(kind),
      line_(line) {}

LoadResult load_hex(std::string_view text, Ram& ram, uint32_t ram_base) {
    LoadResult result;
    uint32_t segment_base = 0;
    uint32_t linear_base = 0;
    bool seen_eof = false;
    std::size_t lineno = 0;
    std::size_t ignored_after_eof = 0;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (seen_eof) {
            ++ignored_after_eof;
            continue;
        }

        const auto rec = decode_record(line, lineno);
        const uint8_t count = rec[0];
        const uint32_t offset = (static_cast<uint32_t>(rec[1]) << 8) | rec[2];
        const uint8_t type = rec[3];
        const auto payload = std::span<const uint8_t>(rec).subspan(4, count);
        auto expect_count = [&](uint8_t n) {
            if (count != n)
                throw HexError(HexErrorKind::MalformedRecord, lineno,
                               fmt::format("record type {:02x} needs {} data bytes", type, n));
        };
        auto be = [&](std::size_t i, std::size_t n) {
            uint32_t v = 0;
            for (std::size_t k = 0; k < n; ++k) v = (v << 8) | payload[i + k];
            return v;
        };

        switch (type) {
        case Data: {
            const uint64_t address = static_cast<uint64_t>(linear_base) + segment_base + offset;
            if (address < ram_base || address - ram_base + count > ram.size())
                throw HexError(HexErrorKind::AddressOutOfRange, lineno,
                               fmt::format("data at 0x{:08x} outside RAM", address));
            ram.write(static_cast<uint32_t>(address - ram_base), payload);
            result.bytes_loaded += count;
            break;
        }
        case EndOfFile:
            expect_count(0);
            seen_eof = true;
            break;
        case ExtendedSegment:
            expect_count(2);
            segment_base = be(0, 2) << 4;
            linear_base = 0;
            break;
        case ExtendedLinear:
            expect_count(2);
            linear_base = be(0, 2) << 16;
            segment_base = 0;
            break;
        case StartSegment:
            expect_count(4);
            result.entry_pc = (be(0, 2) << 4) + be(2, 2);
            break;
        case StartLinear:
            expect_count(4);
            result.entry_pc = be(0, 4);
            break;
        default:
            throw HexError(HexErrorKind::MalformedRecord, lineno, fmt::format("unknown record type {:02x}", type));
        }
    }
    if (!seen_eof) throw HexError(HexErrorKind::MissingEof, lineno, "no end-of-file record");
    if (ignored_after_eof > 0)
        result.warnings.push_back(fmt::format("{} record(s) after end-of-file ignored", ignored_after_eof));
    return result;
}

LoadResult load_hex_file(const std::string& path, Ram& ram, uint32_t ram_base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(fmt::format("cannot open HEX file '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_hex(ss.str(), ram, ram_base);
}

} // namespace rvsoc::memory
