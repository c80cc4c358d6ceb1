#pragma once

// NSROMv01 binary container, shared by snapshot sets, POD bases and
// regressor models: 8-byte magic, little-endian u32 header length, UTF-8
// JSON header, then a raw little-endian f64 payload.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace nsrom::container {

inline constexpr char kMagic[8] = {'N', 'S', 'R', 'O', 'M', 'v', '0', '1'};

struct ParseError : std::runtime_error {
  std::uint64_t offset;
  ParseError(std::uint64_t off, const std::string& what)
      : std::runtime_error("container parse error at byte " +
                           std::to_string(off) + ": " + what),
        offset(off) {}
};

void write_file(const std::string& path, const nlohmann::json& header,
                const std::vector<double>& payload);

struct Blob {
  nlohmann::json header;
  std::vector<double> payload;
  std::uint64_t payload_offset = 0;  // byte offset where the payload starts
};

Blob read_file(const std::string& path);

}  // namespace nsrom::container
