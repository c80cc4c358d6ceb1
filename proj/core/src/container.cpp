#include "container.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace nsrom::container {

static_assert(std::endian::native == std::endian::little,
              "container payload is written as native little-endian f64");

void write_file(const std::string& path, const nlohmann::json& header,
                const std::vector<double>& payload) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  const std::string h = header.dump();
  if (h.size() > 0xffffffffull) {
    throw std::runtime_error("container header too large");
  }
  const std::uint32_t len = static_cast<std::uint32_t>(h.size());
  out.write(kMagic, 8);
  out.write(reinterpret_cast<const char*>(&len), 4);
  out.write(h.data(), static_cast<std::streamsize>(h.size()));
  out.write(reinterpret_cast<const char*>(payload.data()),
            static_cast<std::streamsize>(payload.size() * sizeof(double)));
  if (!out) throw std::runtime_error("short write to '" + path + "'");
}

Blob read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw std::runtime_error("cannot open container '" + path + "'");
  const std::uint64_t size = static_cast<std::uint64_t>(in.tellg());
  in.seekg(0);

  char magic[8];
  if (size < 8 || !in.read(magic, 8)) {
    throw ParseError(0, "file too short for the 8-byte magic");
  }
  if (std::memcmp(magic, kMagic, 8) != 0) {
    throw ParseError(0, "bad magic (expected NSROMv01)");
  }
  std::uint32_t len = 0;
  if (size < 12 || !in.read(reinterpret_cast<char*>(&len), 4)) {
    throw ParseError(8, "file too short for the header length");
  }
  if (12ull + len > size) {
    throw ParseError(size, "header truncated (declared length " +
                               std::to_string(len) + ")");
  }
  std::string h(len, '\0');
  in.read(h.data(), len);

  Blob blob;
  blob.payload_offset = 12ull + len;
  try {
    blob.header = nlohmann::json::parse(h);
  } catch (const std::exception& err) {
    throw ParseError(12, std::string("header is not valid JSON: ") +
                             err.what());
  }

  const std::uint64_t payload_bytes = size - 12 - len;
  if (payload_bytes % sizeof(double) != 0) {
    throw ParseError(size, "payload truncated (size " +
                               std::to_string(payload_bytes) +
                               " is not a multiple of 8)");
  }
  blob.payload.resize(payload_bytes / sizeof(double));
  in.read(reinterpret_cast<char*>(blob.payload.data()),
          static_cast<std::streamsize>(payload_bytes));
  if (!in) throw ParseError(size, "payload read failed");
  return blob;
}

}  // namespace nsrom::container
