#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace codesign::exporter {

struct ZipEntry {
  std::string name;
  std::vector<std::uint8_t> data;

  friend bool operator==(const ZipEntry&, const ZipEntry&) = default;
};

/// Writes an uncompressed (stored) archive in entry order. Timestamps are
/// pinned to 1980-01-01 00:00 and no extra fields are emitted, so the
/// output depends only on names and contents.
std::vector<std::uint8_t> write_zip(std::span<const ZipEntry> entries);

/// Reads archives produced by write_zip (stored entries only) and checks
/// every CRC. Throws Error(InvalidArgument) on anything else.
std::vector<ZipEntry> read_zip(std::span<const std::uint8_t> archive);

}  // namespace codesign::exporter
