#include "codesign/exporter/zip.hpp"

#include <zlib.h>

#include <algorithm>
#include <limits>

#include "codesign/error.hpp"

namespace codesign::exporter {
namespace {

constexpr std::uint32_t kLocalHeader = 0x04034b50;
constexpr std::uint32_t kCentralHeader = 0x02014b50;
constexpr std::uint32_t kEndOfCentral = 0x06054b50;
constexpr std::uint16_t kDosDate = (0 << 9) | (1 << 5) | 1;  // 1980-01-01
constexpr std::uint16_t kVersion = 20;
constexpr std::uint16_t kUtf8Flag = 1u << 11;

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t crc_of(std::span<const std::uint8_t> data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  std::size_t offset = 0;
  while (offset < data.size()) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(data.size() - offset, 1u << 30));
    crc = crc32(crc, data.data() + offset, chunk);
    offset += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, "malformed archive: " + what);
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void seek(std::size_t pos) {
    if (pos > bytes_.size()) malformed("offset out of range");
    pos_ = pos;
  }
  std::size_t pos() const { return pos_; }

  std::uint16_t u16() {
    need(2);
    const auto v = static_cast<std::uint16_t>(bytes_[pos_] | (bytes_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }
  std::span<const std::uint8_t> take(std::size_t n) {
    need(n);
    auto s = bytes_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

 private:
  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) malformed("truncated");
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> write_zip(std::span<const ZipEntry> entries) {
  if (entries.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::InvalidArgument, "too many archive entries");
  }
  std::vector<std::uint8_t> out;
  std::vector<std::uint8_t> central;
  for (const auto& e : entries) {
    if (e.data.size() > std::numeric_limits<std::uint32_t>::max() || e.name.size() > 0xFFFF) {
      throw Error(ErrorCode::InvalidArgument, "archive entry '" + e.name + "' is too large");
    }
    const auto offset = static_cast<std::uint32_t>(out.size());
    const std::uint32_t crc = crc_of(e.data);
    const auto size = static_cast<std::uint32_t>(e.data.size());
    const auto name_len = static_cast<std::uint16_t>(e.name.size());

    put32(out, kLocalHeader);
    put16(out, kVersion);
    put16(out, kUtf8Flag);
    put16(out, 0);  // stored
    put16(out, 0);  // time
    put16(out, kDosDate);
    put32(out, crc);
    put32(out, size);
    put32(out, size);
    put16(out, name_len);
    put16(out, 0);
    out.insert(out.end(), e.name.begin(), e.name.end());
    out.insert(out.end(), e.data.begin(), e.data.end());

    put32(central, kCentralHeader);
    put16(central, kVersion);
    put16(central, kVersion);
    put16(central, kUtf8Flag);
    put16(central, 0);
    put16(central, 0);
    put16(central, kDosDate);
    put32(central, crc);
    put32(central, size);
    put32(central, size);
    put16(central, name_len);
    put16(central, 0);  // extra
    put16(central, 0);  // comment
    put16(central, 0);  // disk
    put16(central, 0);  // internal attributes
    put32(central, 0);  // external attributes
    put32(central, offset);
    central.insert(central.end(), e.name.begin(), e.name.end());
  }
  if (out.size() + central.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::InvalidArgument, "archive exceeds 4 GiB");
  }
  const auto central_offset = static_cast<std::uint32_t>(out.size());
  out.insert(out.end(), central.begin(), central.end());
  put32(out, kEndOfCentral);
  put16(out, 0);
  put16(out, 0);
  put16(out, static_cast<std::uint16_t>(entries.size()));
  put16(out, static_cast<std::uint16_t>(entries.size()));
  put32(out, static_cast<std::uint32_t>(central.size()));
  put32(out, central_offset);
  put16(out, 0);
  return out;
}

std::vector<ZipEntry> read_zip(std::span<const std::uint8_t> archive) {
  if (archive.size() < 22) malformed("too short");
  Reader r(archive);
  r.seek(archive.size() - 22);
  if (r.u32() != kEndOfCentral) malformed("end of central directory not found (comments unsupported)");
  r.u16();
  r.u16();
  const std::uint16_t count = r.u16();
  if (r.u16() != count) malformed("multi-disk archives unsupported");
  r.u32();
  const std::uint32_t central_offset = r.u32();

  std::vector<ZipEntry> entries;
  entries.reserve(count);
  r.seek(central_offset);
  for (std::uint16_t i = 0; i < count; ++i) {
    if (r.u32() != kCentralHeader) malformed("bad central header");
    r.u16();
    r.u16();
    r.u16();
    if (r.u16() != 0) malformed("only stored entries are supported");
    r.u16();
    r.u16();
    const std::uint32_t crc = r.u32();
    const std::uint32_t compressed = r.u32();
    const std::uint32_t size = r.u32();
    const std::uint16_t name_len = r.u16();
    const std::uint16_t extra_len = r.u16();
    const std::uint16_t comment_len = r.u16();
    r.u16();
    r.u16();
    r.u32();
    const std::uint32_t local_offset = r.u32();
    auto name = r.take(name_len);
    r.take(extra_len);
    r.take(comment_len);
    if (compressed != size) malformed("size mismatch");

    const std::size_t resume = r.pos();
    r.seek(local_offset);
    if (r.u32() != kLocalHeader) malformed("bad local header");
    r.take(22);
    const std::uint16_t local_name_len = r.u16();
    const std::uint16_t local_extra_len = r.u16();
    r.take(local_name_len);
    r.take(local_extra_len);
    auto data = r.take(size);
    if (crc_of(data) != crc) malformed("CRC mismatch");
    entries.push_back({std::string(name.begin(), name.end()), {data.begin(), data.end()}});
    r.seek(resume);
  }
  return entries;
}

}  // namespace codesign::exporter
