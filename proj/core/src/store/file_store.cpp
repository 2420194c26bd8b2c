#include "codesign/store/file_store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <mutex>
#include <sstream>

#include "codesign/error.hpp"
#include "codesign/util/canonical_json.hpp"

namespace codesign::store {
namespace fs = std::filesystem;

namespace {

[[noreturn]] void storage_failure(const std::string& what) {
  throw Error(ErrorCode::StorageError, what + ": " + std::strerror(errno));
}

std::string encode_segment(std::string_view segment) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (std::size_t i = 0; i < segment.size(); ++i) {
    const auto c = static_cast<unsigned char>(segment[i]);
    const bool plain = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                       c == '-' || c == '_' || (c == '.' && i != 0);
    if (plain) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0x0F]);
    }
  }
  return out.empty() ? std::string("%") : out;
}

fs::path encode_key(const fs::path& root, const std::string& key, std::string_view extension) {
  fs::path path = root;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = key.find('/', start);
    const bool last = slash == std::string::npos;
    std::string segment = encode_segment(key.substr(start, last ? std::string::npos : slash - start));
    if (last) {
      path /= segment + std::string(extension);
      return path;
    }
    path /= segment;
    start = slash + 1;
  }
}

void write_all(int fd, const char* data, std::size_t size, const std::string& what) {
  while (size > 0) {
    const ssize_t n = ::write(fd, data, size);
    if (n < 0) {
      if (errno == EINTR) continue;
      storage_failure(what);
    }
    data += n;
    size -= static_cast<std::size_t>(n);
  }
}

// Write-then-rename so readers of the materialized tree never see a torn file.
void atomic_write_file(const fs::path& path, const char* data, std::size_t size, bool sync) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorCode::StorageError, "create " + path.parent_path().string() + ": " + ec.message());
  const fs::path tmp = path.string() + ".tmp";
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) storage_failure("open " + tmp.string());
  write_all(fd, data, size, "write " + tmp.string());
  if (sync && ::fsync(fd) != 0) {
    ::close(fd);
    storage_failure("fsync " + tmp.string());
  }
  ::close(fd);
  if (::rename(tmp.c_str(), path.c_str()) != 0) storage_failure("rename " + path.string());
}

}  // namespace

FileStore::FileStore(fs::path root) : FileStore(std::move(root), Options{}) {}

FileStore::FileStore(fs::path root, Options options) : root_(std::move(root)), options_(options) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) throw Error(ErrorCode::StorageError, "create " + root_.string() + ": " + ec.message());
  replay_journal();
  journal_ = std::fopen((root_ / "journal.log").c_str(), "ab");
  if (!journal_) storage_failure("open journal");
}

FileStore::~FileStore() {
  if (journal_) std::fclose(journal_);
}

fs::path FileStore::document_path(const std::string& key) const { return encode_key(root_, key, ".json"); }

fs::path FileStore::blob_path(const std::string& key) const { return encode_key(root_, key, ".png"); }

void FileStore::replay_journal() {
  const fs::path journal_path = root_ / "journal.log";
  std::ifstream in(journal_path, std::ios::binary);
  if (!in) return;
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();

  std::size_t good_end = 0;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    const std::size_t newline = contents.find('\n', pos);
    if (newline == std::string::npos) break;  // torn tail
    nlohmann::json line = nlohmann::json::parse(contents.begin() + static_cast<long>(pos),
                                                contents.begin() + static_cast<long>(newline), nullptr, false);
    if (line.is_discarded()) break;
    for (const auto& put : line.at("puts")) {
      StoreRecord record{put.at("k").get<std::string>(), put.at("v"), put.at("ver").get<std::uint64_t>()};
      docs_[record.key] = std::move(record);
    }
    pos = newline + 1;
    good_end = pos;
  }
  if (good_end != contents.size()) {
    std::error_code ec;
    fs::resize_file(journal_path, good_end, ec);
    if (ec) throw Error(ErrorCode::StorageError, "truncate torn journal: " + ec.message());
  }
  for (const auto& [key, record] : docs_) materialize(record);
}

void FileStore::materialize(const StoreRecord& record) const {
  const std::string body = canonical_dump(record.value);
  atomic_write_file(document_path(record.key), body.data(), body.size(), false);
}

std::optional<StoreRecord> FileStore::get(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = docs_.find(key);
  if (it == docs_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<StoreRecord>> FileStore::commit(const WriteBatch& batch) {
  std::unique_lock lock(mutex_);
  for (const auto& pre : batch.preconditions) {
    auto it = docs_.find(pre.key);
    const std::uint64_t actual = it == docs_.end() ? 0 : it->second.version;
    if (actual != pre.expected_version) return std::nullopt;
  }

  std::vector<StoreRecord> written;
  written.reserve(batch.puts.size());
  nlohmann::json puts = nlohmann::json::array();
  for (const auto& put : batch.puts) {
    auto it = docs_.find(put.key);
    StoreRecord record{put.key, put.value, (it == docs_.end() ? 0 : it->second.version) + 1};
    puts.push_back({{"k", record.key}, {"v", record.value}, {"ver", record.version}});
    written.push_back(std::move(record));
  }
  std::string line = canonical_dump(nlohmann::json{{"puts", std::move(puts)}});
  line.push_back('\n');
  if (std::fwrite(line.data(), 1, line.size(), journal_) != line.size() || std::fflush(journal_) != 0) {
    storage_failure("append journal");
  }
  if (options_.fsync && ::fdatasync(::fileno(journal_)) != 0) storage_failure("fsync journal");

  for (const auto& record : written) {
    docs_[record.key] = record;
    materialize(record);
  }
  return written;
}

void FileStore::put_blob(const std::string& key, std::span<const std::uint8_t> bytes) {
  atomic_write_file(blob_path(key), reinterpret_cast<const char*>(bytes.data()), bytes.size(), options_.fsync);
}

std::optional<std::vector<std::uint8_t>> FileStore::get_blob(const std::string& key) const {
  std::ifstream in(blob_path(key), std::ios::binary);
  if (!in) return std::nullopt;
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace codesign::store
