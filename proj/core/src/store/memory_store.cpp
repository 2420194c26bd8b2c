#include "codesign/store/memory_store.hpp"

namespace codesign::store {

std::optional<StoreRecord> MemoryStore::get(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = docs_.find(key);
  if (it == docs_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<StoreRecord>> MemoryStore::commit(const WriteBatch& batch) {
  std::unique_lock lock(mutex_);
  for (const auto& pre : batch.preconditions) {
    auto it = docs_.find(pre.key);
    const std::uint64_t actual = it == docs_.end() ? 0 : it->second.version;
    if (actual != pre.expected_version) return std::nullopt;
  }
  std::vector<StoreRecord> written;
  written.reserve(batch.puts.size());
  for (const auto& put : batch.puts) {
    auto& record = docs_[put.key];
    record.key = put.key;
    record.value = put.value;
    ++record.version;
    written.push_back(record);
  }
  return written;
}

void MemoryStore::put_blob(const std::string& key, std::span<const std::uint8_t> bytes) {
  std::unique_lock lock(mutex_);
  blobs_[key].assign(bytes.begin(), bytes.end());
}

std::optional<std::vector<std::uint8_t>> MemoryStore::get_blob(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = blobs_.find(key);
  if (it == blobs_.end()) return std::nullopt;
  return it->second;
}

}  // namespace codesign::store
