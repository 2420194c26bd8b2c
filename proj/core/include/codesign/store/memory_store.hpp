#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

#include "codesign/store/document_store.hpp"

namespace codesign::store {

/// Process-local backend used by tests and the default service mode.
class MemoryStore final : public DocumentStore {
 public:
  std::optional<StoreRecord> get(const std::string& key) const override;
  std::optional<std::vector<StoreRecord>> commit(const WriteBatch& batch) override;
  void put_blob(const std::string& key, std::span<const std::uint8_t> bytes) override;
  std::optional<std::vector<std::uint8_t>> get_blob(const std::string& key) const override;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, StoreRecord> docs_;
  std::map<std::string, std::vector<std::uint8_t>> blobs_;
};

}  // namespace codesign::store
