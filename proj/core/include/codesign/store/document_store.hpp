#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace codesign::store {

/// One versioned document. Version 0 is never stored; it denotes "absent"
/// in preconditions.
struct StoreRecord {
  std::string key;
  nlohmann::json value;
  std::uint64_t version = 0;
};

struct Precondition {
  std::string key;
  std::uint64_t expected_version = 0;  // 0: key must be absent
};

struct Put {
  std::string key;
  nlohmann::json value;
};

/// An all-or-nothing write set guarded by optimistic version checks.
struct WriteBatch {
  std::vector<Precondition> preconditions;
  std::vector<Put> puts;
};

/// Transactional document store contract shared by every backend.
///
/// Documents are JSON values addressed by slash-separated keys. `commit`
/// is the single serialization point: it either applies every put (each
/// bumping its key's version by exactly one) or, if any precondition no
/// longer holds, applies nothing and returns nullopt. Blobs are opaque,
/// write-once image payloads kept beside the documents.
class DocumentStore {
 public:
  virtual ~DocumentStore() = default;

  virtual std::optional<StoreRecord> get(const std::string& key) const = 0;

  /// Returns the written records on success, nullopt on a version conflict.
  /// Throws Error(StorageError) on I/O failure.
  virtual std::optional<std::vector<StoreRecord>> commit(const WriteBatch& batch) = 0;

  virtual void put_blob(const std::string& key, std::span<const std::uint8_t> bytes) = 0;
  virtual std::optional<std::vector<std::uint8_t>> get_blob(const std::string& key) const = 0;
};

}  // namespace codesign::store
