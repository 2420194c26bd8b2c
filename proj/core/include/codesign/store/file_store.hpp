#pragma once

#include <cstdio>
#include <filesystem>
#include <map>
#include <shared_mutex>

#include "codesign/store/document_store.hpp"

namespace codesign::store {

/// Single-directory durable backend.
///
/// Layout under `root`:
///   journal.log                 one JSON line per committed batch
///   rooms/<room_id>.json        materialized documents, one file per key
///   messages/<room_id>/<seq>.json
///   artifacts/<artifact_id>.png blobs
///
/// The journal is the source of truth. A commit is durable once its line is
/// appended and fsynced; the per-key files are rewritten afterwards and
/// regenerated from the journal on open. A torn trailing line (crash during
/// append) is discarded on open. Key segments are percent-encoded on disk.
class FileStore final : public DocumentStore {
 public:
  struct Options {
    bool fsync = true;
  };

  explicit FileStore(std::filesystem::path root);
  FileStore(std::filesystem::path root, Options options);
  ~FileStore() override;

  FileStore(const FileStore&) = delete;
  FileStore& operator=(const FileStore&) = delete;

  std::optional<StoreRecord> get(const std::string& key) const override;
  std::optional<std::vector<StoreRecord>> commit(const WriteBatch& batch) override;
  void put_blob(const std::string& key, std::span<const std::uint8_t> bytes) override;
  std::optional<std::vector<std::uint8_t>> get_blob(const std::string& key) const override;

  const std::filesystem::path& root() const { return root_; }

  /// On-disk path of a document or blob key.
  std::filesystem::path document_path(const std::string& key) const;
  std::filesystem::path blob_path(const std::string& key) const;

 private:
  void replay_journal();
  void materialize(const StoreRecord& record) const;

  std::filesystem::path root_;
  Options options_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, StoreRecord> docs_;
  std::FILE* journal_ = nullptr;
};

}  // namespace codesign::store
