#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <type_traits>

#include <nlohmann/json.hpp>

#include "codesign/error.hpp"
#include "codesign/store/document_store.hpp"

namespace codesign::store {

struct RetryPolicy {
  int max_attempts = 16;
  std::chrono::microseconds base_backoff{50};
  std::chrono::microseconds max_backoff{4000};
};

/// Read-your-writes view over a store for one optimistic attempt. Every
/// read pins the observed version as a commit precondition.
class Transaction {
 public:
  explicit Transaction(const DocumentStore& store) : store_(store) {}

  std::optional<nlohmann::json> read(const std::string& key);

  /// Blind write; adds no precondition unless the key was read.
  void write(const std::string& key, nlohmann::json value);

  /// Write that requires the key to be absent at commit time.
  void create(const std::string& key, nlohmann::json value);

  WriteBatch batch() const;
  bool has_writes() const { return !writes_.empty(); }

 private:
  const DocumentStore& store_;
  std::map<std::string, std::uint64_t> read_versions_;
  std::map<std::string, std::optional<nlohmann::json>> read_values_;
  std::map<std::string, nlohmann::json> writes_;
};

namespace detail {
void backoff(const RetryPolicy& policy, int attempt);
[[noreturn]] void throw_conflict_exhausted(int attempts);
}  // namespace detail

/// Runs `body(Transaction&)` until its write set commits. A throwing body
/// aborts with no write. Conflicts retry with jittered exponential backoff
/// up to `policy.max_attempts`, then throw ConflictExhausted.
template <class Body>
auto run_transaction(DocumentStore& store, Body&& body, const RetryPolicy& policy = {})
    -> std::invoke_result_t<Body&, Transaction&> {
  using Result = std::invoke_result_t<Body&, Transaction&>;
  for (int attempt = 0; attempt < policy.max_attempts; ++attempt) {
    Transaction tx(store);
    if constexpr (std::is_void_v<Result>) {
      body(tx);
      if (!tx.has_writes() || store.commit(tx.batch())) return;
    } else {
      Result result = body(tx);
      if (!tx.has_writes() || store.commit(tx.batch())) return result;
    }
    detail::backoff(policy, attempt);
  }
  detail::throw_conflict_exhausted(policy.max_attempts);
}

using Mutation = std::function<nlohmann::json(const std::optional<nlohmann::json>&)>;

/// Single-key read-modify-write. `mutation` receives the current value
/// (nullopt when absent) and returns the replacement.
StoreRecord transact(DocumentStore& store, const std::string& key, const Mutation& mutation,
                     const RetryPolicy& policy = {});

}  // namespace codesign::store
