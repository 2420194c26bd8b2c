#include "codesign/store/transaction.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace codesign::store {

std::optional<nlohmann::json> Transaction::read(const std::string& key) {
  if (auto w = writes_.find(key); w != writes_.end()) return w->second;
  if (auto r = read_values_.find(key); r != read_values_.end()) return r->second;
  auto record = store_.get(key);
  read_versions_[key] = record ? record->version : 0;
  auto& slot = read_values_[key];
  if (record) slot = std::move(record->value);
  return slot;
}

void Transaction::write(const std::string& key, nlohmann::json value) {
  writes_[key] = std::move(value);
}

void Transaction::create(const std::string& key, nlohmann::json value) {
  read_versions_.try_emplace(key, 0);
  writes_[key] = std::move(value);
}

WriteBatch Transaction::batch() const {
  WriteBatch batch;
  batch.preconditions.reserve(read_versions_.size());
  for (const auto& [key, version] : read_versions_) batch.preconditions.push_back({key, version});
  batch.puts.reserve(writes_.size());
  for (const auto& [key, value] : writes_) batch.puts.push_back({key, value});
  return batch;
}

namespace detail {

void backoff(const RetryPolicy& policy, int attempt) {
  thread_local std::minstd_rand rng{std::random_device{}()};
  const auto shift = std::min(attempt, 16);
  const auto ceiling = std::min<long long>(policy.base_backoff.count() << shift, policy.max_backoff.count());
  if (ceiling <= 0) {
    std::this_thread::yield();
    return;
  }
  std::uniform_int_distribution<long long> dist(0, ceiling);
  std::this_thread::sleep_for(std::chrono::microseconds(dist(rng)));
}

void throw_conflict_exhausted(int attempts) {
  throw Error(ErrorCode::ConflictExhausted,
              "transaction gave up after " + std::to_string(attempts) + " conflicting attempts");
}

}  // namespace detail

StoreRecord transact(DocumentStore& store, const std::string& key, const Mutation& mutation,
                     const RetryPolicy& policy) {
  for (int attempt = 0; attempt < policy.max_attempts; ++attempt) {
    auto current = store.get(key);
    std::optional<nlohmann::json> value;
    if (current) value = current->value;
    nlohmann::json next = mutation(value);
    WriteBatch batch;
    batch.preconditions.push_back({key, current ? current->version : 0});
    batch.puts.push_back({key, std::move(next)});
    if (auto written = store.commit(batch)) return std::move(written->front());
    detail::backoff(policy, attempt);
  }
  detail::throw_conflict_exhausted(policy.max_attempts);
}

}  // namespace codesign::store
