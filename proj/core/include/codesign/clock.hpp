#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

namespace codesign {

/// Milliseconds since the Unix epoch.
using TimestampMs = std::int64_t;

class Clock {
 public:
  virtual ~Clock() = default;
  virtual TimestampMs now_ms() = 0;
};

class SystemClock final : public Clock {
 public:
  TimestampMs now_ms() override {
    using namespace std::chrono;
    return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
  }
};

/// Deterministic clock for tests and replays: every reading advances by a
/// fixed step.
class SteppingClock final : public Clock {
 public:
  explicit SteppingClock(TimestampMs start = 1'700'000'000'000, TimestampMs step = 1000)
      : next_(start), step_(step) {}

  TimestampMs now_ms() override { return next_.fetch_add(step_); }

 private:
  std::atomic<TimestampMs> next_;
  TimestampMs step_;
};

}  // namespace codesign
