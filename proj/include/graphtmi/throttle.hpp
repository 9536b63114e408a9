// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <mutex>

namespace graphtmi {

using Millis = std::chrono::milliseconds;

class Clock {
 public:
  virtual ~Clock() = default;
  /// Milliseconds since the Unix epoch; window boundaries are multiples of
  /// one minute and one day on this axis.
  virtual Millis now() const = 0;
  virtual void sleep_for(Millis d) = 0;
};

class SystemClock final : public Clock {
 public:
  Millis now() const override;
  void sleep_for(Millis d) override;
};

/// Manually driven clock; sleep_for advances time instead of blocking.
class FakeClock final : public Clock {
 public:
  explicit FakeClock(Millis start = Millis{0}) : now_(start.count()) {}
  Millis now() const override { return Millis{now_.load()}; }
  void sleep_for(Millis d) override { now_.fetch_add(d.count()); }
  void advance(Millis d) { now_.fetch_add(d.count()); }
  void set(Millis t) { now_.store(t.count()); }

 private:
  std::atomic<std::int64_t> now_;
};

struct Admission {
  bool admitted = false;
  /// Time until the window that blocked the request rolls over; zero when admitted.
  Millis wait{0};
};

/// Fixed-window admission: at most `per_minute` requests per clock minute and
/// `per_day` per clock day. Thread-safe.
class RateLimiter {
 public:
  RateLimiter(std::size_t per_minute, std::size_t per_day, Clock& clock);

  Admission try_acquire();
  /// Blocks on the clock until admitted; returns the total time waited.
  Millis acquire();

  std::size_t per_minute() const noexcept { return per_minute_; }
  std::size_t per_day() const noexcept { return per_day_; }

 private:
  static constexpr std::int64_t kMinute = 60'000;
  static constexpr std::int64_t kDay = 86'400'000;

  std::size_t per_minute_;
  std::size_t per_day_;
  Clock& clock_;
  std::mutex mu_;
  std::int64_t minute_window_ = -1;
  std::int64_t day_window_ = -1;
  std::size_t minute_count_ = 0;
  std::size_t day_count_ = 0;
};

}  // namespace graphtmi
