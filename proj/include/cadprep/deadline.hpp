#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "cadprep/errors.hpp"

namespace cadprep {

/// Cooperative time budget checked at loop boundaries of the long-running algorithms.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.end_ = Clock::now() + budget;
    return d;
  }

  bool bounded() const { return end_.has_value(); }
  bool expired() const { return end_ && Clock::now() >= *end_; }

  void check(const char* where) const {
    if (expired()) throw TimeoutError(std::string("time budget exhausted in ") + where);
  }

 private:
  std::optional<Clock::time_point> end_;
};

}  // namespace cadprep
