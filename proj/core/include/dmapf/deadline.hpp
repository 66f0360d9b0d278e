#pragma once

#include <chrono>
#include <optional>

#include "dmapf/errors.hpp"

namespace dmapf {

// Cooperative wall-clock budget threaded through solver calls. A
// default-constructed Deadline never expires.
class Deadline {
 public:
  Deadline() = default;

  static Deadline after(double seconds) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                std::chrono::duration<double>(seconds));
    return d;
  }

  bool expired() const {
    return at_.has_value() && std::chrono::steady_clock::now() >= *at_;
  }

  void check() const {
    if (expired()) throw TimeLimitError("time limit exceeded");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace dmapf
