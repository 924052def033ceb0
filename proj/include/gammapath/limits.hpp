#ifndef GAMMAPATH_LIMITS_HPP_
#define GAMMAPATH_LIMITS_HPP_

#include <chrono>
#include <cstddef>
#include <optional>

#include "gammapath/error.hpp"

namespace gammapath {

using Clock = std::chrono::steady_clock;

// Bounds shared by every exhaustive search in the library.
struct Limits {
  std::size_t max_path_length = 20;  // in edges
  std::size_t max_paths = 200000;
  std::size_t cycle_cap = 100000;
  std::optional<Clock::time_point> deadline;

  void check_deadline() const {
    if (deadline && Clock::now() > *deadline) {
      throw LimitExceeded("time budget exhausted");
    }
  }

  void validate() const {
    if (max_path_length == 0 || max_paths == 0 || cycle_cap == 0) {
      throw InvalidArgument("limits must be positive");
    }
  }
};

}  // namespace gammapath

#endif  // GAMMAPATH_LIMITS_HPP_
