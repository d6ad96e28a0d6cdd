#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace daggercat {

// Process-wide worker count used by the scan helpers below. 1 = serial.
// Results are identical for every setting: failures are merged by minimum
// index and flag vectors are assembled in index order.
int parallelism();
void set_parallelism(int threads);

struct ScanFailure {
  std::int64_t index = -1;
};

// Finds the smallest index in [0, n) for which pred returns false.
std::optional<std::int64_t> first_violation(
    std::int64_t n, const std::function<bool(std::int64_t)>& pred);

// Evaluates pred on [0, n) and returns the flag vector in index order.
std::vector<std::uint8_t> map_flags(
    std::int64_t n, const std::function<bool(std::int64_t)>& pred);

}  // namespace daggercat
