#pragma once

#include <cstdint>
#include <span>

namespace coverkit {

// Periods live in the signed 64-bit range; overflow raises period_overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

// lcm of positive values; the empty list gives 1.
std::int64_t lcm_all(std::span<const std::int64_t> values);

// Representative of a mod n in [0, n), n > 0.
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace coverkit
