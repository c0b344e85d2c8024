#include "coverkit/integer.hpp"

#include <numeric>
#include <string>

#include "coverkit/error.hpp"

namespace coverkit {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::period_overflow,
                "64-bit overflow computing " + std::to_string(a) + " * " + std::to_string(b));
  return out;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0)
    throw Error(ErrorCode::validation_error, "lcm arguments must be positive");
  return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t lcm_all(std::span<const std::int64_t> values) {
  std::int64_t acc = 1;
  for (std::int64_t v : values) acc = checked_lcm(acc, v);
  return acc;
}

}  // namespace coverkit
