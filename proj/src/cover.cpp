#include "coverkit/cover.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "coverkit/error.hpp"
#include "coverkit/integer.hpp"

namespace coverkit {

namespace {
constexpr std::size_t kBlock = std::size_t{1} << 16;
}

ResidueClass::ResidueClass(std::int64_t a, std::int64_t n) : a_(0), n_(n) {
  if (n < 1)
    throw Error(ErrorCode::validation_error, "modulus must be positive, got " + std::to_string(n));
  a_ = mod_floor(a, n);
}

bool ResidueClass::contains(std::int64_t x) const { return mod_floor(x - a_, n_) == 0; }

CoverSystem::CoverSystem(std::vector<ResidueClass> classes,
                         std::optional<std::vector<std::int64_t>> weights)
    : classes_(std::move(classes)), weights_(std::move(weights)) {
  if (weights_ && weights_->size() != classes_.size())
    throw Error(ErrorCode::validation_error,
                "weights has " + std::to_string(weights_->size()) + " entries for " +
                    std::to_string(classes_.size()) + " classes");
}

std::vector<std::int64_t> CoverSystem::weights() const {
  if (weights_) return *weights_;
  return std::vector<std::int64_t>(classes_.size(), 1);
}

bool CoverSystem::has_unit_weights() const {
  return !weights_ || std::all_of(weights_->begin(), weights_->end(),
                                  [](std::int64_t w) { return w == 1; });
}

std::vector<std::int64_t> CoverSystem::moduli() const {
  std::vector<std::int64_t> out;
  out.reserve(classes_.size());
  for (const auto& c : classes_) out.push_back(c.modulus());
  return out;
}

std::int64_t CoverSystem::period() const {
  auto mods = moduli();
  return lcm_all(mods);
}

std::size_t covering_function(const CoverSystem& sys, std::int64_t x) {
  return static_cast<std::size_t>(
      std::count_if(sys.classes().begin(), sys.classes().end(),
                    [x](const ResidueClass& c) { return c.contains(x); }));
}

std::vector<std::uint32_t> coverage_block(const CoverSystem& sys, std::int64_t start,
                                          std::size_t len) {
  std::vector<std::uint32_t> w(len, 0);
  const auto end = static_cast<std::int64_t>(len);
  for (const auto& c : sys.classes()) {
    const std::int64_t n = c.modulus();
    for (std::int64_t i = mod_floor(c.residue() - start, n); i < end; i += n) ++w[i];
  }
  return w;
}

namespace {

// Visits w_A over [0, period) in blocks; stops when visit returns false.
template <typename Visit>
void scan_period(const CoverSystem& sys, Visit&& visit) {
  const std::int64_t period = sys.period();
  for (std::int64_t start = 0; start < period;) {
    const auto len = static_cast<std::size_t>(
        std::min<std::int64_t>(period - start, static_cast<std::int64_t>(kBlock)));
    if (!visit(start, coverage_block(sys, start, len))) return;
    start += static_cast<std::int64_t>(len);
  }
}

}  // namespace

std::size_t covering_multiplicity(const CoverSystem& sys) {
  if (sys.empty()) return 0;
  std::uint32_t best = static_cast<std::uint32_t>(sys.size());
  scan_period(sys, [&](std::int64_t, const std::vector<std::uint32_t>& w) {
    best = std::min(best, *std::min_element(w.begin(), w.end()));
    return best > 0;
  });
  return best;
}

bool is_m_cover(const CoverSystem& sys, std::size_t m) {
  if (m == 0) return true;
  if (sys.size() < m) return false;
  bool ok = true;
  scan_period(sys, [&](std::int64_t, const std::vector<std::uint32_t>& w) {
    ok = std::all_of(w.begin(), w.end(), [m](std::uint32_t v) { return v >= m; });
    return ok;
  });
  return ok;
}

bool is_exact_m_cover(const CoverSystem& sys, std::size_t m) {
  bool ok = true;
  scan_period(sys, [&](std::int64_t, const std::vector<std::uint32_t>& w) {
    ok = std::all_of(w.begin(), w.end(), [m](std::uint32_t v) { return v == m; });
    return ok;
  });
  return ok;
}

bool is_periodic_mod(const CoverSystem& sys, std::int64_t q) {
  if (q < 1) throw Error(ErrorCode::precondition, "period candidate must be positive");
  const std::int64_t period = sys.period();
  const std::int64_t g = std::gcd(q, period);
  if (g == period) return true;
  // w has period L, so period q is equivalent to period gcd(q, L).
  bool ok = true;
  scan_period(sys, [&](std::int64_t start, const std::vector<std::uint32_t>& w) {
    auto shifted = coverage_block(sys, start + g, w.size());
    ok = w == shifted;
    return ok;
  });
  return ok;
}

CoverSystem drop_class(const CoverSystem& sys, std::size_t t) {
  if (t >= sys.size())
    throw Error(ErrorCode::index_out_of_range,
                "class index " + std::to_string(t) + " out of range for k=" +
                    std::to_string(sys.size()));
  auto classes = sys.classes();
  classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(t));
  std::optional<std::vector<std::int64_t>> weights;
  if (sys.has_explicit_weights()) {
    weights = sys.weights();
    weights->erase(weights->begin() + static_cast<std::ptrdiff_t>(t));
  }
  return CoverSystem(std::move(classes), std::move(weights));
}

}  // namespace coverkit
