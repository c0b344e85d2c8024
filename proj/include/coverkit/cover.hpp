#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace coverkit {

// The arithmetic progression a + nZ, stored with 0 <= a < n.
class ResidueClass {
 public:
  ResidueClass(std::int64_t a, std::int64_t n);

  std::int64_t residue() const { return a_; }
  std::int64_t modulus() const { return n_; }
  bool contains(std::int64_t x) const;

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

 private:
  std::int64_t a_;
  std::int64_t n_;
};

// Ordered system a_1(n_1), ..., a_k(n_k) with optional integer weights m_s.
// Indices are zero-based throughout the library.
class CoverSystem {
 public:
  CoverSystem() = default;
  explicit CoverSystem(std::vector<ResidueClass> classes,
                       std::optional<std::vector<std::int64_t>> weights = std::nullopt);

  std::size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }
  const std::vector<ResidueClass>& classes() const { return classes_; }
  const ResidueClass& operator[](std::size_t s) const { return classes_[s]; }

  bool has_explicit_weights() const { return weights_.has_value(); }
  // m_s, defaulting to 1.
  std::int64_t weight(std::size_t s) const { return weights_ ? (*weights_)[s] : 1; }
  std::vector<std::int64_t> weights() const;
  bool has_unit_weights() const;

  std::vector<std::int64_t> moduli() const;
  // lcm of the moduli; the covering function has this period.
  std::int64_t period() const;

  friend bool operator==(const CoverSystem&, const CoverSystem&) = default;

 private:
  std::vector<ResidueClass> classes_;
  std::optional<std::vector<std::int64_t>> weights_;
};

// w_A(x): the number of classes containing x.
std::size_t covering_function(const CoverSystem& sys, std::int64_t x);

// w_A on [start, start + len).
std::vector<std::uint32_t> coverage_block(const CoverSystem& sys, std::int64_t start,
                                          std::size_t len);

// min of w_A over one period; 0 for the empty system.
std::size_t covering_multiplicity(const CoverSystem& sys);

// True iff w_A(x) >= m everywhere. Stops at the first deficient point.
bool is_m_cover(const CoverSystem& sys, std::size_t m);

// True iff w_A(x) == m everywhere.
bool is_exact_m_cover(const CoverSystem& sys, std::size_t m);

// True iff w_A(x) == w_A(x + q) for all x.
bool is_periodic_mod(const CoverSystem& sys, std::int64_t q);

// The system without class t (and its weight).
CoverSystem drop_class(const CoverSystem& sys, std::size_t t);

}  // namespace coverkit
