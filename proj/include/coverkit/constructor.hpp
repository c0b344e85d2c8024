#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "coverkit/cover.hpp"
#include "coverkit/verdict.hpp"

namespace coverkit {

// Parameters of the unsplittable m-cover built from r >= 2m-1 distinct primes.
class Example11Spec {
 public:
  // Validates m >= 1, r >= 2m-1, distinct primes; throws spec_violation.
  Example11Spec(std::size_t m, std::vector<std::int64_t> primes);

  std::size_t m() const { return m_; }
  const std::vector<std::int64_t>& primes() const { return primes_; }
  std::int64_t modulus() const { return modulus_; }  // product of the primes

 private:
  std::size_t m_;
  std::vector<std::int64_t> primes_;
  std::int64_t modulus_;
};

struct Example11Output {
  Example11Spec spec;
  // 0(p_1), ..., 0(p_r), a_1(N), ..., a_n(N)
  CoverSystem system;
  // Residues left uncovered by the star system, ascending, each m times.
  std::vector<std::int64_t> a_list;
  // Residues mod N divisible by at least m of the primes, ascending.
  std::vector<std::int64_t> star_covered;
  std::size_t multiplicity = 0;
};

Example11Output build_example11(const Example11Spec& spec);

struct PartitionWitness {
  std::vector<std::size_t> side1;  // prime indices, zero-based
  std::vector<std::size_t> side2;
  std::int64_t witness = 0;  // product of the side-2 primes
  bool in_star = false;      // witness mod N is covered by the star system
  bool avoids_side1 = false;  // witness is not divisible by any side-1 prime
  bool ok() const { return in_star && avoids_side1; }
};

struct UnsplittabilityCertificate {
  Verdict verdict = Verdict::pass;
  std::vector<PartitionWitness> partitions;  // one per subset assignment, 2^r total
  std::optional<std::size_t> first_failure;
};

// Witness argument over all 2^r splits of the prime classes: the product of
// the larger side's primes is missed by every class landing on the smaller side.
UnsplittabilityCertificate check_unsplittable(const Example11Output& out);

// Exhaustive search over all 2^k bipartitions of a small system for two
// disjoint 1-covers. Returns the side-1 mask of the first split found.
// Throws cap_exceeded when k > cap.
std::optional<std::uint64_t> find_cover_split(const CoverSystem& sys, std::size_t cap = 24);

// m copies of 0(1).
CoverSystem sharpness_example(std::size_t m);

bool is_prime(std::int64_t n);

}  // namespace coverkit
