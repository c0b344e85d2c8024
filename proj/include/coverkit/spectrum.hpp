#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coverkit/cover.hpp"
#include "coverkit/rational.hpp"
#include "coverkit/verdict.hpp"

namespace coverkit {

inline constexpr std::size_t kDefaultBruteForceCap = 20;

// Subset counts of the fractional parts {sum_{s in I} m_s/n_s}, keyed by the
// residue r with {.} = r/N. Only nonzero counts are stored, ascending in r.
struct SpectrumReport {
  std::int64_t denominator = 1;
  std::size_t k = 0;
  std::vector<std::pair<std::int64_t, BigInt>> counts;

  BigInt count_at(std::int64_t r) const;
  // S(A) as residues over the denominator.
  std::vector<std::int64_t> support() const;
  std::size_t support_size() const { return counts.size(); }
  BigInt total() const;
  Rational value(std::int64_t r) const { return Rational(BigInt(static_cast<long>(r)), BigInt(static_cast<long>(denominator))); }

  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

// Counts of the exact sums N * sum_{s in I} 1/n_s (integer and fractional part
// together), keyed ascending by the scaled value v in [0, kN].
struct ExtendedSpectrumReport {
  std::int64_t denominator = 1;
  std::size_t k = 0;
  std::vector<std::pair<std::int64_t, BigInt>> counts;

  BigInt count_at(std::int64_t v) const;
  BigInt total() const;
};

enum class SpectrumMethod { dp, brute_force };

// Shift-add convolution over Z/N with N = lcm of the moduli.
SpectrumReport spectrum_dp(const CoverSystem& sys);
// Same, over a caller-chosen denominator that every modulus divides.
SpectrumReport spectrum_dp(const CoverSystem& sys, std::int64_t denominator);

// Independent oracle: explicit enumeration of all 2^k subsets with exact
// rational sums. Throws cap_exceeded when k > cap.
SpectrumReport spectrum_bruteforce(const CoverSystem& sys,
                                   std::size_t cap = kDefaultBruteForceCap);

SpectrumReport compute_spectrum(const CoverSystem& sys, SpectrumMethod method,
                                std::size_t cap = kDefaultBruteForceCap);

// Requires unit weights. `exclude` omits one class from the subsets; the
// denominator stays the lcm of all moduli.
ExtendedSpectrumReport extended_spectrum(const CoverSystem& sys,
                                         std::optional<std::size_t> exclude = std::nullopt);

struct Theorem11Report {
  Verdict verdict = Verdict::pass;
  std::size_t m = 0;
  BigInt bound;  // 2^m
  std::optional<BigInt> min_nonzero;
  std::vector<std::int64_t> offending;
  SpectrumReport spectrum;
};

struct Corollary11Report {
  Verdict verdict = Verdict::pass;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t support_size = 0;
  BigInt bound;  // 2^(k-m)
};

struct Corollary12Row {
  std::int64_t r = 0;
  BigInt count;
  std::vector<BigInt> floors;  // distinct integer parts, ascending
  bool ok = true;
};

struct Corollary12Report {
  Verdict verdict = Verdict::pass;
  std::string reason;  // why NOT-APPLICABLE, when it is
  std::size_t m = 0;
  std::int64_t last_modulus = 0;
  BigInt count_bound;  // 2^(m-1)
  std::vector<Corollary12Row> rows;
};

struct Remark13Row {
  std::int64_t r = 0;
  std::size_t n = 0;
  BigInt count;
  BigInt bound;  // C(m-1, n)
  bool ok = true;
};

struct Remark13Report {
  Verdict verdict = Verdict::pass;
  std::string reason;
  std::size_t m = 0;
  std::int64_t last_modulus = 0;
  std::vector<Remark13Row> rows;
};

// Every nonempty fibre I_A(theta) has at least 2^m members, m the exact
// covering multiplicity.
Theorem11Report verify_theorem11(const CoverSystem& sys, SpectrumMethod method = SpectrumMethod::dp,
                                 std::size_t cap = kDefaultBruteForceCap);

// |S(A)| <= 2^(k-m).
Corollary11Report verify_corollary11(const CoverSystem& sys,
                                     SpectrumMethod method = SpectrumMethod::dp,
                                     std::size_t cap = kDefaultBruteForceCap);

// Subset counts over the first k-1 classes hitting each r/n_k, and the number
// of distinct integer parts among them. NOT-APPLICABLE unless the system is an
// m-cover whose first k-1 classes are not, with w_A periodic mod n_k.
Corollary12Report verify_corollary12(const CoverSystem& sys);

// Binomial lower bounds on exact sums n + r/n_k for exact m-covers.
Remark13Report verify_remark13(const CoverSystem& sys);

struct Lemma21Witness {
  std::size_t t = 0;  // zero-based
  Rational theta;
  Rational shifted;  // {theta - m_t/n_t}
};

// Finds t with theta and {theta - m_t/n_t} both in S(A_t). Requires a 1-cover
// and theta in S(A).
Lemma21Witness lemma21_witness(const CoverSystem& sys, const Rational& theta);

BigInt pow2(std::size_t e);
BigInt binomial(std::size_t n, std::size_t r);

}  // namespace coverkit
