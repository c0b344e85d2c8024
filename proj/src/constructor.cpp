#include "coverkit/constructor.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "coverkit/error.hpp"
#include "coverkit/integer.hpp"

namespace coverkit {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

Example11Spec::Example11Spec(std::size_t m, std::vector<std::int64_t> primes)
    : m_(m), primes_(std::move(primes)), modulus_(1) {
  if (m_ < 1) throw Error(ErrorCode::spec_violation, "m must be at least 1");
  if (primes_.size() < 2 * m_ - 1)
    throw Error(ErrorCode::spec_violation,
                "need at least 2m-1 = " + std::to_string(2 * m_ - 1) + " primes, got " +
                    std::to_string(primes_.size()));
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i]))
      throw Error(ErrorCode::spec_violation, std::to_string(primes_[i]) + " is not prime");
    for (std::size_t j = 0; j < i; ++j)
      if (primes_[j] == primes_[i])
        throw Error(ErrorCode::spec_violation, "repeated prime " + std::to_string(primes_[i]));
    modulus_ = checked_mul(modulus_, primes_[i]);
  }
}

Example11Output build_example11(const Example11Spec& spec) {
  const std::int64_t big_n = spec.modulus();
  const auto& primes = spec.primes();
  std::vector<std::int64_t> star, a_list;
  for (std::int64_t x = 0; x < big_n; ++x) {
    std::size_t divisors = 0;
    for (std::int64_t p : primes) divisors += x % p == 0;
    if (divisors >= spec.m())
      star.push_back(x);
    else
      a_list.insert(a_list.end(), spec.m(), x);
  }

  std::vector<ResidueClass> classes;
  classes.reserve(primes.size() + a_list.size());
  for (std::int64_t p : primes) classes.emplace_back(0, p);
  for (std::int64_t a : a_list) classes.emplace_back(a, big_n);

  Example11Output out{spec, CoverSystem(std::move(classes)), std::move(a_list), std::move(star), 0};
  out.multiplicity = covering_multiplicity(out.system);
  if (out.multiplicity < spec.m())
    throw Error(ErrorCode::internal_invariant,
                "constructed system has multiplicity " + std::to_string(out.multiplicity));
  return out;
}

UnsplittabilityCertificate check_unsplittable(const Example11Output& out) {
  const auto& primes = out.spec.primes();
  const std::size_t r = primes.size();
  if (r >= 63) throw Error(ErrorCode::cap_exceeded, "too many primes for partition enumeration");
  const std::int64_t big_n = out.spec.modulus();

  UnsplittabilityCertificate cert;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    PartitionWitness pw;
    for (std::size_t s = 0; s < r; ++s) (mask >> s & 1 ? pw.side2 : pw.side1).push_back(s);
    // Relabel so |side1| <= |side2|; on a tie the side holding index 0 is side1.
    if (pw.side1.size() > pw.side2.size() ||
        (pw.side1.size() == pw.side2.size() && !pw.side2.empty() && pw.side2.front() == 0))
      std::swap(pw.side1, pw.side2);

    pw.witness = 1;
    for (std::size_t s : pw.side2) pw.witness = checked_mul(pw.witness, primes[s]);
    const std::int64_t w = pw.witness % big_n;
    pw.in_star = std::binary_search(out.star_covered.begin(), out.star_covered.end(), w) &&
                 !std::binary_search(out.a_list.begin(), out.a_list.end(), w);
    pw.avoids_side1 = std::none_of(pw.side1.begin(), pw.side1.end(),
                                   [&](std::size_t s) { return pw.witness % primes[s] == 0; });
    if (!pw.ok() && !cert.first_failure) {
      cert.first_failure = cert.partitions.size();
      cert.verdict = Verdict::fail;
    }
    cert.partitions.push_back(std::move(pw));
  }
  return cert;
}

std::optional<std::uint64_t> find_cover_split(const CoverSystem& sys, std::size_t cap) {
  const std::size_t k = sys.size();
  if (k > cap || k >= 63)
    throw Error(ErrorCode::cap_exceeded, "exhaustive split search needs k <= " + std::to_string(cap));
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // mask and its complement describe the same split
    if (k > 0 && (mask >> (k - 1) & 1)) continue;
    std::vector<ResidueClass> one, two;
    for (std::size_t s = 0; s < k; ++s) (mask >> s & 1 ? one : two).push_back(sys[s]);
    if (is_m_cover(CoverSystem(std::move(one)), 1) && is_m_cover(CoverSystem(std::move(two)), 1))
      return mask;
  }
  return std::nullopt;
}

CoverSystem sharpness_example(std::size_t m) {
  if (m < 1) throw Error(ErrorCode::precondition, "m must be at least 1");
  return CoverSystem(std::vector<ResidueClass>(m, ResidueClass(0, 1)));
}

}  // namespace coverkit
