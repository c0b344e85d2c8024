#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "coverkit/number_field.hpp"
#include "coverkit/spectrum.hpp"
#include "coverkit/verdict.hpp"

namespace coverkit {

// Residue classes alpha_s + beta_s O_K with integral weights omega_s.
class NFCoverSystem {
 public:
  NFCoverSystem(NumberField field, std::vector<NFResidueClass> classes,
                std::optional<std::vector<NFElement>> omegas = std::nullopt);

  const NumberField& field() const { return field_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<NFResidueClass>& classes() const { return classes_; }
  const NFResidueClass& operator[](std::size_t s) const { return classes_[s]; }

  bool has_explicit_omegas() const { return omegas_.has_value(); }
  // omega_s, defaulting to 1.
  NFElement omega(std::size_t s) const;

  // prod_s beta_s; w is invariant under translation by this ideal.
  NFElement beta_product() const;

  friend bool operator==(const NFCoverSystem&, const NFCoverSystem&) = default;

 private:
  NumberField field_;
  std::vector<NFResidueClass> classes_;
  std::optional<std::vector<NFElement>> omegas_;
};

std::size_t nf_covering_count(const NFCoverSystem& sys, const NFElement& x);

// min of the covering count over a transversal of O_K / (prod beta_s).
std::size_t nf_cover_multiplicity(const NFCoverSystem& sys, std::int64_t coset_cap = kDefaultCosetCap);

// Class of K/O_K: coordinates reduced into [0,1) and scaled by the common
// denominator D, so each entry lies in [0, D).
using NFClassKey = std::vector<std::int64_t>;

struct NFSubsetClasses {
  std::int64_t common_denominator = 1;
  std::map<NFClassKey, BigInt> counts;  // nonzero only

  friend bool operator==(const NFSubsetClasses&, const NFSubsetClasses&) = default;
};

// Counts of subsets I by the class of sum_{s in I} omega_s / beta_s modulo
// O_K. The common denominator also absorbs `mu` so its class is a key.
NFSubsetClasses nf_subset_classes(const NFCoverSystem& sys, const NFElement& mu,
                                  SpectrumMethod method = SpectrumMethod::dp,
                                  std::size_t brute_cap = kDefaultBruteForceCap);

NFClassKey nf_class_key(const NFElement& x, std::int64_t common_denominator);

struct Theorem12Report {
  Verdict verdict = Verdict::pass;
  std::size_t m = 0;
  BigInt bound;         // 2^m
  NFElement mu;
  BigInt target_count;  // |{I : sum omega_s/beta_s in mu + O_K}|
  NFSubsetClasses classes;
  std::vector<NFClassKey> offending;
};

Theorem12Report verify_theorem12(const NFCoverSystem& sys, const NFElement& mu,
                                 SpectrumMethod method = SpectrumMethod::dp,
                                 std::size_t brute_cap = kDefaultBruteForceCap,
                                 std::int64_t coset_cap = kDefaultCosetCap);

struct VanishingReport {
  Verdict verdict = Verdict::pass;
  std::size_t m = 0;
  std::size_t reps_checked = 0;
  // For each representative x, the first s with psi(omega_s (x + alpha_s) / beta_s) in Z.
  std::vector<std::optional<std::size_t>> certifying_class;
  std::vector<NFElement> reps;
  std::optional<NFElement> failing_x;
};

// Exact form of the vanishing-product step: every x in O_K has some factor
// whose psi exponent is integral. NOT-APPLICABLE (still reporting a failing
// x) when the system is not a cover.
VanishingReport vanishing_witness_check(const NFCoverSystem& sys,
                                        std::int64_t coset_cap = kDefaultCosetCap);

}  // namespace coverkit
