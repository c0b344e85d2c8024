#pragma once

// Random systems for property tests. Covers are grown by refining a residue
// class a(n) into a + jn (fn), j < f, which preserves exact coverage.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "coverkit/cover.hpp"
#include "coverkit/nf_cover.hpp"

namespace coverkit::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// An exact 1-cover with at most max_k classes and moduli at most max_mod.
inline std::vector<ResidueClass> random_exact_cover(Rng& rng, std::size_t max_k, std::int64_t max_mod) {
  std::vector<ResidueClass> classes{ResidueClass(0, 1)};
  const auto steps = uniform(rng, 0, 6);
  for (std::int64_t i = 0; i < steps; ++i) {
    const auto idx = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(classes.size()) - 1));
    const ResidueClass c = classes[idx];
    std::vector<std::int64_t> factors;
    for (std::int64_t f = 2; f <= 6; ++f)
      if (c.modulus() * f <= max_mod && classes.size() - 1 + static_cast<std::size_t>(f) <= max_k)
        factors.push_back(f);
    if (factors.empty()) continue;
    const std::int64_t f = factors[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(factors.size()) - 1))];
    classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(idx));
    for (std::int64_t j = 0; j < f; ++j) classes.emplace_back(c.residue() + j * c.modulus(), c.modulus() * f);
  }
  return classes;
}

struct CoverShape {
  std::size_t max_k = 14;
  std::int64_t max_mod = 12;
  std::int64_t weight_lo = -5;
  std::int64_t weight_hi = 5;
  bool weights = true;
};

// Union of one or more exact covers plus stray classes, shuffled.
inline CoverSystem random_cover(Rng& rng, const CoverShape& shape = {}) {
  std::vector<ResidueClass> classes;
  const auto copies = uniform(rng, 1, 3);
  for (std::int64_t c = 0; c < copies; ++c) {
    const std::size_t room = shape.max_k - classes.size();
    if (room == 0) break;
    auto part = random_exact_cover(rng, room, shape.max_mod);
    classes.insert(classes.end(), part.begin(), part.end());
  }
  const auto extra = uniform(rng, 0, 2);
  for (std::int64_t e = 0; e < extra && classes.size() < shape.max_k; ++e) {
    const auto n = uniform(rng, 1, shape.max_mod);
    classes.emplace_back(uniform(rng, 0, n - 1), n);
  }
  std::shuffle(classes.begin(), classes.end(), rng);
  if (!shape.weights) return CoverSystem(std::move(classes));
  std::vector<std::int64_t> w;
  for (std::size_t s = 0; s < classes.size(); ++s) w.push_back(uniform(rng, shape.weight_lo, shape.weight_hi));
  return CoverSystem(std::move(classes), std::move(w));
}

// Arbitrary classes, usually not a cover.
inline CoverSystem random_system(Rng& rng, std::size_t max_k, std::int64_t max_mod, bool weights = true) {
  const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_k)));
  std::vector<ResidueClass> classes;
  std::vector<std::int64_t> w;
  for (std::size_t s = 0; s < k; ++s) {
    const auto n = uniform(rng, 1, max_mod);
    classes.emplace_back(uniform(rng, -3 * n, 3 * n), n);
    w.push_back(uniform(rng, -5, 5));
  }
  if (!weights) return CoverSystem(std::move(classes));
  return CoverSystem(std::move(classes), std::move(w));
}

inline NFElement random_integral(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> c(n);
  for (auto& x : c) x = uniform(rng, lo, hi);
  return NFElement::from_integers(c);
}

inline NFElement random_rational(Rng& rng, std::size_t n, std::int64_t max_den, std::int64_t max_num) {
  std::vector<Rational> c;
  for (std::size_t r = 0; r < n; ++r)
    c.emplace_back(BigInt(static_cast<long>(uniform(rng, -max_num, max_num))),
                   BigInt(static_cast<long>(uniform(rng, 1, max_den))));
  return NFElement(std::move(c));
}

inline std::vector<NumberField> test_fields() {
  return {NumberField({1, 0, 1}), NumberField({-2, 0, 1}), NumberField({-2, 0, 0, 1})};
}

// Union of exact partitions {alpha + beta O_K : alpha in O_K / beta O_K} over
// small-norm betas, with random integral omegas. Empty optional when the
// draw overflows k or the coset cap.
inline std::optional<NFCoverSystem> random_nf_cover(Rng& rng, const NumberField& f, std::size_t max_k = 12,
                                                    std::int64_t max_norm = 4, std::int64_t coset_cap = 20000) {
  const std::size_t n = f.degree();
  std::vector<NFResidueClass> classes;
  const auto copies = uniform(rng, 1, 2);
  for (std::int64_t c = 0; c < copies; ++c) {
    NFElement beta;
    for (int tries = 0;; ++tries) {
      beta = random_integral(rng, n, -2, 2);
      if (beta.is_zero()) continue;
      if (norm_abs(f, beta) <= max_norm) break;
      if (tries > 200) return std::nullopt;
    }
    for (const auto& alpha : coset_reps(f, beta)) classes.emplace_back(alpha, beta);
  }
  if (uniform(rng, 0, 1) == 1) {
    NFElement beta = random_integral(rng, n, -1, 1);
    if (!beta.is_zero() && norm_abs(f, beta) <= max_norm)
      classes.emplace_back(random_integral(rng, n, -3, 3), beta);
  }
  if (classes.size() > max_k) return std::nullopt;
  std::shuffle(classes.begin(), classes.end(), rng);
  std::vector<NFElement> omegas;
  for (std::size_t s = 0; s < classes.size(); ++s) omegas.push_back(random_integral(rng, n, -3, 3));
  NFCoverSystem sys(f, std::move(classes), std::move(omegas));
  if (norm_abs(f, sys.beta_product()) > coset_cap) return std::nullopt;
  return sys;
}

}  // namespace coverkit::testing
