#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coverkit/int_matrix.hpp"
#include "coverkit/rational.hpp"

namespace coverkit {

inline constexpr std::int64_t kDefaultCosetCap = 1'000'000;

// Element of K = Q(gamma) as coordinates mu_0..mu_{n-1} in the power basis.
class NFElement {
 public:
  NFElement() = default;
  explicit NFElement(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static NFElement from_integers(const std::vector<std::int64_t>& coords);
  static NFElement zero(std::size_t n) { return NFElement(std::vector<Rational>(n)); }
  static NFElement scalar(std::size_t n, const Rational& c);

  std::size_t degree() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t r) const { return coords_[r]; }

  bool is_zero() const;
  // All coordinates integral, i.e. membership in Z[gamma].
  bool has_integral_coords() const;

  NFElement& operator+=(const NFElement& o);
  NFElement& operator-=(const NFElement& o);
  friend NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
  friend NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
  friend bool operator==(const NFElement&, const NFElement&) = default;

  // "(c0, c1, ...)"
  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

// K = Q(gamma) with gamma a root of a monic integer polynomial; the ring of
// integers is taken to be Z[gamma].
class NumberField {
 public:
  // Ascending coefficients c_0..c_n with c_n = 1 and n >= 1. Polynomials of
  // degree >= 2 with an integer root are rejected as reducible_min_poly;
  // other reducible inputs surface later as singular divisions.
  explicit NumberField(std::vector<BigInt> min_poly);

  std::size_t degree() const { return degree_; }
  const std::vector<BigInt>& min_poly() const { return min_poly_; }

  NFElement one() const { return NFElement::scalar(degree_, Rational(1)); }
  NFElement gamma_power(std::size_t j) const;

  NFElement mul(const NFElement& a, const NFElement& b) const;
  // Unique y with b*y = a. Throws division_by_zero or reducible_min_poly.
  NFElement div(const NFElement& a, const NFElement& b) const;

  // Column j holds the coordinates of b * gamma^j.
  std::vector<std::vector<Rational>> multiplication_matrix(const NFElement& b) const;
  IntMatrix integer_multiplication_matrix(const NFElement& b) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.min_poly_ == b.min_poly_;
  }

 private:
  void check(const NFElement& a) const;

  std::size_t degree_;
  std::vector<BigInt> min_poly_;
  // reduction_[i] = coordinates of gamma^(n+i), i = 0..n-2
  std::vector<std::vector<BigInt>> reduction_;
};

inline NFElement nf_mul(const NumberField& f, const NFElement& a, const NFElement& b) {
  return f.mul(a, b);
}
inline NFElement nf_div(const NumberField& f, const NFElement& a, const NFElement& b) {
  return f.div(a, b);
}

// Last power-basis coordinate.
Rational psi(const NumberField& f, const NFElement& a);

// Integrality through psi(a), psi(a*gamma), ..., psi(a*gamma^{n-1}).
bool is_integral_psi(const NumberField& f, const NFElement& a);

// The class alpha + beta*O_K with integral alpha and nonzero integral beta.
class NFResidueClass {
 public:
  NFResidueClass(NFElement alpha, NFElement beta);

  const NFElement& alpha() const { return alpha_; }
  const NFElement& beta() const { return beta_; }

  friend bool operator==(const NFResidueClass&, const NFResidueClass&) = default;

 private:
  NFElement alpha_;
  NFElement beta_;
};

bool class_contains(const NumberField& f, const NFResidueClass& c, const NFElement& x);

// Transversal of O_K / beta*O_K read off the Hermite form of the
// multiplication-by-beta matrix, lexicographic in the coordinates.
// Throws coset_explosion when |N(beta)| > cap.
std::vector<NFElement> coset_reps(const NumberField& f, const NFElement& beta,
                                  std::int64_t cap = kDefaultCosetCap);

// |det| of the multiplication-by-beta matrix.
BigInt norm_abs(const NumberField& f, const NFElement& beta);

}  // namespace coverkit
