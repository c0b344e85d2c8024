#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "coverkit/rational.hpp"

namespace coverkit {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> entries_;
};

// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntMatrix& a);

struct HermiteForm {
  IntMatrix h;  // lower triangular, positive diagonal, 0 <= h(i,j) < h(i,i) for j < i
  IntMatrix u;  // unimodular, h = a * u
};

// Column-style Hermite normal form of a square nonsingular matrix. The column
// lattice of h equals that of a. Throws singular_matrix otherwise.
HermiteForm hnf(const IntMatrix& a);

// Shape predicates of the canonical form returned by hnf().
bool is_hermite_lower(const IntMatrix& h);

// One representative of each coset of Z^n / a*Z^n: the box 0 <= x_i < h(i,i)
// of the Hermite form, in lexicographic order. Throws cap_exceeded when
// |det a| > cap.
std::vector<std::vector<std::int64_t>> lattice_coset_reps(const IntMatrix& a, std::int64_t cap);

}  // namespace coverkit
