#include "coverkit/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "coverkit/error.hpp"

namespace coverkit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0)
    throw Error(ErrorCode::validation_error, "matrix dimensions must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::validation_error, "ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::validation_error, "matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt determinant(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::validation_error, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix m = a;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Column operation on (h, u): [col_i, col_j] <- [col_i, col_j] * [[p, -b/g], [q, a/g]]
// where p*a + q*b = g. Afterwards h(row, i) = g and h(row, j) = 0.
void gcd_combine(IntMatrix& h, IntMatrix& u, std::size_t row, std::size_t i, std::size_t j) {
  BigInt a = h(row, i), b = h(row, j), g, p, q;
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const BigInt ag = a / g, bg = b / g;
  auto apply = [&](IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      BigInt ci = m(r, i), cj = m(r, j);
      m(r, i) = p * ci + q * cj;
      m(r, j) = ag * cj - bg * ci;
    }
  };
  apply(h);
  apply(u);
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

// col_dst -= q * col_src
void axpy_column(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

}  // namespace

HermiteForm hnf(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::validation_error, "hnf requires a square matrix");
  const std::size_t n = a.rows();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Columns < i are finished; clear row i to the right of the diagonal.
    std::size_t pivot = i;
    while (pivot < n && h(i, pivot) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::singular_matrix, "hnf of a singular matrix");
    if (pivot != i) {
      for (std::size_t r = 0; r < n; ++r) {
        std::swap(h(r, i), h(r, pivot));
        std::swap(u(r, i), u(r, pivot));
      }
    }
    for (std::size_t j = i + 1; j < n; ++j)
      if (h(i, j) != 0) gcd_combine(h, u, i, i, j);
    if (h(i, i) < 0) {
      negate_column(h, i);
      negate_column(u, i);
    }
    // Column i is zero above row i, so this only touches rows >= i.
    for (std::size_t j = 0; j < i; ++j) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, i).get_mpz_t());
      if (q != 0) {
        axpy_column(h, j, i, q);
        axpy_column(u, j, i, q);
      }
    }
  }
  return {std::move(h), std::move(u)};
}

bool is_hermite_lower(const IntMatrix& h) {
  if (!h.is_square()) return false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h(i, i) <= 0) return false;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (j > i && h(i, j) != 0) return false;
      if (j < i && (h(i, j) < 0 || h(i, j) >= h(i, i))) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::int64_t>> lattice_coset_reps(const IntMatrix& a, std::int64_t cap) {
  const BigInt det = abs(determinant(a));
  if (det == 0) throw Error(ErrorCode::singular_matrix, "coset representatives of a singular lattice");
  if (det > BigInt(static_cast<long>(cap)))
    throw Error(ErrorCode::cap_exceeded,
                "lattice index " + det.get_str() + " exceeds cap " + std::to_string(cap));
  const IntMatrix h = hnf(a).h;
  const std::size_t n = a.rows();
  std::vector<std::int64_t> bound(n), digit(n, 0);
  for (std::size_t i = 0; i < n; ++i) bound[i] = h(i, i).get_si();

  std::vector<std::vector<std::int64_t>> reps;
  reps.reserve(det.get_ui());
  while (true) {
    reps.push_back(digit);
    // Odometer with the last coordinate fastest gives lexicographic order.
    std::size_t i = n;
    while (i > 0 && ++digit[i - 1] == bound[i - 1]) digit[--i] = 0;
    if (i == 0) break;
  }
  return reps;
}

}  // namespace coverkit
