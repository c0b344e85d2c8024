#include "coverkit/number_field.hpp"

#include <sstream>
#include <utility>

#include "coverkit/error.hpp"

namespace coverkit {

NFElement NFElement::from_integers(const std::vector<std::int64_t>& coords) {
  std::vector<Rational> out;
  out.reserve(coords.size());
  for (std::int64_t c : coords) out.emplace_back(c);
  return NFElement(std::move(out));
}

NFElement NFElement::scalar(std::size_t n, const Rational& c) {
  std::vector<Rational> out(n);
  out.at(0) = c;
  return NFElement(std::move(out));
}

bool NFElement::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool NFElement::has_integral_coords() const {
  for (const auto& c : coords_)
    if (!c.is_integer()) return false;
  return true;
}

NFElement& NFElement::operator+=(const NFElement& o) {
  if (o.degree() != degree()) throw Error(ErrorCode::validation_error, "degree mismatch");
  for (std::size_t r = 0; r < coords_.size(); ++r) coords_[r] += o.coords_[r];
  return *this;
}

NFElement& NFElement::operator-=(const NFElement& o) {
  if (o.degree() != degree()) throw Error(ErrorCode::validation_error, "degree mismatch");
  for (std::size_t r = 0; r < coords_.size(); ++r) coords_[r] -= o.coords_[r];
  return *this;
}

std::string NFElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t r = 0; r < coords_.size(); ++r) os << (r ? ", " : "") << coords_[r];
  os << ')';
  return os.str();
}

namespace {

BigInt eval_poly(const std::vector<BigInt>& poly, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

// A monic integer polynomial's rational roots are integer divisors of c_0.
bool has_integer_root(const std::vector<BigInt>& poly) {
  const BigInt& c0 = poly.front();
  if (c0 == 0) return true;
  BigInt a = abs(c0);
  if (!a.fits_slong_p() || a > 1'000'000'000'000L) return false;  // screen only small constants
  const long v = a.get_si();
  for (long d = 1; d <= v / d; ++d) {
    if (v % d != 0) continue;
    for (long cand : {d, -d, v / d, -(v / d)})
      if (eval_poly(poly, BigInt(cand)) == 0) return true;
  }
  return false;
}

}  // namespace

NumberField::NumberField(std::vector<BigInt> min_poly) : degree_(0), min_poly_(std::move(min_poly)) {
  if (min_poly_.size() < 2)
    throw Error(ErrorCode::validation_error, "minimal polynomial must have degree >= 1");
  if (min_poly_.back() != 1)
    throw Error(ErrorCode::validation_error,
                "minimal polynomial must be monic (last coefficient 1)");
  degree_ = min_poly_.size() - 1;
  if (degree_ >= 2 && has_integer_root(min_poly_))
    throw Error(ErrorCode::reducible_min_poly, "minimal polynomial has an integer root");

  const std::size_t n = degree_;
  // gamma^n = -(c_0 + ... + c_{n-1} gamma^{n-1})
  std::vector<BigInt> cur(n);
  for (std::size_t r = 0; r < n; ++r) cur[r] = -min_poly_[r];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    reduction_.push_back(cur);
    std::vector<BigInt> next(n);
    const BigInt top = cur[n - 1];
    for (std::size_t r = n - 1; r > 0; --r) next[r] = cur[r - 1];
    next[0] = 0;
    for (std::size_t r = 0; r < n; ++r) next[r] -= top * min_poly_[r];
    cur = std::move(next);
  }
}

void NumberField::check(const NFElement& a) const {
  if (a.degree() != degree_)
    throw Error(ErrorCode::validation_error,
                "element has " + std::to_string(a.degree()) + " coordinates in a degree " +
                    std::to_string(degree_) + " field");
}

NFElement NumberField::gamma_power(std::size_t j) const {
  NFElement out = one();
  NFElement g = NFElement::zero(degree_);
  if (degree_ == 1) {
    g = NFElement::scalar(1, Rational(BigInt(-min_poly_[0])));
  } else {
    std::vector<Rational> c(degree_);
    c[1] = 1;
    g = NFElement(std::move(c));
  }
  for (std::size_t i = 0; i < j; ++i) out = mul(out, g);
  return out;
}

NFElement NumberField::mul(const NFElement& a, const NFElement& b) const {
  check(a);
  check(b);
  const std::size_t n = degree_;
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Rational& c = prod[n + i];
    if (c.is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r) out[r] += c * Rational(reduction_[i][r]);
  }
  return NFElement(std::move(out));
}

std::vector<std::vector<Rational>> NumberField::multiplication_matrix(const NFElement& b) const {
  check(b);
  const std::size_t n = degree_;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  NFElement col = b;
  NFElement g = n == 1 ? one() : gamma_power(1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    if (j + 1 < n) col = mul(col, g);
  }
  return m;
}

IntMatrix NumberField::integer_multiplication_matrix(const NFElement& b) const {
  if (!b.has_integral_coords())
    throw Error(ErrorCode::validation_error, "expected an integral element");
  auto m = multiplication_matrix(b);
  IntMatrix out(degree_, degree_);
  for (std::size_t i = 0; i < degree_; ++i)
    for (std::size_t j = 0; j < degree_; ++j) out(i, j) = m[i][j].num();
  return out;
}

NFElement NumberField::div(const NFElement& a, const NFElement& b) const {
  check(a);
  if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "division by zero in the number field");
  const std::size_t n = degree_;
  auto m = multiplication_matrix(b);
  std::vector<Rational> rhs = a.coords();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n)
      throw Error(ErrorCode::reducible_min_poly,
                  "nonzero element " + b.to_string() + " is a zero divisor");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= factor * m[col][j];
      rhs[i] -= factor * rhs[col];
    }
  }
  return NFElement(std::move(rhs));
}

Rational psi(const NumberField& f, const NFElement& a) {
  if (a.degree() != f.degree()) throw Error(ErrorCode::validation_error, "degree mismatch");
  return a[f.degree() - 1];
}

bool is_integral_psi(const NumberField& f, const NFElement& a) {
  const NFElement g = f.gamma_power(1);
  NFElement cur = a;
  for (std::size_t j = 0; j < f.degree(); ++j) {
    if (!psi(f, cur).is_integer()) return false;
    if (j + 1 < f.degree()) cur = f.mul(cur, g);
  }
  return true;
}

NFResidueClass::NFResidueClass(NFElement alpha, NFElement beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.degree() != beta_.degree())
    throw Error(ErrorCode::validation_error, "alpha and beta have different degrees");
  if (!alpha_.has_integral_coords() || !beta_.has_integral_coords())
    throw Error(ErrorCode::validation_error, "alpha and beta must have integral coordinates");
  if (beta_.is_zero()) throw Error(ErrorCode::validation_error, "beta must be nonzero");
}

bool class_contains(const NumberField& f, const NFResidueClass& c, const NFElement& x) {
  return is_integral_psi(f, f.div(x - c.alpha(), c.beta()));
}

BigInt norm_abs(const NumberField& f, const NFElement& beta) {
  return abs(determinant(f.integer_multiplication_matrix(beta)));
}

std::vector<NFElement> coset_reps(const NumberField& f, const NFElement& beta, std::int64_t cap) {
  if (beta.is_zero()) throw Error(ErrorCode::division_by_zero, "coset representatives modulo 0");
  const IntMatrix m = f.integer_multiplication_matrix(beta);
  if (determinant(m) == 0)
    throw Error(ErrorCode::reducible_min_poly, "nonzero element " + beta.to_string() + " is a zero divisor");
  std::vector<std::vector<std::int64_t>> boxes;
  try {
    boxes = lattice_coset_reps(m, cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::cap_exceeded) throw;
    throw Error(ErrorCode::coset_explosion, std::string("|O_K / beta O_K|: ") + e.what());
  }
  std::vector<NFElement> reps;
  reps.reserve(boxes.size());
  for (const auto& x : boxes) reps.push_back(NFElement::from_integers(x));
  return reps;
}

}  // namespace coverkit
