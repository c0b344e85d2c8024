#include "coverkit/rational.hpp"

#include "coverkit/error.hpp"

namespace coverkit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::validation_error: return "validation-error";
    case ErrorCode::period_overflow: return "period-overflow";
    case ErrorCode::singular_matrix: return "singular-matrix";
    case ErrorCode::division_by_zero: return "division-by-zero";
    case ErrorCode::reducible_min_poly: return "reducible-min-poly";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::not_in_spectrum: return "not-in-spectrum";
    case ErrorCode::internal_invariant: return "internal-invariant-violation";
    case ErrorCode::cap_exceeded: return "cap-exceeded";
    case ErrorCode::coset_explosion: return "coset-explosion";
    case ErrorCode::spec_violation: return "spec-violation";
    case ErrorCode::precondition: return "precondition-violation";
  }
  return "unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw Error(ErrorCode::division_by_zero, "rational with zero denominator");
  value_.canonicalize();
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::division_by_zero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::to_string() const { return value_.get_str(); }

Rational Rational::parse(const std::string& text) {
  mpq_class v;
  if (text.empty() || v.set_str(text, 10) != 0)
    throw Error(ErrorCode::parse_error, "not a rational: '" + text + "'");
  if (v.get_den() == 0) throw Error(ErrorCode::division_by_zero, "rational with zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational frac_part(const Rational& x) { return x - Rational(x.floor()); }

}  // namespace coverkit
