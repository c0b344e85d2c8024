#include "coverkit/nf_cover.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "coverkit/error.hpp"
#include "coverkit/integer.hpp"

namespace coverkit {

NFCoverSystem::NFCoverSystem(NumberField field, std::vector<NFResidueClass> classes,
                             std::optional<std::vector<NFElement>> omegas)
    : field_(std::move(field)), classes_(std::move(classes)), omegas_(std::move(omegas)) {
  const std::size_t n = field_.degree();
  for (const auto& c : classes_)
    if (c.alpha().degree() != n)
      throw Error(ErrorCode::validation_error, "class coordinates do not match the field degree");
  if (omegas_) {
    if (omegas_->size() != classes_.size())
      throw Error(ErrorCode::validation_error, "omegas has " + std::to_string(omegas_->size()) +
                                                   " entries for " +
                                                   std::to_string(classes_.size()) + " classes");
    for (const auto& w : *omegas_)
      if (w.degree() != n || !w.has_integral_coords())
        throw Error(ErrorCode::validation_error, "omegas must be integral elements of the field");
  }
}

NFElement NFCoverSystem::omega(std::size_t s) const {
  return omegas_ ? (*omegas_)[s] : field_.one();
}

NFElement NFCoverSystem::beta_product() const {
  NFElement p = field_.one();
  for (const auto& c : classes_) p = field_.mul(p, c.beta());
  return p;
}

namespace {

// x in alpha + beta O_K  <=>  adj(M_beta) (x - alpha) == 0 (mod det M_beta).
struct MembershipTest {
  IntMatrix adjugate;
  BigInt det;
  std::vector<BigInt> alpha;

  MembershipTest(const NumberField& f, const NFResidueClass& c)
      : adjugate(f.degree(), f.degree()) {
    const IntMatrix m = f.integer_multiplication_matrix(c.beta());
    det = determinant(m);
    if (det == 0)
      throw Error(ErrorCode::reducible_min_poly, "beta " + c.beta().to_string() + " is a zero divisor");
    // Columns of M^{-1} are beta^{-1} gamma^j.
    const auto inv = f.multiplication_matrix(f.div(f.one(), c.beta()));
    for (std::size_t i = 0; i < f.degree(); ++i)
      for (std::size_t j = 0; j < f.degree(); ++j) adjugate(i, j) = (inv[i][j] * Rational(det)).num();
    for (const auto& a : c.alpha().coords()) alpha.push_back(a.num());
  }

  bool contains(const std::vector<BigInt>& x) const {
    const std::size_t n = alpha.size();
    for (std::size_t i = 0; i < n; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += adjugate(i, j) * (x[j] - alpha[j]);
      if (!mpz_divisible_p(acc.get_mpz_t(), det.get_mpz_t())) return false;
    }
    return true;
  }
};

std::vector<BigInt> integer_coords(const NFElement& x) {
  if (!x.has_integral_coords())
    throw Error(ErrorCode::precondition, "expected an element of O_K");
  std::vector<BigInt> out;
  for (const auto& c : x.coords()) out.push_back(c.num());
  return out;
}

std::vector<MembershipTest> membership_tests(const NFCoverSystem& sys) {
  std::vector<MembershipTest> tests;
  tests.reserve(sys.size());
  for (const auto& c : sys.classes()) tests.emplace_back(sys.field(), c);
  return tests;
}

std::int64_t common_denominator(const std::vector<NFElement>& elems) {
  std::int64_t d = 1;
  for (const auto& e : elems)
    for (const auto& c : e.coords()) {
      if (!c.den().fits_slong_p())
        throw Error(ErrorCode::period_overflow, "coordinate denominator exceeds 64 bits");
      d = checked_lcm(d, c.den().get_si());
    }
  return d;
}

std::vector<NFElement> quotients(const NFCoverSystem& sys) {
  std::vector<NFElement> v;
  v.reserve(sys.size());
  for (std::size_t s = 0; s < sys.size(); ++s)
    v.push_back(sys.field().div(sys.omega(s), sys[s].beta()));
  return v;
}

}  // namespace

std::size_t nf_covering_count(const NFCoverSystem& sys, const NFElement& x) {
  const auto xs = integer_coords(x);
  std::size_t count = 0;
  for (const auto& t : membership_tests(sys)) count += t.contains(xs);
  return count;
}

std::size_t nf_cover_multiplicity(const NFCoverSystem& sys, std::int64_t coset_cap) {
  if (sys.size() == 0) return 0;
  const auto tests = membership_tests(sys);
  std::size_t best = sys.size();
  for (const auto& x : coset_reps(sys.field(), sys.beta_product(), coset_cap)) {
    const auto xs = integer_coords(x);
    std::size_t count = 0;
    for (const auto& t : tests) count += t.contains(xs);
    best = std::min(best, count);
    if (best == 0) break;
  }
  return best;
}

NFClassKey nf_class_key(const NFElement& x, std::int64_t common_denominator) {
  NFClassKey key;
  key.reserve(x.degree());
  const Rational d(common_denominator);
  for (const auto& c : x.coords()) {
    const Rational scaled = frac_part(c) * d;
    if (!scaled.is_integer())
      throw Error(ErrorCode::internal_invariant, "common denominator does not clear " + c.to_string());
    key.push_back(scaled.num().get_si());
  }
  return key;
}

NFSubsetClasses nf_subset_classes(const NFCoverSystem& sys, const NFElement& mu,
                                  SpectrumMethod method, std::size_t brute_cap) {
  if (mu.degree() != sys.field().degree())
    throw Error(ErrorCode::validation_error, "mu has the wrong number of coordinates");
  const auto v = quotients(sys);
  auto all = v;
  all.push_back(mu);
  NFSubsetClasses out;
  out.common_denominator = common_denominator(all);
  const std::int64_t d = out.common_denominator;
  const std::size_t n = sys.field().degree();
  const std::size_t k = sys.size();

  if (method == SpectrumMethod::brute_force) {
    if (k > brute_cap || k >= 63)
      throw Error(ErrorCode::cap_exceeded, "brute-force class count needs k <= " + std::to_string(brute_cap));
    std::map<NFClassKey, std::uint64_t> tally;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      NFElement sum = NFElement::zero(n);
      for (std::size_t s = 0; s < k; ++s)
        if (mask >> s & 1) sum += v[s];
      ++tally[nf_class_key(sum, d)];
    }
    for (const auto& [key, c] : tally) out.counts.emplace(key, BigInt(static_cast<unsigned long>(c)));
    return out;
  }

  out.counts.emplace(NFClassKey(n, 0), BigInt(1));
  for (const auto& vs : v) {
    const NFClassKey shift = nf_class_key(vs, d);
    auto next = out.counts;
    for (const auto& [key, c] : out.counts) {
      NFClassKey moved(n);
      for (std::size_t r = 0; r < n; ++r) moved[r] = (key[r] + shift[r]) % d;
      next[moved] += c;
    }
    out.counts = std::move(next);
  }
  return out;
}

Theorem12Report verify_theorem12(const NFCoverSystem& sys, const NFElement& mu, SpectrumMethod method,
                                 std::size_t brute_cap, std::int64_t coset_cap) {
  Theorem12Report rep;
  rep.m = nf_cover_multiplicity(sys, coset_cap);
  rep.bound = pow2(rep.m);
  rep.mu = mu;
  rep.classes = nf_subset_classes(sys, mu, method, brute_cap);
  const auto target = rep.classes.counts.find(nf_class_key(mu, rep.classes.common_denominator));
  rep.target_count = target == rep.classes.counts.end() ? BigInt(0) : target->second;
  for (const auto& [key, c] : rep.classes.counts)
    if (c < rep.bound) rep.offending.push_back(key);
  const bool target_ok = rep.target_count == 0 || rep.target_count >= rep.bound;
  rep.verdict = target_ok && rep.offending.empty() ? Verdict::pass : Verdict::fail;
  return rep;
}

VanishingReport vanishing_witness_check(const NFCoverSystem& sys, std::int64_t coset_cap) {
  const NumberField& f = sys.field();
  const std::size_t n = f.degree();
  VanishingReport rep;
  rep.m = nf_cover_multiplicity(sys, coset_cap);

  // psi(q_s (x + alpha_s)) = psi(q_s alpha_s) + sum_r x_r psi(q_s gamma^r), q_s = omega_s / beta_s.
  struct Exponent {
    Rational constant;
    std::vector<Rational> linear;
  };
  std::vector<Exponent> exps;
  const auto q = quotients(sys);
  for (std::size_t s = 0; s < sys.size(); ++s) {
    Exponent e;
    e.constant = psi(f, f.mul(q[s], sys[s].alpha()));
    for (std::size_t r = 0; r < n; ++r) e.linear.push_back(psi(f, f.mul(q[s], f.gamma_power(r))));
    exps.push_back(std::move(e));
  }

  rep.reps = coset_reps(f, sys.beta_product(), coset_cap);
  for (const auto& x : rep.reps) {
    std::optional<std::size_t> found;
    for (std::size_t s = 0; s < exps.size() && !found; ++s) {
      Rational value = exps[s].constant;
      for (std::size_t r = 0; r < n; ++r) value += x[r] * exps[s].linear[r];
      if (value.is_integer()) found = s;
    }
    rep.certifying_class.push_back(found);
    ++rep.reps_checked;
    if (!found && !rep.failing_x) rep.failing_x = x;
  }
  if (rep.m == 0)
    rep.verdict = Verdict::not_applicable;
  else
    rep.verdict = rep.failing_x ? Verdict::fail : Verdict::pass;
  return rep;
}

}  // namespace coverkit
