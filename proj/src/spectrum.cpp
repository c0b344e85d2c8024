#include "coverkit/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "coverkit/error.hpp"
#include "coverkit/integer.hpp"

namespace coverkit {

namespace {

constexpr std::int64_t kDenseLimit = std::int64_t{1} << 20;

BigInt to_big(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

BigInt lookup(const std::vector<std::pair<std::int64_t, BigInt>>& counts, std::int64_t key) {
  auto it = std::lower_bound(counts.begin(), counts.end(), key,
                             [](const auto& p, std::int64_t r) { return p.first < r; });
  return it != counts.end() && it->first == key ? it->second : BigInt(0);
}

BigInt sum_counts(const std::vector<std::pair<std::int64_t, BigInt>>& counts) {
  BigInt t = 0;
  for (const auto& [key, c] : counts) t += c;
  return t;
}

// Shift of class s over denominator N: m_s * (N / n_s) mod N.
std::int64_t class_shift(const CoverSystem& sys, std::size_t s, std::int64_t denominator) {
  const std::int64_t step = denominator / sys[s].modulus();
  const std::int64_t w = mod_floor(sys.weight(s), sys[s].modulus());
  return mod_floor(checked_mul(w, step), denominator);
}

// Dense cyclic convolution with per-class kernel (1 + x^c). Count is any
// type closed under addition; uint64 is exact while k < 64.
template <typename Count>
std::vector<std::pair<std::int64_t, BigInt>> dense_cyclic(const std::vector<std::int64_t>& shifts,
                                                          std::int64_t denominator) {
  const auto n = static_cast<std::size_t>(denominator);
  std::vector<Count> cur(n, Count(0)), next(n, Count(0));
  cur[0] = Count(1);
  for (std::int64_t c64 : shifts) {
    const auto c = static_cast<std::size_t>(c64);
    if (c == 0) {
      for (auto& v : cur) v += v;
      continue;
    }
    // next[r] = cur[r] + cur[r - c mod N]
    for (std::size_t r = 0; r < c; ++r) next[r] = cur[r] + cur[r + n - c];
    for (std::size_t r = c; r < n; ++r) next[r] = cur[r] + cur[r - c];
    std::swap(cur, next);
  }
  std::vector<std::pair<std::int64_t, BigInt>> out;
  for (std::size_t r = 0; r < n; ++r) {
    if (cur[r] == Count(0)) continue;
    if constexpr (std::is_same_v<Count, std::uint64_t>)
      out.emplace_back(static_cast<std::int64_t>(r), to_big(cur[r]));
    else
      out.emplace_back(static_cast<std::int64_t>(r), cur[r]);
  }
  return out;
}

std::vector<std::pair<std::int64_t, BigInt>> sparse_cyclic(const std::vector<std::int64_t>& shifts,
                                                           std::int64_t denominator) {
  std::map<std::int64_t, BigInt> cur{{0, BigInt(1)}};
  for (std::int64_t c : shifts) {
    std::map<std::int64_t, BigInt> next = cur;
    for (const auto& [r, v] : cur) {
      // r, c < N <= 2^62 here, so r + c does not overflow
      next[(r + c) % denominator] += v;
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

}  // namespace

BigInt SpectrumReport::count_at(std::int64_t r) const { return lookup(counts, r); }

std::vector<std::int64_t> SpectrumReport::support() const {
  std::vector<std::int64_t> out;
  out.reserve(counts.size());
  for (const auto& [r, c] : counts) out.push_back(r);
  return out;
}

BigInt SpectrumReport::total() const { return sum_counts(counts); }

BigInt ExtendedSpectrumReport::count_at(std::int64_t v) const { return lookup(counts, v); }

BigInt ExtendedSpectrumReport::total() const { return sum_counts(counts); }

BigInt pow2(std::size_t e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

SpectrumReport spectrum_dp(const CoverSystem& sys) { return spectrum_dp(sys, sys.period()); }

SpectrumReport spectrum_dp(const CoverSystem& sys, std::int64_t denominator) {
  for (std::int64_t n : sys.moduli())
    if (denominator % n != 0)
      throw Error(ErrorCode::precondition,
                  "denominator " + std::to_string(denominator) + " is not a multiple of modulus " +
                      std::to_string(n));
  std::vector<std::int64_t> shifts;
  shifts.reserve(sys.size());
  for (std::size_t s = 0; s < sys.size(); ++s) shifts.push_back(class_shift(sys, s, denominator));

  SpectrumReport rep;
  rep.denominator = denominator;
  rep.k = sys.size();
  if (denominator >= kDenseLimit)
    rep.counts = sparse_cyclic(shifts, denominator);
  else if (sys.size() < 64)
    rep.counts = dense_cyclic<std::uint64_t>(shifts, denominator);
  else
    rep.counts = dense_cyclic<BigInt>(shifts, denominator);
  return rep;
}

SpectrumReport spectrum_bruteforce(const CoverSystem& sys, std::size_t cap) {
  const std::size_t k = sys.size();
  if (k > cap || k >= 63)
    throw Error(ErrorCode::cap_exceeded,
                "brute-force spectrum needs k <= " + std::to_string(cap) + ", got " +
                    std::to_string(k));
  const std::int64_t denominator = sys.period();
  const BigInt big_den = static_cast<long>(denominator);
  std::vector<Rational> terms;
  terms.reserve(k);
  for (std::size_t s = 0; s < k; ++s)
    terms.emplace_back(BigInt(static_cast<long>(sys.weight(s))),
                       BigInt(static_cast<long>(sys[s].modulus())));

  std::map<std::int64_t, std::uint64_t> tally;
  auto record = [&](const Rational& sum) {
    Rational f = frac_part(sum);
    BigInt r = f.num() * (big_den / f.den());
    ++tally[r.get_si()];
  };
  // Gray-code walk: consecutive subsets differ in exactly one index.
  Rational sum;
  std::uint64_t mask = 0;
  record(sum);
  const std::uint64_t subsets = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < subsets; ++i) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    mask ^= std::uint64_t{1} << bit;
    if (mask >> bit & 1)
      sum += terms[bit];
    else
      sum -= terms[bit];
    record(sum);
  }

  SpectrumReport rep;
  rep.denominator = denominator;
  rep.k = k;
  for (const auto& [r, c] : tally) rep.counts.emplace_back(r, to_big(c));
  return rep;
}

SpectrumReport compute_spectrum(const CoverSystem& sys, SpectrumMethod method, std::size_t cap) {
  return method == SpectrumMethod::dp ? spectrum_dp(sys) : spectrum_bruteforce(sys, cap);
}

ExtendedSpectrumReport extended_spectrum(const CoverSystem& sys, std::optional<std::size_t> exclude) {
  if (!sys.has_unit_weights())
    throw Error(ErrorCode::precondition, "extended spectrum requires unit weights");
  if (exclude && *exclude >= sys.size())
    throw Error(ErrorCode::index_out_of_range, "excluded class index out of range");
  const std::int64_t denominator = sys.period();
  std::vector<std::int64_t> steps;
  for (std::size_t s = 0; s < sys.size(); ++s)
    if (!exclude || s != *exclude) steps.push_back(denominator / sys[s].modulus());

  const auto width = static_cast<std::size_t>(
      checked_mul(static_cast<std::int64_t>(steps.size()), denominator) + 1);
  ExtendedSpectrumReport rep;
  rep.denominator = denominator;
  rep.k = steps.size();
  if (denominator >= kDenseLimit) {
    std::map<std::int64_t, BigInt> cur{{0, BigInt(1)}};
    for (std::int64_t c : steps) {
      auto next = cur;
      for (const auto& [v, cnt] : cur) next[v + c] += cnt;
      cur = std::move(next);
    }
    rep.counts.assign(cur.begin(), cur.end());
    return rep;
  }
  std::vector<BigInt> cur(width, BigInt(0));
  cur[0] = 1;
  std::size_t reach = 0;
  for (std::int64_t c64 : steps) {
    const auto c = static_cast<std::size_t>(c64);
    for (std::size_t v = reach + 1; v-- > 0;)
      if (cur[v] != 0) cur[v + c] += cur[v];
    reach += c;
  }
  for (std::size_t v = 0; v <= reach; ++v)
    if (cur[v] != 0) rep.counts.emplace_back(static_cast<std::int64_t>(v), cur[v]);
  return rep;
}

Theorem11Report verify_theorem11(const CoverSystem& sys, SpectrumMethod method, std::size_t cap) {
  Theorem11Report rep;
  rep.m = covering_multiplicity(sys);
  rep.bound = pow2(rep.m);
  rep.spectrum = compute_spectrum(sys, method, cap);
  for (const auto& [r, c] : rep.spectrum.counts) {
    if (!rep.min_nonzero || c < *rep.min_nonzero) rep.min_nonzero = c;
    if (c < rep.bound) rep.offending.push_back(r);
  }
  rep.verdict = rep.offending.empty() ? Verdict::pass : Verdict::fail;
  return rep;
}

Corollary11Report verify_corollary11(const CoverSystem& sys, SpectrumMethod method,
                                     std::size_t cap) {
  Corollary11Report rep;
  rep.m = covering_multiplicity(sys);
  rep.k = sys.size();
  rep.support_size = compute_spectrum(sys, method, cap).support_size();
  rep.bound = pow2(rep.k - rep.m);
  rep.verdict = BigInt(static_cast<unsigned long>(rep.support_size)) <= rep.bound ? Verdict::pass
                                                                                 : Verdict::fail;
  return rep;
}

Corollary12Report verify_corollary12(const CoverSystem& sys) {
  Corollary12Report rep;
  auto not_applicable = [&](std::string why) {
    rep.verdict = Verdict::not_applicable;
    rep.reason = std::move(why);
    return rep;
  };
  if (sys.empty()) return not_applicable("empty system");
  if (!sys.has_unit_weights()) return not_applicable("weights must all be 1");
  rep.m = covering_multiplicity(sys);
  rep.last_modulus = sys[sys.size() - 1].modulus();
  if (rep.m == 0) return not_applicable("system is not a cover");
  if (is_m_cover(drop_class(sys, sys.size() - 1), rep.m))
    return not_applicable("first k-1 classes already form an m-cover");
  if (!is_periodic_mod(sys, rep.last_modulus))
    return not_applicable("covering function is not periodic modulo the last modulus");

  rep.count_bound = pow2(rep.m - 1);
  const auto ext = extended_spectrum(sys, sys.size() - 1);
  const std::int64_t big_n = ext.denominator;
  const std::int64_t step = big_n / rep.last_modulus;
  rep.rows.resize(static_cast<std::size_t>(rep.last_modulus));
  for (std::int64_t r = 0; r < rep.last_modulus; ++r) {
    auto& row = rep.rows[static_cast<std::size_t>(r)];
    row.r = r;
    row.count = 0;
    for (const auto& [v, c] : ext.counts) {
      if (v % big_n != r * step) continue;
      row.count += c;
      row.floors.emplace_back(static_cast<long>(v / big_n));
    }
    row.ok = row.count >= rep.count_bound && row.floors.size() >= rep.m;
    if (!row.ok) rep.verdict = Verdict::fail;
  }
  return rep;
}

Remark13Report verify_remark13(const CoverSystem& sys) {
  Remark13Report rep;
  auto not_applicable = [&](std::string why) {
    rep.verdict = Verdict::not_applicable;
    rep.reason = std::move(why);
    return rep;
  };
  if (sys.empty()) return not_applicable("empty system");
  if (!sys.has_unit_weights()) return not_applicable("weights must all be 1");
  rep.m = covering_multiplicity(sys);
  rep.last_modulus = sys[sys.size() - 1].modulus();
  if (rep.m == 0) return not_applicable("system is not a cover");
  if (!is_exact_m_cover(sys, rep.m)) return not_applicable("covering function is not constant");

  const auto ext = extended_spectrum(sys, sys.size() - 1);
  const std::int64_t big_n = ext.denominator;
  const std::int64_t step = big_n / rep.last_modulus;
  for (std::int64_t r = 0; r < rep.last_modulus; ++r) {
    for (std::size_t n = 0; n < rep.m; ++n) {
      Remark13Row row;
      row.r = r;
      row.n = n;
      row.count = ext.count_at(static_cast<std::int64_t>(n) * big_n + r * step);
      row.bound = binomial(rep.m - 1, n);
      row.ok = row.count >= row.bound;
      if (!row.ok) rep.verdict = Verdict::fail;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

Lemma21Witness lemma21_witness(const CoverSystem& sys, const Rational& theta) {
  if (covering_multiplicity(sys) < 1)
    throw Error(ErrorCode::precondition, "witness search needs a cover");
  const std::int64_t denominator = sys.period();
  const auto full = spectrum_dp(sys, denominator);

  auto residue_of = [&](const Rational& x) -> std::optional<std::int64_t> {
    if (x < Rational(0) || x >= Rational(1)) return std::nullopt;
    Rational scaled = x * Rational(denominator);
    if (!scaled.is_integer()) return std::nullopt;
    return scaled.num().get_si();
  };
  const auto r = residue_of(theta);
  if (!r || full.count_at(*r) == 0)
    throw Error(ErrorCode::not_in_spectrum, theta.to_string() + " is not in S(A)");

  for (std::size_t t = 0; t < sys.size(); ++t) {
    const auto reduced = spectrum_dp(drop_class(sys, t), denominator);
    const std::int64_t shifted = mod_floor(*r - class_shift(sys, t, denominator), denominator);
    if (reduced.count_at(*r) > 0 && reduced.count_at(shifted) > 0)
      return {t, theta, full.value(shifted)};
  }
  throw Error(ErrorCode::internal_invariant,
              "no witness index for theta = " + theta.to_string());
}

}  // namespace coverkit
