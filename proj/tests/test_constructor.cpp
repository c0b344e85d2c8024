#include <doctest.h>

#include "coverkit/constructor.hpp"
#include "coverkit/error.hpp"
#include "coverkit/spectrum.hpp"

using namespace coverkit;

TEST_CASE("primality by trial division") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(-7));
}

TEST_CASE("Example11Spec validation") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal_invariant;
  };
  CHECK(code_of([] { Example11Spec(2, {2, 3}); }) == ErrorCode::spec_violation);
  CHECK(code_of([] { Example11Spec(1, {4}); }) == ErrorCode::spec_violation);
  CHECK(code_of([] { Example11Spec(2, {2, 3, 3}); }) == ErrorCode::spec_violation);
  CHECK(code_of([] { Example11Spec(0, {2}); }) == ErrorCode::spec_violation);
  CHECK(Example11Spec(2, {2, 3, 5}).modulus() == 30);
}

TEST_CASE("build_example11 for m=2 over 2,3,5") {
  const auto out = build_example11(Example11Spec(2, {2, 3, 5}));
  CHECK(out.star_covered == std::vector<std::int64_t>{0, 6, 10, 12, 15, 18, 20, 24});
  CHECK(out.a_list.size() == 44);
  CHECK(out.system.size() == 47);
  CHECK(out.multiplicity == 2);
  CHECK(covering_multiplicity(out.system) == 2);
  // ascending, each residue m consecutive times
  for (std::size_t i = 0; i < out.a_list.size(); i += 2) {
    CHECK(out.a_list[i] == out.a_list[i + 1]);
    if (i + 2 < out.a_list.size()) CHECK(out.a_list[i] < out.a_list[i + 2]);
  }
  CHECK(out.system[0] == ResidueClass(0, 2));
  CHECK(out.system[2] == ResidueClass(0, 5));
  CHECK(out.system[3] == ResidueClass(1, 30));
}

TEST_CASE("build_example11 for m=1 over 2") {
  const auto out = build_example11(Example11Spec(1, {2}));
  CHECK(out.system == CoverSystem({ResidueClass(0, 2), ResidueClass(1, 2)}));
  CHECK(out.star_covered == std::vector<std::int64_t>{0});
}

TEST_CASE("star_covered equals residues divisible by at least m primes") {
  const std::vector<std::pair<std::size_t, std::vector<std::int64_t>>> cases{
      {1, {2}}, {1, {2, 3}}, {2, {2, 3, 5}}, {2, {3, 5, 7}}, {2, {2, 3, 5, 7}}, {3, {2, 3, 5, 7, 11}}};
  for (const auto& [m, primes] : cases) {
    const auto out = build_example11(Example11Spec(m, primes));
    std::vector<std::int64_t> expect;
    for (std::int64_t x = 0; x < out.spec.modulus(); ++x) {
      std::size_t hits = 0;
      for (auto p : primes) hits += (x % p == 0);
      if (hits >= m) expect.push_back(x);
    }
    CHECK(out.star_covered == expect);
    CHECK(out.multiplicity == m);
    for (auto a : out.a_list) CHECK_FALSE(std::binary_search(expect.begin(), expect.end(), a));
  }
}

TEST_CASE("check_unsplittable certificates") {
  const auto cert = check_unsplittable(build_example11(Example11Spec(2, {2, 3, 5})));
  CHECK(cert.verdict == Verdict::pass);
  REQUIRE(cert.partitions.size() == 8);
  for (const auto& p : cert.partitions) {
    CHECK(p.ok());
    CHECK(p.side1.size() <= p.side2.size());
    CHECK((p.witness == 6 || p.witness == 10 || p.witness == 15 || p.witness == 30));
  }

  const auto one = check_unsplittable(build_example11(Example11Spec(1, {2})));
  CHECK(one.verdict == Verdict::pass);
  REQUIRE(one.partitions.size() == 2);
  for (const auto& p : one.partitions) {
    CHECK(p.side1.empty());
    CHECK(p.witness == 2);
  }

  CHECK(check_unsplittable(build_example11(Example11Spec(2, {3, 5, 7}))).verdict == Verdict::pass);
  CHECK(check_unsplittable(build_example11(Example11Spec(2, {2, 3, 5, 7}))).verdict == Verdict::pass);
}

TEST_CASE("a tampered construction is not certified") {
  auto out = build_example11(Example11Spec(2, {2, 3, 5}));
  // pretend 6 was left uncovered by the star system
  out.a_list.insert(std::lower_bound(out.a_list.begin(), out.a_list.end(), 6), 6);
  const auto cert = check_unsplittable(out);
  CHECK(cert.verdict == Verdict::fail);
  REQUIRE(cert.first_failure.has_value());
  CHECK(cert.partitions[*cert.first_failure].witness == 6);
}

TEST_CASE("exhaustive splitter agrees with the witness certificate on small cases") {
  for (const auto& primes : {std::vector<std::int64_t>{2}, std::vector<std::int64_t>{2, 3}}) {
    const auto out = build_example11(Example11Spec(1, primes));
    CHECK(check_unsplittable(out).verdict == Verdict::pass);
    CHECK_FALSE(find_cover_split(out.system).has_value());
  }
  const auto split = find_cover_split(CoverSystem({ResidueClass(0, 1), ResidueClass(0, 1)}));
  CHECK(split.has_value());
  CHECK(find_cover_split(CoverSystem({ResidueClass(0, 2), ResidueClass(1, 2), ResidueClass(0, 1)})).has_value());
  CHECK_THROWS_AS(find_cover_split(CoverSystem(std::vector<ResidueClass>(30, ResidueClass(0, 1)))), Error);
}

TEST_CASE("sharpness example meets the bound with equality") {
  CHECK(sharpness_example(1).size() == 1);
  CHECK(spectrum_dp(sharpness_example(1)).counts ==
        std::vector<std::pair<std::int64_t, BigInt>>{{0, BigInt(2)}});
  CHECK(spectrum_dp(sharpness_example(3)).counts ==
        std::vector<std::pair<std::int64_t, BigInt>>{{0, BigInt(8)}});
  for (std::size_t m = 1; m <= 10; ++m) {
    const auto t = verify_theorem11(sharpness_example(m));
    CHECK(t.verdict == Verdict::pass);
    CHECK(t.m == m);
    CHECK(*t.min_nonzero == pow2(m));
  }
  CHECK_THROWS_AS(sharpness_example(0), Error);
}
