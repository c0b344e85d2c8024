#include <doctest.h>

#include "coverkit/cover.hpp"
#include "coverkit/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace coverkit;

namespace {

CoverSystem make(std::initializer_list<std::pair<std::int64_t, std::int64_t>> cls) {
  std::vector<ResidueClass> v;
  for (auto [a, n] : cls) v.emplace_back(a, n);
  return CoverSystem(std::move(v));
}

const CoverSystem kClassic = make({{0, 2}, {0, 3}, {1, 4}, {5, 6}, {7, 12}});
const CoverSystem kExact2 = make({{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});

}  // namespace

TEST_CASE("residues are normalized into [0, n)") {
  CHECK(ResidueClass(-1, 5).residue() == 4);
  CHECK(ResidueClass(17, 5).residue() == 2);
  CHECK(ResidueClass(3, 1).residue() == 0);
  CHECK_THROWS_AS(ResidueClass(0, 0), Error);
  CHECK_THROWS_AS(ResidueClass(0, -3), Error);
}

TEST_CASE("weights length must match classes") {
  CHECK_THROWS_AS(CoverSystem({ResidueClass(0, 2)}, std::vector<std::int64_t>{1, 2}), Error);
  CoverSystem s({ResidueClass(0, 2), ResidueClass(1, 3)}, std::vector<std::int64_t>{4, -1});
  CHECK(s.weight(1) == -1);
  CHECK_FALSE(s.has_unit_weights());
  CHECK(kClassic.has_unit_weights());
}

TEST_CASE("covering_function examples") {
  CHECK(covering_function(kClassic, 7) == 1);
  CHECK(covering_function(make({{0, 1}}), -123) == 1);
  for (std::int64_t x = -12; x < 12; ++x) CHECK(covering_function(kExact2, x) == 2);
}

TEST_CASE("covering_multiplicity examples") {
  CHECK(covering_multiplicity(kClassic) == 1);
  for (std::size_t m = 1; m <= 6; ++m)
    CHECK(covering_multiplicity(CoverSystem(std::vector<ResidueClass>(m, ResidueClass(0, 1)))) == m);
  CHECK(covering_multiplicity(CoverSystem{}) == 0);
  CHECK(covering_multiplicity(kExact2) == 2);
  CHECK(covering_multiplicity(make({{0, 2}, {0, 4}})) == 0);
}

TEST_CASE("multiplicity over periods longer than one scan block") {
  // lcm(256, 255) = 65280 plus a class of modulus 7 pushes past 2^16
  const auto sys = make({{0, 1}, {0, 256}, {3, 255}, {1, 7}});
  CHECK(sys.period() == 456960);
  CHECK(covering_multiplicity(sys) == 1);
  CHECK(is_m_cover(sys, 1));
  CHECK_FALSE(is_m_cover(sys, 2));
}

TEST_CASE("is_periodic_mod examples") {
  CHECK(is_periodic_mod(kExact2, 3));
  CHECK(is_periodic_mod(kClassic, 12));
  CHECK_FALSE(is_periodic_mod(make({{0, 2}, {0, 4}}), 2));
  CHECK_FALSE(is_periodic_mod(kClassic, 6));
  CHECK(is_periodic_mod(kClassic, 24));
  CHECK_THROWS_AS(is_periodic_mod(kClassic, 0), Error);
}

TEST_CASE("exact cover predicate") {
  CHECK(is_exact_m_cover(kExact2, 2));
  CHECK_FALSE(is_exact_m_cover(kClassic, 1));
  CHECK(is_exact_m_cover(make({{0, 2}, {1, 2}}), 1));
}

TEST_CASE("drop_class examples") {
  CHECK(drop_class(make({{0, 2}, {1, 2}}), 1) == make({{0, 2}}));
  const auto four = drop_class(kExact2, 4);
  CHECK(four.size() == 4);
  CHECK(covering_multiplicity(four) == 1);
  CHECK(covering_function(four, 2) == 1);
  CHECK(drop_class(make({{3, 5}}), 0).empty());
  CHECK_THROWS_AS(drop_class(kExact2, 5), Error);
  CoverSystem weighted({ResidueClass(0, 2), ResidueClass(1, 3)}, std::vector<std::int64_t>{4, -1});
  CHECK(drop_class(weighted, 0).weight(0) == -1);
  CHECK(kExact2.size() == 5);
}

TEST_CASE("covering function properties on random systems") {
  testing::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto sys = testing::random_system(rng, 8, 12);
    const std::int64_t L = sys.period();
    CHECK(L == testing::lcm_by_gcd(sys.moduli()));
    for (std::int64_t x = 0; x < L; ++x) {
      CHECK(covering_function(sys, x) == covering_function(sys, x + L));
      CHECK(covering_function(sys, x) == testing::coverage_at(sys, x));
    }
    const auto mult = covering_multiplicity(sys);
    CHECK(mult == testing::multiplicity_by_scan(sys));
    auto grown = sys.classes();
    const auto n = testing::uniform(rng, 1, 12);
    grown.emplace_back(testing::uniform(rng, 0, n - 1), n);
    CHECK(covering_multiplicity(CoverSystem(grown)) >= mult);
    for (std::size_t t = 0; t < sys.size(); ++t) CHECK(covering_multiplicity(drop_class(sys, t)) + 1 >= mult);
    // periodicity agrees with a direct scan
    const auto q = testing::uniform(rng, 1, 24);
    bool direct = true;
    for (std::int64_t x = 0; x < L; ++x) direct &= testing::coverage_at(sys, x) == testing::coverage_at(sys, x + q);
    CHECK(is_periodic_mod(sys, q) == direct);
  }
}

TEST_CASE("random refined covers have the multiplicity the generator promises") {
  testing::Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const auto sys = testing::random_cover(rng);
    CHECK(covering_multiplicity(sys) >= 1);
    CHECK(covering_multiplicity(sys) == testing::multiplicity_by_scan(sys));
  }
}
