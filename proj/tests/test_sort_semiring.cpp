#include <doctest.h>

#include "suites.hpp"
#include "support.hpp"
#include "tropical/error.hpp"
#include "tropical/sort_semiring.hpp"

using namespace trop;

namespace {

const SortSemiring kNat = SortSemiring::naturals();
const SortSemiring kSuper = SortSemiring::two_layer();
const SortSemiring kTrunc3 = SortSemiring::truncated(3);
const SortSemiring kDoubledNat = SortSemiring::doubled(SortSemiring::naturals());

SortLayer fin(std::uint64_t n) { return SortLayer::fin(n); }
SortLayer pair(std::uint64_t k, std::uint64_t l) { return SortLayer::pair(k, l); }

}  // namespace

TEST_CASE("layer addition") {
  CHECK(layer_add(kNat, fin(1), fin(1)) == fin(2));
  CHECK(layer_add(kTrunc3, fin(2), fin(2)) == fin(3));
  CHECK(layer_add(kSuper, fin(1), fin(1)) == SortLayer::inf());
}

TEST_CASE("layer multiplication") {
  CHECK(layer_mul(kNat, fin(2), fin(3)) == fin(6));
  CHECK(layer_mul(kTrunc3, fin(2), fin(2)) == fin(3));
  CHECK(layer_mul(kDoubledNat, pair(1, 0), pair(0, 1)) == pair(0, 1));
}

TEST_CASE("layer order") {
  CHECK(layer_leq(kNat, fin(1), fin(5)));
  CHECK_FALSE(layer_leq(kDoubledNat, pair(1, 2), pair(2, 1)));
  CHECK_FALSE(layer_leq(kDoubledNat, pair(2, 1), pair(1, 2)));
  CHECK(layer_leq(kSuper, fin(1), SortLayer::inf()));
}

TEST_CASE("negation map") {
  CHECK(negation_tau(kDoubledNat, pair(1, 0)) == pair(0, 1));
  CHECK(negation_tau(kDoubledNat, negation_tau(kDoubledNat, pair(2, 3))) == pair(2, 3));
  const auto lhs = negation_tau(kDoubledNat, layer_mul(kDoubledNat, pair(1, 0), pair(0, 1)));
  CHECK(lhs == pair(1, 0));
  CHECK(layer_mul(kDoubledNat, negation_tau(kDoubledNat, pair(1, 0)), pair(0, 1)) == pair(1, 0));
  CHECK_THROWS_AS(negation_tau(kNat, fin(1)), Error);
}

TEST_CASE("descriptor parsing") {
  CHECK(SortSemiring::parse("super") == kSuper);
  CHECK(SortSemiring::parse("nat") == kNat);
  CHECK(SortSemiring::parse("trunc:3") == kTrunc3);
  CHECK(SortSemiring::parse("doubled:nat") == kDoubledNat);
  CHECK(SortSemiring::parse("doubled:trunc:3").descriptor() == "doubled:trunc:3");
  for (const auto& L : testing::all_semirings()) CHECK(SortSemiring::parse(L.descriptor()) == L);
  CHECK_THROWS_AS(SortSemiring::parse("doubled:doubled:nat"), Error);
  CHECK_THROWS_AS(SortSemiring::parse("trunc:x"), Error);
  CHECK_THROWS_AS(SortSemiring::parse("reals"), Error);
}

TEST_CASE("semiring overflow is reported") {
  CHECK_THROWS_AS(layer_mul(kNat, fin(std::uint64_t{1} << 40), fin(std::uint64_t{1} << 40)), Error);
}

TEST_CASE("exp_maxtimes") {
  CHECK(exp_maxtimes(ValueRat(2)) == std::pair<ValueRat, std::uint64_t>(ValueRat(2), 2));
  CHECK(exp_maxtimes(ValueRat(1)) == std::pair<ValueRat, std::uint64_t>(ValueRat(1), 2));
  CHECK(exp_maxtimes(ValueRat(1, 2)) == std::pair<ValueRat, std::uint64_t>(ValueRat(1), 1));
}

TEST_CASE("sort semiring properties") {
  for (const auto& r : {testing::suite_sort_laws(100, 11), testing::suite_truncation_homomorphism(),
                        testing::suite_negation_laws(100, 12)}) {
    INFO(r.summary());
    CHECK(r.ok());
  }
}
