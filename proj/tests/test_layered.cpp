#include <doctest.h>

#include "suites.hpp"
#include "support.hpp"
#include "tropical/error.hpp"
#include "tropical/layered.hpp"

using namespace trop;
using testing::ghost;
using testing::nat;
using testing::tg;

TEST_CASE("layered addition and multiplication") {
  CHECK(nat(3, 1) + nat(5, 1) == nat(5, 1));
  CHECK(nat(4, 1) + nat(4, 1) == nat(4, 2));
  CHECK(LayeredScalar::zero() + nat(7, 3) == nat(7, 3));
  CHECK(nat(3, 1) * nat(5, 2) == nat(8, 2));
  CHECK(nat(7, 3) * LayeredScalar::one(SortSemiring::naturals()) == nat(7, 3));
  CHECK((LayeredScalar::zero() * nat(5, 2)).is_zero());
  CHECK(tg(4) + tg(4) == ghost(4));
}

TEST_CASE("descriptor-free unit") {
  const auto u = LayeredScalar::unit();
  CHECK(u.is_generic());
  CHECK(u * nat(7, 3) == nat(7, 3));
  CHECK(u == LayeredScalar::one(SortSemiring::naturals()));
  CHECK(u + nat(-1, 1) == LayeredScalar::one(SortSemiring::naturals()));
  CHECK_THROWS_AS(u + u, Error);
}

TEST_CASE("mixing descriptors is rejected") {
  CHECK_THROWS_AS(nat(1, 1) + tg(1), Error);
  CHECK_THROWS_AS(nat(1, 1) * tg(1), Error);
  CHECK_THROWS_AS(LayeredScalar::make(ValueRat(1), SortLayer::fin(2), SortSemiring::two_layer()), Error);
  CHECK_THROWS_AS(LayeredScalar::make(ValueRat(1), SortLayer::fin(0), SortSemiring::naturals()), Error);
}

TEST_CASE("sort and nu-value") {
  CHECK(sort(nat(4, 2)) == SortLayer::fin(2));
  CHECK(nu_eq(nat(4, 2), nat(4, 7)));
  CHECK_FALSE(nu_eq(nat(4, 2), nat(5, 2)));
  CHECK(is_tangible(nat(4, 1)));
  CHECK(is_ghost(nat(4, 2)));
  CHECK(is_ghost_or_zero(LayeredScalar::zero()));
}

TEST_CASE("ghost surpassing") {
  CHECK(ghost_surpass(ghost(3), tg(3)));
  // Over the naturals the only summand is the tangible 3^[1].
  CHECK_FALSE(ghost_surpass(nat(3, 2), nat(3, 1)));
  CHECK(ghost_surpass(nat(3, 3), nat(3, 1)));
  CHECK_FALSE(ghost_surpass(nat(4, 1), nat(3, 1)));
  CHECK(ghost_surpass(nat(5, 2), LayeredScalar::zero()));
  CHECK(ghost_surpass(ghost(5), tg(3)));
  CHECK_FALSE(ghost_surpass(ghost(2), tg(3)));
}

TEST_CASE("layered surpassing") {
  CHECK(l_surpass(nat(2, 4), nat(2, 2)));
  CHECK(l_surpass(nat(9, 5), nat(9, 5)));
  CHECK_FALSE(l_nu_surpass(nat(5, 1), nat(4, 1)));
  CHECK(l_nu_surpass(nat(2, 4), nat(2, 2)));
}

TEST_CASE("strong layered surpassing") {
  const auto L = SortSemiring::two_layer();
  const auto three = LayeredScalar::tangible(ValueRat(3), L);
  CHECK(strong_l_surpass(three + three, three, SortLayer::fin(1)));
  CHECK(strong_l_surpass(nat(9, 5), nat(9, 5), SortLayer::fin(7)));
  // Over the naturals 3^[2] = 3^[1] + 3^[1] and the summand layer 1 is below 2 + 2.
  CHECK_FALSE(strong_l_surpass(nat(3, 2), nat(3, 1), SortLayer::fin(2)));
  CHECK(strong_l_surpass(nat(3, 5), nat(3, 1), SortLayer::fin(2)));
}

TEST_CASE("exploded scalars") {
  using E = ExplodedScalar;
  CHECK(exploded_add(E::make(3, 5), E::make(-3, 5)) == E::make(0, 5));
  CHECK(exploded_add(E::make(3, 5), E::make(-3, 5)).is_ghost());
  CHECK(exploded_add(E::make(2, 1), E::make(7, 4)) == E::make(7, 4));
  CHECK(exploded_mul(E::make(2, 1), E::make(3, 2)) == E::make(6, 3));
  CHECK(exploded_projection(E::make(0, 5)) == ghost(5));
  CHECK(exploded_projection(E::make(2, 5)) == tg(5));
  CHECK(exploded_projection(E{}).is_zero());
}

TEST_CASE("natural multiples and powers") {
  CHECK(nat_multiple(3, nat(2, 2)) == nat(2, 6));
  CHECK(power(nat(2, 2), 3) == nat(6, 8));
  CHECK(nat_multiple(2, tg(1)) == ghost(1));
}

TEST_CASE("layered scalar properties") {
  using namespace testing;
  for (const auto& r : {suite_scalar_semiring_laws(200, 21), suite_properness(500, 22),
                        suite_supertropical_instance(200, 23), suite_ghost_ideal(200, 24),
                        suite_ghost_surpass_order(500, 25), suite_l_surpass_sum(500, 26),
                        suite_exploded_projection(500, 27)}) {
    INFO(r.summary());
    CHECK(r.ok());
  }
}
