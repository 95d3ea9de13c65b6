#include <doctest.h>

#include "suites.hpp"
#include "support.hpp"
#include "tropical/linalg.hpp"

using namespace trop;
using testing::error_code;
using testing::ghost;
using testing::mat;
using testing::tg;
using testing::vec;

namespace {

const SortSemiring S = SortSemiring::two_layer();

TropMatrix rank_two() { return mat({{4, 4, 0}, {4, 4, 1}, {4, 4, 2}}); }

}  // namespace

TEST_CASE("dependence witnesses") {
  const auto same = VectorSet::rows_of(mat({{0, 0}, {0, 0}}));
  CHECK(is_dependent(same));
  const auto alpha = dependence_witness(same);
  REQUIRE(alpha);
  CHECK(*alpha == std::vector<LayeredScalar>{tg(0), tg(0)});
  CHECK(combine(same, *alpha) == TropVector{{ghost(0), ghost(0)}});

  const auto regular = VectorSet::rows_of(mat({{0, 0}, {1, 2}}));
  CHECK_FALSE(is_dependent(regular));
  CHECK_FALSE(dependence_witness(regular));

  const auto three = VectorSet::rows_of(mat({{0, 5}, {1, 2}, {3, -1}}));
  CHECK(is_dependent(three));
  const auto w = dependence_witness(three);
  REQUIRE(w);
  CHECK(all_ghost_or_zero(combine(three, *w)));
}

TEST_CASE("fewer vectors than the dimension") {
  const auto pair = VectorSet::rows_of(mat({{0, 0, 0}, {1, 1, 1}}));
  CHECK(is_dependent(pair));
  const auto indep = VectorSet::rows_of(mat({{0, 0, 0}, {0, 1, 2}}));
  CHECK_FALSE(is_dependent(indep));
}

TEST_CASE("ghost annihilators of a rank two matrix") {
  const TropMatrix A = rank_two();
  const TropVector image = TropVector{{ghost(5), ghost(5), ghost(5)}};
  CHECK(mat_mul(A, vec({1, 1, 0})) == image);
  CHECK(mat_mul(A, vec({1, 1, 1})) == image);
  const auto report = ghost_annihilator_rank_check(A);
  CHECK(report.rank_a == 2);
  CHECK(report.annihilator_rank_lower_bound >= 1);
  CHECK(report.holds);

  const auto id = ghost_annihilator_rank_check(identity(2, S));
  CHECK(id.rank_a == 2);
  CHECK(id.annihilators.empty());
  CHECK(id.holds);

  TropMatrix G(2, 2);
  G << ghost(1), ghost(0), ghost(3), ghost(2);
  const auto all_ghost = ghost_annihilator_rank_check(G);
  CHECK(all_ghost.rank_a == 0);
  CHECK(all_ghost.annihilator_rank_lower_bound == 2);
  CHECK(all_ghost.holds);
}

TEST_CASE("rank") {
  CHECK(rank(VectorSet::rows_of(rank_two())) == 2);
  CHECK(rank(VectorSet::rows_of(identity(3, S))) == 3);
  const TropVector v = vec({1, 2, 3});
  CHECK(rank(VectorSet{3, {v, v, v}}) == 1);
  CHECK(rank(VectorSet{3, {}}) == 0);
  VectorSet big{2, std::vector<TropVector>(kRankCap + 1, vec({0, 1}))};
  CHECK(error_code([&] { rank(big); }) == Errc::TooLarge);
}

TEST_CASE("rank is not submodular") {
  const TropVector v1 = vec({0, -2, -3, std::nullopt});
  const TropVector v2 = vec({-1, std::nullopt, std::nullopt, -2});
  const TropVector v3 = vec({3, -2, std::nullopt, 0});
  const TropVector v4 = vec({0, -1, -1, -3});
  const TropVector v5 = vec({-2, 2, 2, std::nullopt});
  CHECK(rank(VectorSet{4, {v1, v4, v5}}) == 3);
  CHECK(rank(VectorSet{4, {v1, v2, v4, v5}}) == 3);
  CHECK(rank(VectorSet{4, {v1, v3, v4, v5}}) == 3);
  CHECK(rank(VectorSet{4, {v1, v2, v3, v4, v5}}) == 4);
  CHECK_FALSE(is_dependent(VectorSet{4, {v1, v2, v3, v4}}));
}

TEST_CASE("tangible bases through a vector") {
  const auto I = VectorSet::rows_of(identity(2, S));
  const auto base = tangible_dbase_through(I, vec({0, std::nullopt}));
  CHECK(base.size() == 2);
  CHECK(rank(base) == 2);

  const auto V = VectorSet::rows_of(rank_two());
  const TropVector v = V.vectors[0];
  const auto through = tangible_dbase_through(V, v);
  CHECK(through.size() == 2);
  CHECK(through.vectors[0] == v);
  CHECK_FALSE(is_dependent(through));

  CHECK(error_code([&] { tangible_dbase_through(I, TropVector{{ghost(0), tg(0)}}); }) ==
        Errc::NotTangible);
}

TEST_CASE("tangible eigenvectors") {
  const TropMatrix A = mat({{4, 0}, {0, 1}});
  const auto pairs = eigen_tangible(A);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].beta == ValueRat(4));
  REQUIRE(pairs[0].vector);
  CHECK(pairs[0].exact);
  CHECK(mat_mul(A, *pairs[0].vector) == scalar_mul(tg(4), *pairs[0].vector));
  CHECK(pairs[1].beta == ValueRat(1));
  REQUIRE(pairs[1].vector);
  CHECK(ghost_surpasses(mat_mul(A, *pairs[1].vector), scalar_mul(tg(1), *pairs[1].vector)));

  const TropVector w = vec({0, 4});
  CHECK(mat_mul(A, w) == TropVector{{ghost(4), tg(5)}});
  CHECK(generalized_eigen_check(A, w, ValueRat(1), 4) == 1u);
  CHECK(generalized_eigen_check(A, vec({4, 0}), ValueRat(4), 4) == 1u);
  CHECK_FALSE(generalized_eigen_check(A, vec({0, 3}), ValueRat(-5), 4));

  const TropMatrix B = mat({{0, 0}, {1, 2}});
  CHECK(mat_mul(B, vec({0, 2})) == vec({2, 4}));
  CHECK(mat_mul(B, vec({2, 1})) == TropVector{{tg(2), ghost(3)}});
  const auto bp = eigen_tangible(B);
  REQUIRE(bp.size() == 2);
  CHECK(bp[0].beta == ValueRat(2));
  CHECK(bp[1].beta == ValueRat(0));
  CHECK(det_value(mat_add(B, identity(2, S))) == ghost(2));

  const auto one = eigen_tangible(mat({{5}}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].beta == ValueRat(5));
  REQUIRE(one[0].vector);
  CHECK(*one[0].vector == vec({0}));
}

TEST_CASE("bilinear forms") {
  const BilinearForm standard{identity(2, S)};
  const VectorSet twice{2, {vec({0, 1}), vec({0, 1})}};
  const TropMatrix G = gram(standard, twice);
  CHECK(G == TropMatrix{{tg(2), tg(2)}, {tg(2), tg(2)}});
  CHECK(det_value(G) == ghost(4));
  CHECK(is_dependent(twice));

  CHECK(is_ghost_orthogonal(standard, vec({0, std::nullopt}), vec({std::nullopt, 0})));
  CHECK_FALSE(is_ghost_orthogonal(standard, vec({0, 1}), vec({0, 1})));

  TropMatrix M = identity(2, S);
  M(0, 1) = ghost(0);
  const BilinearForm linked{M};
  CHECK(is_ghost_orthogonal(linked, vec({0, std::nullopt}), vec({std::nullopt, 0})));

  const auto report = is_nondegenerate(standard, VectorSet::rows_of(identity(2, S)));
  CHECK(report.nondegenerate);
  CHECK(report.approximate);
}

TEST_CASE("dependence and rank properties") {
  using namespace testing;
  for (const auto& r :
       {suite_annihilator_bound(20, 61), suite_row_column_regular(100, 64),
        suite_oversized_sets(100, 65), suite_eigen_singular(100, 66),
        suite_oracle_sampled_3x3(200, 67), suite_gram_dependence(50, 68),
        suite_symmetric_forms(20, 69)}) {
    INFO(r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("exhaustive two by two oracle") {
  const auto r = testing::suite_oracle_exhaustive_2x2();
  INFO(r.summary());
  CHECK(r.ok());
}
