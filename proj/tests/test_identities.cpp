#include <doctest.h>

#include "support.hpp"
#include "tropical/identities.hpp"

using namespace trop;
using testing::error_code;
using testing::mat;
using testing::nat;

namespace {

const SortSemiring S = SortSemiring::two_layer();
const SortSemiring T = SortSemiring::trivial();

// AB^2A AB AB^2A against AB^2A BA AB^2A.
const char* const kSemigroup =
    "x1 x2 x2 x1 x1 x2 x1 x2 x2 x1 == x1 x2 x2 x1 x2 x1 x1 x2 x2 x1";

}  // namespace

TEST_CASE("noncommutative evaluation") {
  const TropMatrix A = mat({{0, 0}, {1, 2}});
  const std::vector<TropMatrix> args{A, identity(2, S)};
  CHECK(nc_eval(parse_ncpoly("x1 x2"), args) == A);

  TropMatrix four(1, 1);
  four(0, 0) = nat(4, 1);
  const std::vector<TropMatrix> scalar{four};
  TropMatrix doubled(1, 1);
  doubled(0, 0) = nat(4, 2);
  CHECK(nc_eval(parse_ncpoly("x1 + x1"), scalar) == doubled);
  CHECK(nc_eval(parse_ncpoly("2*x1"), scalar) == doubled);

  CHECK(nc_eval(NCPoly{}, args) == zero_matrix(2, 2));
  CHECK(error_code([&] { nc_eval(parse_ncpoly("x3"), args); }) == Errc::ArityMismatch);
  const std::vector<TropMatrix> uneven{A, identity(3, S)};
  CHECK(error_code([&] { nc_eval(parse_ncpoly("x1 x2"), uneven); }) == Errc::ShapeMismatch);
}

TEST_CASE("polynomial text") {
  const NCPoly p = parse_ncpoly("2*x1 y1 x2 + x2 x1");
  CHECK(p.terms().size() == 2);
  CHECK(p.x_arity() == 2);
  CHECK(p.y_arity() == 1);
  CHECK(parse_ncpoly(to_string(p)) == p);
  CHECK(error_code([] { parse_ncpoly("x1 +"); }) == Errc::ParseError);
  CHECK(error_code([] { parse_pi_pair("x1 x2"); }) == Errc::ParseError);
}

TEST_CASE("standard and Capelli pairs") {
  const PIPair st2 = standard_pair(2);
  CHECK(st2.f == parse_ncpoly("x1 x2"));
  CHECK(st2.g == parse_ncpoly("x2 x1"));
  const PIPair c2 = capelli_pair(2);
  CHECK(c2.f == parse_ncpoly("x1 y1 x2 y2"));
  CHECK(c2.g == parse_ncpoly("x2 y1 x1 y2"));
  const PIPair st3 = standard_pair(3);
  CHECK(st3.f.terms().size() == 3);
  CHECK(st3.g.terms().size() == 3);
  CHECK(error_code([] { alternating_pair(parse_ncpoly("x1 x1"), 2); }) == Errc::NotMultilinear);
}

TEST_CASE("checking polynomial identities") {
  CHECK(check_pi(standard_pair(2), 1, 200, 1).holds);
  const Verdict fails = check_pi(standard_pair(2), 2, 200, 1);
  CHECK_FALSE(fails.holds);
  CHECK(fails.counterexample.size() == 2);
  CHECK(check_pi(standard_pair(4), 2, 300, 2, T).holds);
}

TEST_CASE("alternating pairs on few generators") {
  const std::vector<TropMatrix> one{mat({{0, 3}, {1, 2}})};
  CHECK(spanned_alternating_check(standard_pair(2), one, 200, 3).holds);
  const std::vector<TropMatrix> two{mat({{0, 3}, {1, 2}}), mat({{1, -2}, {4, 0}})};
  CHECK(spanned_alternating_check(standard_pair(3), two, 200, 4).holds);
  CHECK_FALSE(spanned_alternating_check(standard_pair(2), two, 200, 5).holds);
}

TEST_CASE("Capelli witnesses") {
  for (int n = 1; n <= 3; ++n) {
    const CapelliWitness w = capelli_witness(n);
    CHECK(w.xs.size() == static_cast<std::size_t>(n * n));
    CHECK(w.ys.size() == static_cast<std::size_t>(n * n));
    CHECK(w.value_f == matrix_unit(n, 0, 0, S));
    CHECK(w.value_g == zero_matrix(n, n));
    if (n == 1) continue;
    const PIPair c = capelli_pair(static_cast<std::uint32_t>(n * n));
    CHECK(nc_eval(c.f, w.xs, w.ys) == w.value_f);
    CHECK(nc_eval(c.g, w.xs, w.ys) == w.value_g);
  }
  CHECK(error_code([] { capelli_witness(4); }) == Errc::TooLarge);
}

TEST_CASE("minimal degree witnesses") {
  const auto args = min_degree_witness(parse_ncpoly("x1 x2"), parse_ncpoly("x2 x1"), 2);
  REQUIRE(args.size() == 2);
  CHECK(args[0] == matrix_unit(2, 0, 0, S));
  CHECK(args[1] == matrix_unit(2, 0, 1, S));
  CHECK(nc_eval(parse_ncpoly("x1 x2"), args) == matrix_unit(2, 0, 1, S));
  CHECK(nc_eval(parse_ncpoly("x2 x1"), args) == zero_matrix(2, 2));

  const PIPair st3 = standard_pair(3);
  const auto w3 = min_degree_witness(st3.f, st3.g, 2);
  CHECK_FALSE(all_ghost_or_zero(nc_eval(st3.f, w3)));
  CHECK(nc_eval(st3.g, w3) == zero_matrix(2, 2));

  const PIPair st4 = standard_pair(4);
  CHECK(error_code([&] { min_degree_witness(st4.f, st4.g, 2); }) == Errc::HypothesisViolated);
}

TEST_CASE("splitting integer polynomials") {
  const SignedNCPoly c = split_integer_poly({{parse_word("x1 x2"), 1}, {parse_word("x2 x1"), -1}});
  CHECK(c.plus == parse_ncpoly("x1 x2"));
  CHECK(c.minus == parse_ncpoly("x2 x1"));
  const SignedNCPoly d = split_integer_poly(
      {{parse_word("x1 x4"), 1}, {parse_word("x2 x3"), -1}});
  CHECK(d.plus == parse_ncpoly("x1 x4"));
  CHECK(d.minus == parse_ncpoly("x2 x3"));
  const SignedNCPoly two = split_integer_poly({{parse_word("x1"), 2}});
  CHECK(two.plus == parse_ncpoly("2*x1"));
  CHECK(two.minus.empty());
}

TEST_CASE("transfer to layered matrices") {
  const auto ell = SortLayer::fin(2);
  CHECK(transfer_check(det_multiplicativity_identity(2), 2, ell, 100, 7).holds);
  CHECK(transfer_check(adjugate_identity(3), 3, ell, 50, 8).holds);
  CHECK(transfer_check(double_adjoint_identity(3), 3, ell, 50, 9).holds);
  CHECK(layer_power(SortSemiring::naturals(), ell, 3) == SortLayer::fin(8));

  // Commutativity of 1x1 matrices, written as x1 x2 - x2 x1 = 0.
  const SignedNCPoly P{parse_ncpoly("x1 x2"), NCPoly{}};
  const SignedNCPoly Q{parse_ncpoly("x2 x1"), NCPoly{}};
  CHECK(transfer_check(P, Q, 1, 2, ell, 100, 10).holds);
}

TEST_CASE("semigroup identity on 2x2 matrices") {
  const PIPair pair = parse_pi_pair(kSemigroup);
  const auto same = [&](const TropMatrix& A, const TropMatrix& B) {
    const std::vector<TropMatrix> args{A, B};
    return nc_eval(pair.f, args) == nc_eval(pair.g, args);
  };
  CHECK(same(identity(2, T), identity(2, T)));
  CHECK(same(mat({{0, 0}, {1, 2}}, T), mat({{1, 0}, {0, 0}}, T)));
  // A full pair on which the two sides differ.
  CHECK_FALSE(same(mat({{6, -4}, {10, 8}}, T), mat({{-8, -1}, {9, -8}}, T)));

  CHECK(semigroup_identity_2x2(500, 11, SemigroupSample::UpperTriangular).holds);
  CHECK(semigroup_identity_2x2(500, 12, SemigroupSample::Squared).holds);
  const Verdict full = semigroup_identity_2x2(2000, 13, SemigroupSample::Full);
  CHECK_FALSE(full.holds);
  REQUIRE(full.counterexample.size() == 2);
  CHECK_FALSE(same(full.counterexample[0], full.counterexample[1]));
}
