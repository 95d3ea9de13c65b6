#include <doctest.h>

#include "support.hpp"
#include "tropical/json_io.hpp"

using namespace trop;
using namespace trop::json_io;
using testing::error_code;
using testing::ghost;
using testing::mat;
using testing::tg;

namespace {

const SortSemiring S = SortSemiring::two_layer();

std::string parse_error_message(const json& j, const SortSemiring& L) {
  try {
    decode_matrix(j, L);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("scalar encoding") {
  CHECK(encode_scalar(tg(2), S).dump() == R"({"v":"2"})");
  CHECK(encode_scalar(ghost(5), S).dump() == R"({"g":true,"v":"5"})");
  CHECK(encode_scalar(LayeredScalar::zero(), S).dump() == R"("zero")");
  const auto N = SortSemiring::naturals();
  const auto x = LayeredScalar::make(ValueRat(-3, 2), SortLayer::fin(4), N);
  CHECK(encode_scalar(x, N).dump() == R"({"l":4,"v":"-3/2"})");
  CHECK(decode_scalar(json::parse(R"({"v":"-3/2","l":4})"), N) == x);
  CHECK(decode_scalar(json::parse(R"({"v":7})"), S) == tg(7));
  CHECK(decode_scalar(json::parse(R"("-inf")"), S).is_zero());
  const auto D = SortSemiring::doubled(N);
  const auto p = LayeredScalar::make(ValueRat(1), SortLayer::pair(0, 1), D);
  CHECK(encode_scalar(p, D).dump() == R"({"l":[0,1],"v":"1"})");
  CHECK(decode_scalar(encode_scalar(p, D), D) == p);
}

TEST_CASE("malformed input names its location") {
  const json bad = json::parse(R"({"rows":1,"cols":2,"data":[[{"v":"1"},{"v":"x"}]]})");
  CHECK(parse_error_message(bad, S).find("$.data[0][1]") != std::string::npos);
  CHECK(error_code([] { decode_scalar(json::parse(R"({"v":"1","q":2})"), S); }) == Errc::ParseError);
  CHECK(error_code([] { decode_scalar(json::parse(R"({"v":"1","l":5})"), S); }) == Errc::ParseError);
  CHECK(error_code([] { decode_matrix(json::parse(R"({"rows":2,"cols":2,"data":[]})"), S); }) ==
        Errc::ParseError);
}

TEST_CASE("matrix round trip is exact and deterministic") {
  testing::Rng rng(81);
  for (const auto& L : testing::all_semirings()) {
    for (int trial = 0; trial < 50; ++trial) {
      TropMatrix A(3, 2);
      for (Eigen::Index i = 0; i < A.size(); ++i) A.data()[i] = testing::random_scalar(rng, L);
      A(0, 0) = shift_value(A(0, 0), ValueRat(1, 3));
      const std::string text = encode_matrix(A, L).dump();
      const TropMatrix back = decode_matrix(json::parse(text), L);
      CHECK(back == A);
      CHECK(encode_matrix(back, L).dump() == text);
    }
  }
}

TEST_CASE("vector sets and polynomials round trip") {
  const VectorSet V = VectorSet::rows_of(mat({{4, 4, 0}, {4, std::nullopt, 1}}));
  const VectorSet W = decode_vector_set(encode_vector_set(V, S), S);
  CHECK(W.dim == 3);
  CHECK(W.vectors == V.vectors);

  const TropPoly f = TropPoly::univariate({tg(2), ghost(2), tg(0)});
  CHECK(decode_poly(encode_poly(f, S), S) == f);

  PuiseuxPoly F;
  F.add_term({0}, parse_puiseux("-t^(1/2)"));
  F.add_term({1}, parse_puiseux("1"));
  const PuiseuxPoly G = decode_puiseux_poly(encode_puiseux_poly(F));
  CHECK(G.terms == F.terms);

  const BilinearForm B = decode_form(json{{"gram_generator", encode_matrix(identity(2, S), S)}}, S);
  CHECK(B.gram_generator == identity(2, S));
}
