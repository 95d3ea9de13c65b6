#include <doctest.h>

#include "suites.hpp"
#include "support.hpp"
#include "tropical/puiseux.hpp"

using namespace trop;
using testing::error_code;
using testing::rat;
using testing::tg;

namespace {

PuiseuxElem P(std::string_view text) { return parse_puiseux(text); }

// Univariate polynomial from Puiseux coefficients indexed by degree.
PuiseuxPoly upoly(const std::vector<std::string_view>& coeffs) {
  PuiseuxPoly F;
  for (std::uint32_t k = 0; k < coeffs.size(); ++k) F.add_term({k}, P(coeffs[k]));
  return F;
}

}  // namespace

TEST_CASE("series arithmetic") {
  CHECK((P("t^(1/2)") + P("-t^(1/2)")).is_zero());
  CHECK((P("1 + t") * P("1 - t")) == P("1 - t^2"));
  CHECK((P("3*t^(1/2)") * P("2*t^(1/3)")) == PuiseuxElem::term(rat(6), rat(5, 6)));
  CHECK((P("t") - P("t")).is_zero());
  CHECK(P(to_string(P("3*t^(1/2) + 5*t^2 - 1"))) == P("3*t^(1/2) + 5*t^2 - 1"));
  CHECK(P("t^(-1)") == PuiseuxElem::term(rat(1), rat(-1)));
  CHECK(error_code([] { P("3*t^"); }) == Errc::ParseError);
}

TEST_CASE("order valuation") {
  CHECK(order_val(P("3*t^(1/2) + 5*t^2")) == rat(1, 2));
  CHECK_FALSE(order_val(PuiseuxElem{}));
  CHECK(order_val(P("7")) == rat(0));
}

TEST_CASE("explosion") {
  const ExplodedScalar e = explode(P("3*t^(1/2) + 5*t^2"));
  CHECK(e.coeff == rat(3));
  CHECK(e.value == rat(-1, 2));
  CHECK(explode(PuiseuxElem{}).zero);
  const ExplodedScalar c = explode(P("-2 + t"));
  CHECK(c.coeff == rat(-2));
  CHECK(c.value == rat(0));
}

TEST_CASE("tropicalization") {
  CHECK(tropicalize(upoly({"t^2", "t"})) == TropPoly::univariate({tg(-2), tg(-1)}));
  CHECK(tropicalize(upoly({"-1", "0", "1"})) == TropPoly::univariate({tg(0), LayeredScalar::zero(), tg(0)}));
  CHECK(tropicalize(PuiseuxPoly{}).is_zero());
}

TEST_CASE("classical roots give tropical roots") {
  CHECK(kapranov_forward_check(upoly({"-t", "1"}), P("t")));
  CHECK(kapranov_forward_check(upoly({"-t^2", "0", "1"}), P("t")));
  CHECK(error_code([] { kapranov_forward_check(upoly({"-1", "1"}), P("2")); }) == Errc::NotARoot);
}

TEST_CASE("valuation properties") {
  using namespace testing;
  for (const auto& r : {suite_valuation_laws(300, 71), suite_exact_min(300, 72),
                        suite_cancellation_ties(300, 73), suite_explode(300, 74),
                        suite_kapranov(50, 75)}) {
    INFO(r.summary());
    CHECK(r.ok());
  }
}
