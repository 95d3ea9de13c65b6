#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tropical/layered.hpp"
#include "tropical/poly.hpp"

namespace trop {

/// Finite Puiseux series sum c_tau t^tau with rational exponents and
/// nonzero rational coefficients.
class PuiseuxElem {
 public:
  PuiseuxElem() = default;
  static PuiseuxElem constant(const ValueRat& c) { return term(c, 0); }
  static PuiseuxElem term(const ValueRat& coeff, const ValueRat& exponent);

  const std::map<ValueRat, ValueRat>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const ValueRat& exponent, const ValueRat& coeff);

  friend bool operator==(const PuiseuxElem&, const PuiseuxElem&) = default;

 private:
  std::map<ValueRat, ValueRat> terms_;
};

PuiseuxElem puiseux_add(const PuiseuxElem& p, const PuiseuxElem& q);
PuiseuxElem puiseux_mul(const PuiseuxElem& p, const PuiseuxElem& q);
PuiseuxElem puiseux_neg(const PuiseuxElem& p);
inline PuiseuxElem operator+(const PuiseuxElem& p, const PuiseuxElem& q) { return puiseux_add(p, q); }
inline PuiseuxElem operator*(const PuiseuxElem& p, const PuiseuxElem& q) { return puiseux_mul(p, q); }
inline PuiseuxElem operator-(const PuiseuxElem& p, const PuiseuxElem& q) { return p + puiseux_neg(q); }

/// Smallest exponent with a nonzero coefficient; nullopt stands for +infinity.
std::optional<ValueRat> order_val(const PuiseuxElem& p);

/// (leading coefficient, -v(p)); Zero for the zero series.
ExplodedScalar explode(const PuiseuxElem& p);

/// "3*t^(1/2) + 5*t^2 - 1".
PuiseuxElem parse_puiseux(std::string_view text);
std::string to_string(const PuiseuxElem& p);

/// Polynomial in nvars variables with Puiseux coefficients.
struct PuiseuxPoly {
  std::size_t nvars = 1;
  std::map<Exponent, PuiseuxElem> terms;

  void add_term(const Exponent& exp, const PuiseuxElem& c);
};

PuiseuxPoly puiseux_poly_mul(const PuiseuxPoly& F, const PuiseuxPoly& G);
/// F(a) for univariate F.
PuiseuxElem puiseux_poly_eval(const PuiseuxPoly& F, const PuiseuxElem& a);

/// Coefficient p replaced by the tangible scalar of value -v(p) over L.
TropPoly tropicalize(const PuiseuxPoly& F, const SortSemiring& L = SortSemiring::two_layer());

/// For a classical root a of univariate F, whether -v(a) is a root of the
/// tropicalization. Throws NotARoot when F(a) != 0.
bool kapranov_forward_check(const PuiseuxPoly& F, const PuiseuxElem& a);

}  // namespace trop
