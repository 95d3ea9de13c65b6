#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropical/layered.hpp"

namespace trop {

using Exponent = std::vector<std::uint32_t>;

/// Polynomial over the layered semiring in nvars commuting variables. Zero
/// coefficients are never stored; the empty map is the zero polynomial.
class TropPoly {
 public:
  explicit TropPoly(std::size_t nvars = 1) : nvars_(nvars) {}

  /// Univariate from coefficients indexed by degree.
  static TropPoly univariate(const std::vector<LayeredScalar>& coeffs);
  static TropPoly monomial(const LayeredScalar& coef, Exponent exp);
  static TropPoly constant(const LayeredScalar& c, std::size_t nvars = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponent, LayeredScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c * x^exp, merging with an existing coefficient.
  void add_term(const Exponent& exp, const LayeredScalar& c);
  LayeredScalar coeff(const Exponent& exp) const;
  /// Univariate coefficient of lambda^degree.
  LayeredScalar coeff(std::uint32_t degree) const;
  /// Highest univariate degree; 0 for the zero polynomial.
  std::uint32_t degree() const;

  /// Every stored coefficient tangible.
  bool is_tangible() const;
  std::optional<SortSemiring> semiring() const;

  friend bool operator==(const TropPoly&, const TropPoly&) = default;

 private:
  std::size_t nvars_;
  std::map<Exponent, LayeredScalar> terms_;
};

TropPoly poly_add(const TropPoly& f, const TropPoly& g);
TropPoly poly_mul(const TropPoly& f, const TropPoly& g);
inline TropPoly operator+(const TropPoly& f, const TropPoly& g) { return poly_add(f, g); }
inline TropPoly operator*(const TropPoly& f, const TropPoly& g) { return poly_mul(f, g); }
TropPoly poly_pow(const TropPoly& f, unsigned k);

LayeredScalar poly_eval(const TropPoly& f, std::span<const LayeredScalar> point);
LayeredScalar poly_eval(const TropPoly& f, const LayeredScalar& x);
/// f(point) is ghost or Zero.
bool is_root(const TropPoly& f, std::span<const LayeredScalar> point);
bool is_root(const TropPoly& f, const LayeredScalar& x);

struct CornerRoot {
  ValueRat root;
  SortLayer layer;  // sort(f(root^[1]))
  friend bool operator==(const CornerRoot&, const CornerRoot&) = default;
};

/// Values where two or more monomials of a univariate polynomial attain the
/// maximum, ascending. Coefficients must be tangible unless allow_layered.
std::vector<CornerRoot> corner_roots_univariate(const TropPoly& f, bool allow_layered = false);

/// alpha^[l] lambda^j -> alpha^[j*l] lambda^(j-1); constants vanish.
TropPoly layered_derivative(const TropPoly& f);

struct EquivResult {
  bool equal = true;
  /// True when the verdict is a proof rather than a sampling outcome.
  bool exact = false;
  /// A point where f and g differ, when !equal.
  std::vector<LayeredScalar> counterexample;
};

/// Equality of f and g as functions. Exact for univariate tangible inputs
/// (compared at every corner, between corners, past both ends and at Zero);
/// otherwise compared on domain_samples seeded random points.
EquivResult func_equiv(const TropPoly& f, const TropPoly& g, std::size_t domain_samples = 200,
                       std::uint64_t seed = 1);

using LaplaceSeq = std::vector<LayeredScalar>;

/// Entry k is a_k with its layer multiplied by k!. Naturals only.
LaplaceSeq laplace(const TropPoly& f, std::uint32_t upto);
/// Entry k becomes entry k+1 with its layer lowered by one; lowering layer 1 gives Zero.
LaplaceSeq laplace_derivative(const LaplaceSeq& s);

std::string to_string(const TropPoly& f);

}  // namespace trop
