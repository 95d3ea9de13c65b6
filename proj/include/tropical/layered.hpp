#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tropical/sort_semiring.hpp"
#include "tropical/value.hpp"

namespace trop {

/// Element of the layered semiring over L and the max-plus value monoid:
/// either Zero or value^[layer]. Multiplication adds values and multiplies
/// layers; addition keeps the larger value and adds layers on a tie.
///
/// A descriptor-free unit 0^[1] also exists so generic code can write
/// Scalar(1). It adopts the descriptor of whatever it meets.
class LayeredScalar {
 public:
  LayeredScalar() = default;
  /// 0 gives Zero, 1 gives the unit; anything else throws.
  explicit LayeredScalar(int n);

  static LayeredScalar zero() { return {}; }
  static LayeredScalar unit() { return LayeredScalar(1); }
  static LayeredScalar make(const ValueRat& value, const SortLayer& layer, const SortSemiring& L);
  static LayeredScalar tangible(const ValueRat& value, const SortSemiring& L);
  /// Unit of L: 0^[one(L)].
  static LayeredScalar one(const SortSemiring& L) { return tangible(0, L); }

  bool is_zero() const noexcept { return state_ == State::Zero; }
  /// True for the descriptor-free unit.
  bool is_generic() const noexcept { return state_ == State::Generic; }
  /// Descriptor, absent for Zero and the generic unit.
  std::optional<SortSemiring> semiring() const;

  /// Value; meaningless for Zero, so check is_zero first.
  const ValueRat& value() const noexcept { return value_; }
  /// Layer; Fin(0) for Zero, Fin(1) for the generic unit.
  SortLayer layer() const noexcept;

  LayeredScalar& operator+=(const LayeredScalar& other);
  LayeredScalar& operator*=(const LayeredScalar& other);
  friend LayeredScalar operator+(LayeredScalar a, const LayeredScalar& b) { return a += b; }
  friend LayeredScalar operator*(LayeredScalar a, const LayeredScalar& b) { return a *= b; }

  /// Exact equality; the generic unit equals 0^[one] of any descriptor.
  friend bool operator==(const LayeredScalar& a, const LayeredScalar& b);

 private:
  enum class State : unsigned char { Zero, Generic, El };

  LayeredScalar(const ValueRat& value, const SortLayer& layer, const SortSemiring& L)
      : state_(State::El), value_(value), layer_(layer), L_(L) {}

  State state_ = State::Zero;
  ValueRat value_{0};
  SortLayer layer_{};
  SortSemiring L_{};
};

std::string to_string(const LayeredScalar& x);
std::ostream& operator<<(std::ostream& os, const LayeredScalar& x);

inline LayeredScalar lscalar_add(const LayeredScalar& x, const LayeredScalar& y) { return x + y; }
inline LayeredScalar lscalar_mul(const LayeredScalar& x, const LayeredScalar& y) { return x * y; }

/// Sort map; Zero has layer Fin(0).
SortLayer sort(const LayeredScalar& x);
std::optional<ValueRat> nu_value(const LayeredScalar& x);
bool nu_eq(const LayeredScalar& x, const LayeredScalar& y);

bool is_tangible(const LayeredScalar& x);
/// Nonzero and not tangible.
bool is_ghost(const LayeredScalar& x);
bool is_ghost_or_zero(const LayeredScalar& x);

/// Same value with a new layer; Zero stays Zero.
LayeredScalar retag(const LayeredScalar& x, const SortLayer& layer);
/// Same value at the unit layer of its descriptor.
LayeredScalar tangible_retag(const LayeredScalar& x);
/// Value shifted by delta; layer kept.
LayeredScalar shift_value(const LayeredScalar& x, const ValueRat& delta);
/// x^k by repeated multiplication; x^0 is the unit.
LayeredScalar power(const LayeredScalar& x, unsigned k);
/// n*x as an n-fold sum.
LayeredScalar nat_multiple(std::uint64_t n, const LayeredScalar& x);

/// Common descriptor of the arguments, if any carries one.
std::optional<SortSemiring> common_semiring(const LayeredScalar& a, const LayeredScalar& b);

/// a = b + c with c ghost or Zero.
bool ghost_surpass(const LayeredScalar& a, const LayeredScalar& b);
/// a = b, or a = b + c with s(c) >= s(b), or a ~nu b with s(a) >= s(b).
bool l_surpass(const LayeredScalar& a, const LayeredScalar& b);
/// l_surpass restricted to nu-equal pairs.
bool l_nu_surpass(const LayeredScalar& a, const LayeredScalar& b);
/// a = b, or a = b + c with s(c) >= ell + ell.
bool strong_l_surpass(const LayeredScalar& a, const LayeredScalar& b, const SortLayer& ell);

/// Zero, or (coefficient, value) with a rational field coefficient. A zero
/// coefficient marks the ghost part.
struct ExplodedScalar {
  bool zero = true;
  ValueRat coeff{0};
  ValueRat value{0};

  static ExplodedScalar make(const ValueRat& coeff, const ValueRat& value) {
    return {false, coeff, value};
  }
  bool is_ghost() const noexcept { return !zero && coeff == ValueRat(0); }
  friend bool operator==(const ExplodedScalar&, const ExplodedScalar&) = default;
};

ExplodedScalar exploded_add(const ExplodedScalar& x, const ExplodedScalar& y);
ExplodedScalar exploded_mul(const ExplodedScalar& x, const ExplodedScalar& y);
/// Into the two-layer semiring: nonzero coefficient gives a tangible, zero a ghost.
LayeredScalar exploded_projection(const ExplodedScalar& x);
std::string to_string(const ExplodedScalar& x);

}  // namespace trop
