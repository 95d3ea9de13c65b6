#include "tropical/layered.hpp"

#include <ostream>

#include "tropical/error.hpp"

namespace trop {

namespace {

[[noreturn]] void mismatch(const SortSemiring& a, const SortSemiring& b) {
  throw Error(Errc::MismatchedDescriptor,
              "scalars over " + a.descriptor() + " and " + b.descriptor() + " do not combine");
}

// Shared descriptor, or the first argument's when only one has one.
SortSemiring require_semiring(const LayeredScalar& a, const LayeredScalar& b) {
  auto L = common_semiring(a, b);
  return L ? *L : SortSemiring::two_layer();
}

// Exists c with a = b + c and keep(s(c)); Zero c corresponds to a == b.
template <class Keep>
bool exists_summand(const LayeredScalar& a, const LayeredScalar& b, Keep keep) {
  if (a == b) return true;
  if (a.is_zero()) return false;
  const SortSemiring L = require_semiring(a, b);
  const SortLayer sa = a.is_generic() ? L.one() : a.layer();
  if (b.is_zero() || a.value() > b.value()) return keep(L, sa);
  if (a.value() < b.value()) return false;
  const SortLayer sb = b.is_generic() ? L.one() : b.layer();
  for (const auto& g : summand_candidates(L, sb, sa)) {
    if (keep(L, g)) return true;
  }
  return false;
}

}  // namespace

LayeredScalar::LayeredScalar(int n) {
  if (n == 0) return;
  if (n == 1) {
    state_ = State::Generic;
    layer_ = SortLayer::fin(1);
    return;
  }
  throw Error(Errc::UnsupportedDescriptor,
              "only 0 and 1 convert to a layered scalar, got " + std::to_string(n));
}

LayeredScalar LayeredScalar::make(const ValueRat& value, const SortLayer& layer,
                                  const SortSemiring& L) {
  if (!L.valid_nonzero(layer)) {
    throw Error(Errc::MismatchedDescriptor,
                "layer " + to_string(layer) + " is not a nonzero layer of " + L.descriptor());
  }
  return {value, layer, L};
}

LayeredScalar LayeredScalar::tangible(const ValueRat& value, const SortSemiring& L) {
  return {value, L.one(), L};
}

std::optional<SortSemiring> LayeredScalar::semiring() const {
  if (state_ == State::El) return L_;
  return std::nullopt;
}

SortLayer LayeredScalar::layer() const noexcept {
  switch (state_) {
    case State::Zero: return SortLayer::fin(0);
    case State::Generic: return SortLayer::fin(1);
    case State::El: return layer_;
  }
  return {};
}

LayeredScalar& LayeredScalar::operator+=(const LayeredScalar& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (is_generic() && other.is_generic()) {
    throw Error(Errc::MismatchedDescriptor, "sum of two descriptor-free units is undefined");
  }
  const SortSemiring L = is_generic() ? other.L_ : L_;
  if (!other.is_generic() && !is_generic() && !(L_ == other.L_)) mismatch(L_, other.L_);
  const SortLayer mine = is_generic() ? L.one() : layer_;
  const SortLayer theirs = other.is_generic() ? L.one() : other.layer_;
  if (other.value_ > value_) {
    *this = LayeredScalar(other.value_, theirs, L);
  } else if (other.value_ < value_) {
    *this = LayeredScalar(value_, mine, L);
  } else {
    *this = LayeredScalar(value_, layer_add(L, mine, theirs), L);
  }
  return *this;
}

LayeredScalar& LayeredScalar::operator*=(const LayeredScalar& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = LayeredScalar();
  if (other.is_generic()) return *this;
  if (is_generic()) return *this = other;
  if (!(L_ == other.L_)) mismatch(L_, other.L_);
  value_ += other.value_;
  layer_ = layer_mul(L_, layer_, other.layer_);
  return *this;
}

bool operator==(const LayeredScalar& a, const LayeredScalar& b) {
  using State = LayeredScalar::State;
  if (a.state_ == State::Zero || b.state_ == State::Zero) return a.state_ == b.state_;
  if (a.state_ == State::Generic && b.state_ == State::Generic) return true;
  if (a.state_ == State::Generic) return b.value_ == ValueRat(0) && b.layer_ == b.L_.one();
  if (b.state_ == State::Generic) return a.value_ == ValueRat(0) && a.layer_ == a.L_.one();
  return a.value_ == b.value_ && a.layer_ == b.layer_ && a.L_ == b.L_;
}

std::string to_string(const LayeredScalar& x) {
  if (x.is_zero()) return "Zero";
  const std::string v = format_value(x.value());
  const std::string shown = x.value().denominator() != 1 || x.value() < 0 ? "(" + v + ")" : v;
  return shown + "^[" + to_string(x.layer()) + "]";
}

std::ostream& operator<<(std::ostream& os, const LayeredScalar& x) { return os << to_string(x); }

SortLayer sort(const LayeredScalar& x) { return x.layer(); }

std::optional<ValueRat> nu_value(const LayeredScalar& x) {
  if (x.is_zero()) return std::nullopt;
  return x.value();
}

bool nu_eq(const LayeredScalar& x, const LayeredScalar& y) { return nu_value(x) == nu_value(y); }

bool is_tangible(const LayeredScalar& x) {
  if (x.is_zero()) return false;
  if (x.is_generic()) return true;
  return x.semiring()->is_tangible_layer(x.layer());
}

bool is_ghost(const LayeredScalar& x) { return !x.is_zero() && !is_tangible(x); }

bool is_ghost_or_zero(const LayeredScalar& x) { return !is_tangible(x); }

LayeredScalar retag(const LayeredScalar& x, const SortLayer& layer) {
  if (x.is_zero()) return x;
  const SortSemiring L = x.semiring().value_or(SortSemiring::two_layer());
  return LayeredScalar::make(x.value(), layer, L);
}

LayeredScalar tangible_retag(const LayeredScalar& x) {
  if (x.is_zero() || x.is_generic()) return x;
  return LayeredScalar::tangible(x.value(), *x.semiring());
}

LayeredScalar shift_value(const LayeredScalar& x, const ValueRat& delta) {
  if (x.is_zero()) return x;
  const SortSemiring L = x.semiring().value_or(SortSemiring::two_layer());
  return LayeredScalar::make(x.value() + delta, x.is_generic() ? L.one() : x.layer(), L);
}

LayeredScalar power(const LayeredScalar& x, unsigned k) {
  LayeredScalar out = LayeredScalar::unit();
  for (unsigned i = 0; i < k; ++i) out *= x;
  if (out.is_generic() && x.semiring()) return LayeredScalar::one(*x.semiring());
  return out;
}

LayeredScalar nat_multiple(std::uint64_t n, const LayeredScalar& x) {
  if (n == 0 || x.is_zero()) return LayeredScalar::zero();
  const SortSemiring L = x.semiring().value_or(SortSemiring::two_layer());
  const SortLayer base = x.is_generic() ? L.one() : x.layer();
  return LayeredScalar::make(x.value(), layer_scale(L, n, base), L);
}

std::optional<SortSemiring> common_semiring(const LayeredScalar& a, const LayeredScalar& b) {
  auto La = a.semiring();
  auto Lb = b.semiring();
  if (La && Lb && !(*La == *Lb)) mismatch(*La, *Lb);
  return La ? La : Lb;
}

bool ghost_surpass(const LayeredScalar& a, const LayeredScalar& b) {
  return exists_summand(a, b, [](const SortSemiring& L, const SortLayer& g) {
    return !L.is_tangible_layer(g);
  });
}

bool l_surpass(const LayeredScalar& a, const LayeredScalar& b) {
  const SortLayer sb = sort(b);
  const bool summand = exists_summand(a, b, [&](const SortSemiring& L, const SortLayer& g) {
    return layer_leq(L, b.is_zero() ? L.zero() : (b.is_generic() ? L.one() : sb), g);
  });
  if (summand) return true;
  if (a.is_zero() || b.is_zero() || !nu_eq(a, b)) return false;
  const SortSemiring L = require_semiring(a, b);
  const SortLayer sa = a.is_generic() ? L.one() : a.layer();
  return layer_leq(L, b.is_generic() ? L.one() : sb, sa);
}

bool l_nu_surpass(const LayeredScalar& a, const LayeredScalar& b) {
  return nu_eq(a, b) && l_surpass(a, b);
}

bool strong_l_surpass(const LayeredScalar& a, const LayeredScalar& b, const SortLayer& ell) {
  return exists_summand(a, b, [&](const SortSemiring& L, const SortLayer& g) {
    return layer_leq(L, layer_add(L, ell, ell), g);
  });
}

ExplodedScalar exploded_add(const ExplodedScalar& x, const ExplodedScalar& y) {
  if (x.zero) return y;
  if (y.zero) return x;
  if (x.value > y.value) return x;
  if (y.value > x.value) return y;
  return ExplodedScalar::make(x.coeff + y.coeff, x.value);
}

ExplodedScalar exploded_mul(const ExplodedScalar& x, const ExplodedScalar& y) {
  if (x.zero || y.zero) return {};
  return ExplodedScalar::make(x.coeff * y.coeff, x.value + y.value);
}

LayeredScalar exploded_projection(const ExplodedScalar& x) {
  if (x.zero) return LayeredScalar::zero();
  const auto L = SortSemiring::two_layer();
  return LayeredScalar::make(x.value, x.coeff == ValueRat(0) ? SortLayer::inf() : L.one(), L);
}

std::string to_string(const ExplodedScalar& x) {
  if (x.zero) return "Zero";
  return "(" + format_value(x.coeff) + ", " + format_value(x.value) + ")";
}

}  // namespace trop
