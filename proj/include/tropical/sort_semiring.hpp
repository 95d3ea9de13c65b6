#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropical/value.hpp"

namespace trop {

/// Component encoding of the infinite layer.
inline constexpr std::uint64_t kInfLayer = std::numeric_limits<std::uint64_t>::max();

/// An element of a sorting semiring L: Fin(n), Inf, or a pair (k, l) of
/// such components when L is a doubled semiring.
struct SortLayer {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  bool paired = false;

  static constexpr SortLayer fin(std::uint64_t n) { return {n, 0, false}; }
  static constexpr SortLayer inf() { return {kInfLayer, 0, false}; }
  static constexpr SortLayer pair(std::uint64_t k, std::uint64_t l) { return {k, l, true}; }

  friend bool operator==(const SortLayer&, const SortLayer&) = default;
};

std::string to_string(const SortLayer& layer);

enum class SortKind : std::uint8_t { Trivial, TwoLayer, Naturals, Truncated };

/// Descriptor of the sorting semiring L. One of trivial {1}, the
/// supertropical {1, inf}, the naturals, the q-truncated [1, q], or the
/// doubled semiring D(L) over one of those four.
class SortSemiring {
 public:
  constexpr SortSemiring() = default;

  static constexpr SortSemiring trivial() { return {SortKind::Trivial, 0, false}; }
  static constexpr SortSemiring two_layer() { return {SortKind::TwoLayer, 0, false}; }
  static constexpr SortSemiring naturals() { return {SortKind::Naturals, 0, false}; }
  static SortSemiring truncated(std::uint64_t q);
  static SortSemiring doubled(const SortSemiring& inner);

  /// Parses "trivial" | "super" | "nat" | "trunc:<q>" | "doubled:<inner>".
  static SortSemiring parse(std::string_view text);
  std::string descriptor() const;

  SortKind kind() const noexcept { return kind_; }
  std::uint64_t q() const noexcept { return q_; }
  bool is_doubled() const noexcept { return doubled_; }
  /// The base semiring; for a doubled descriptor this is the inner one.
  SortSemiring base() const noexcept { return {kind_, q_, false}; }

  /// Element of L, including its zero.
  bool contains(const SortLayer& layer) const noexcept;
  /// Element of L usable as the layer of a nonzero scalar.
  bool valid_nonzero(const SortLayer& layer) const noexcept;

  SortLayer zero() const noexcept;
  SortLayer one() const noexcept;
  /// Tangible layers: Fin(1); under a doubled descriptor the signed units (1,0), (0,1).
  bool is_tangible_layer(const SortLayer& layer) const noexcept;
  /// Whether a sum of two nonzero layers can never be tangible.
  bool ties_are_ghost() const noexcept;

  friend bool operator==(const SortSemiring&, const SortSemiring&) = default;

 private:
  constexpr SortSemiring(SortKind kind, std::uint64_t q, bool doubled)
      : kind_(kind), q_(q), doubled_(doubled) {}

  SortKind kind_ = SortKind::TwoLayer;
  std::uint64_t q_ = 0;
  bool doubled_ = false;
};

SortLayer layer_add(const SortSemiring& L, const SortLayer& k, const SortLayer& l);
SortLayer layer_mul(const SortSemiring& L, const SortLayer& k, const SortLayer& l);
bool layer_leq(const SortSemiring& L, const SortLayer& k, const SortLayer& l);
/// The swap (k, l) -> (l, k) on D(L).
SortLayer negation_tau(const SortSemiring& L, const SortLayer& k);
/// n * k computed as an n-fold sum in L (n = 0 gives the zero of L).
SortLayer layer_scale(const SortSemiring& L, std::uint64_t n, const SortLayer& k);

/// All nonzero layers g with base + g == target, restricted to a finite
/// candidate list that is complete for upward-closed predicates and for
/// "not tangible".
std::vector<SortLayer> summand_candidates(const SortSemiring& L, const SortLayer& base,
                                          const SortLayer& target);

/// Bipotent sum of the series sum_k a^k / k! read in (R+, *): returns the
/// maximal term and the number of k attaining it. Requires a > 0.
std::pair<ValueRat, std::uint64_t> exp_maxtimes(const ValueRat& a);

}  // namespace trop
