#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tropical/error.hpp"
#include "tropical/layered.hpp"
#include "tropical/matrix.hpp"
#include "tropical/poly.hpp"
#include "tropical/puiseux.hpp"

namespace trop::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Descriptors exercised by the law suites.
inline std::vector<SortSemiring> all_semirings() {
  return {SortSemiring::trivial(),
          SortSemiring::two_layer(),
          SortSemiring::naturals(),
          SortSemiring::truncated(3),
          SortSemiring::doubled(SortSemiring::naturals()),
          SortSemiring::doubled(SortSemiring::truncated(3))};
}

/// Any element of L (including its zero when allowed), components drawn from {0..4, inf}.
inline SortLayer random_layer(Rng& rng, const SortSemiring& L, bool allow_zero = false) {
  static const std::uint64_t pool[] = {0, 1, 1, 2, 3, 4, kInfLayer};
  for (;;) {
    const auto a = pool[uniform(rng, 0, 6)];
    const auto b = pool[uniform(rng, 0, 6)];
    const SortLayer k = L.is_doubled() ? SortLayer::pair(a, b) : SortLayer::fin(a);
    if (!L.contains(k)) continue;
    if (!allow_zero && k == L.zero()) continue;
    return k;
  }
}

/// Zero with probability zero_p, else value in [lo, hi] on a random nonzero layer.
inline LayeredScalar random_scalar(Rng& rng, const SortSemiring& L, std::int64_t lo = -3,
                                   std::int64_t hi = 3, double zero_p = 0.1) {
  if (coin(rng, zero_p)) return LayeredScalar::zero();
  return LayeredScalar::make(ValueRat(uniform(rng, lo, hi)), random_layer(rng, L), L);
}

inline LayeredScalar random_tangible(Rng& rng, const SortSemiring& L, std::int64_t lo = -10,
                                     std::int64_t hi = 10) {
  return LayeredScalar::tangible(ValueRat(uniform(rng, lo, hi)), L);
}

inline TropMatrix random_tangible_matrix(Rng& rng, int rows, int cols, const SortSemiring& L,
                                         std::int64_t lo = -10, std::int64_t hi = 10,
                                         double zero_p = 0.0) {
  TropMatrix A(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      A(i, j) = coin(rng, zero_p) ? LayeredScalar::zero() : random_tangible(rng, L, lo, hi);
    }
  }
  return A;
}

/// Tangible entries mixed with ghosts and Zero under the supertropical semiring.
inline TropMatrix random_mixed_matrix(Rng& rng, int n, std::int64_t lo = -10, std::int64_t hi = 10) {
  const auto L = SortSemiring::two_layer();
  TropMatrix A(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto r = uniform(rng, 0, 9);
      const ValueRat v(uniform(rng, lo, hi));
      if (r == 0) {
        A(i, j) = LayeredScalar::zero();
      } else if (r <= 2) {
        A(i, j) = LayeredScalar::make(v, SortLayer::inf(), L);
      } else {
        A(i, j) = LayeredScalar::tangible(v, L);
      }
    }
  }
  return A;
}

/// Alternates tangible and mixed samples, the convention of the matrix suites.
inline TropMatrix random_suite_matrix(Rng& rng, int n, std::size_t trial) {
  const auto L = SortSemiring::two_layer();
  return trial % 2 == 0 ? random_tangible_matrix(rng, n, n, L) : random_mixed_matrix(rng, n);
}

/// Square matrix from integer rows over L; std::nullopt marks Zero.
inline TropMatrix mat(const std::vector<std::vector<std::optional<std::int64_t>>>& rows,
                      const SortSemiring& L = SortSemiring::two_layer()) {
  std::vector<std::vector<std::optional<ValueRat>>> out;
  for (const auto& r : rows) {
    std::vector<std::optional<ValueRat>> row;
    for (const auto& x : r) row.push_back(x ? std::optional<ValueRat>(ValueRat(*x)) : std::nullopt);
    out.push_back(std::move(row));
  }
  return tangible_matrix(out, L);
}

inline TropVector vec(const std::vector<std::optional<std::int64_t>>& values,
                      const SortSemiring& L = SortSemiring::two_layer()) {
  std::vector<std::optional<ValueRat>> out;
  for (const auto& x : values) out.push_back(x ? std::optional<ValueRat>(ValueRat(*x)) : std::nullopt);
  return tangible_vector(out, L);
}

inline LayeredScalar tg(std::int64_t v, const SortSemiring& L = SortSemiring::two_layer()) {
  return LayeredScalar::tangible(ValueRat(v), L);
}

inline LayeredScalar ghost(std::int64_t v) {
  return LayeredScalar::make(ValueRat(v), SortLayer::inf(), SortSemiring::two_layer());
}

inline LayeredScalar nat(std::int64_t v, std::uint64_t layer) {
  return LayeredScalar::make(ValueRat(v), SortLayer::fin(layer), SortSemiring::naturals());
}

inline ValueRat rat(std::int64_t p, std::int64_t q = 1) { return {p, q}; }

/// Code of the trop::Error thrown by f, or nullopt when f returns normally.
template <class F>
std::optional<Errc> error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Random finite Puiseux series: up to `terms` terms, exponents k/den for k in
/// [-4, 8], den in {1,2,3}, nonzero integer coefficients in [-5, 5]; never zero.
inline PuiseuxElem random_series(Rng& rng, int terms = 3) {
  PuiseuxElem p;
  while (p.is_zero()) {
    const int count = static_cast<int>(uniform(rng, 1, terms));
    for (int t = 0; t < count; ++t) {
      std::int64_t c = 0;
      while (c == 0) c = uniform(rng, -5, 5);
      p.add_term(ValueRat(uniform(rng, -4, 8), uniform(rng, 1, 3)), ValueRat(c));
    }
  }
  return p;
}

}  // namespace trop::testing
