#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropical/matrix.hpp"

namespace trop {

/// A variable x_i or y_i, 1-based.
struct Letter {
  bool is_y = false;
  std::uint32_t index = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Noncommutative polynomial with positive natural coefficients.
class NCPoly {
 public:
  void add(const Word& w, std::uint64_t coeff = 1);
  const std::map<Word, std::uint64_t>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  /// Largest x index used (0 when none).
  std::uint32_t x_arity() const;
  std::uint32_t y_arity() const;
  /// Every monomial uses each of x_1..x_t exactly once.
  bool is_multilinear_in(std::uint32_t t) const;

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  std::map<Word, std::uint64_t> terms_;
};

struct PIPair {
  NCPoly f;
  NCPoly g;
  std::uint32_t arity = 0;
};

/// P = plus - minus.
struct SignedNCPoly {
  NCPoly plus;
  NCPoly minus;
};

using IntNCPoly = std::map<Word, std::int64_t>;

Word parse_word(std::string_view text);
/// "2*x1 y1 x2 + x2 x1"; coefficients default to 1.
NCPoly parse_ncpoly(std::string_view text);
/// "lhs == rhs".
PIPair parse_pi_pair(std::string_view text);
std::string to_string(const Word& w);
std::string to_string(const NCPoly& p);

/// Evaluates p with x_i -> xs[i-1], y_i -> ys[i-1]; the empty word is the identity.
TropMatrix nc_eval(const NCPoly& p, std::span<const TropMatrix> xs,
                   std::span<const TropMatrix> ys = {});

struct Verdict {
  bool holds = true;
  std::size_t trials = 0;
  /// Arguments of the first failure: x arguments then y arguments.
  std::vector<TropMatrix> counterexample;
};

/// Samples n x n arguments (tangible, then mixed with ghosts and Zero on
/// alternate trials) and requires f = g exactly.
Verdict check_pi(const PIPair& pair, int n, std::size_t trials, std::uint64_t seed,
                 const SortSemiring& L = SortSemiring::two_layer());

PIPair standard_pair(std::uint32_t t);
PIPair capelli_pair(std::uint32_t t);
/// Even and odd permutation sums of h(x_sigma(1), ..., x_sigma(t)).
PIPair alternating_pair(const NCPoly& h, std::uint32_t t);

/// Arguments drawn as tangible combinations of the generators.
Verdict spanned_alternating_check(const PIPair& pair, const std::vector<TropMatrix>& generators,
                                  std::size_t trials, std::uint64_t seed);

struct CapelliWitness {
  std::vector<TropMatrix> xs;
  std::vector<TropMatrix> ys;
  TropMatrix value_f;
  TropMatrix value_g;
};

/// Matrix-unit substitution for the Capelli pair of degree n^2 on n x n
/// matrices with f -> e_11 and g -> Zero. Needs n <= 3.
CapelliWitness capelli_witness(int n, const SortSemiring& L = SortSemiring::two_layer());

/// Unit matrix e_{i,j} (0-based) over L.
TropMatrix matrix_unit(int n, int i, int j, const SortSemiring& L);

/// Staircase substitution e_11, e_12, e_22, ... along one monomial of f,
/// sending f to a matrix unit and g to Zero. Needs multilinear f, g in
/// m < 2n variables with no shared monomial.
std::vector<TropMatrix> min_degree_witness(const NCPoly& f, const NCPoly& g, int n,
                                           const SortSemiring& L = SortSemiring::two_layer());

SignedNCPoly split_integer_poly(const IntNCPoly& p);

/// A homogeneous identity of integer matrices written signlessly: lhs
/// evaluates P+ + P-, rhs evaluates Q+ + Q-.
struct MatrixIdentity {
  std::string name;
  std::uint32_t arity = 1;
  /// Degree d used for the threshold ell^d.
  std::uint32_t degree = 1;
  std::function<TropMatrix(std::span<const TropMatrix>)> lhs;
  std::function<TropMatrix(std::span<const TropMatrix>)> rhs;
};

/// |AB| against |A||B| as 1x1 matrices, d = 2n.
MatrixIdentity det_multiplicativity_identity(int n);
/// sum_{i>=1} alpha_i A^(i-1) from the layered characteristic polynomial
/// against adj(A), d = n - 1.
MatrixIdentity adjugate_identity(int n);
/// adj(adj(A)) against |A|^(n-2) A, d = n - 1.
MatrixIdentity double_adjoint_identity(int n);
/// From signed polynomials in the x variables.
MatrixIdentity identity_from_signed(const SignedNCPoly& P, const SignedNCPoly& Q,
                                    std::uint32_t degree);

/// ell^d.
SortLayer layer_power(const SortSemiring& L, const SortLayer& ell, std::uint32_t d);

/// Samples ell-layered n x n matrices over the naturals (entry layers in
/// [ell, ell+3], values in [-10, 10], no Zero) and requires every entry of
/// lhs to strongly ell^d-surpass the entry of rhs.
Verdict transfer_check(const MatrixIdentity& id, int n, const SortLayer& ell, std::size_t trials,
                       std::uint64_t seed);
Verdict transfer_check(const SignedNCPoly& P, const SignedNCPoly& Q, int n, std::uint32_t d,
                       const SortLayer& ell, std::size_t trials, std::uint64_t seed);

enum class SemigroupSample {
  /// Arbitrary tangible 2x2 matrices.
  Full,
  /// Zero below the diagonal.
  UpperTriangular,
  /// Full matrices substituted as A^2 and B^2.
  Squared,
};

/// AB^2A AB AB^2A = AB^2A BA AB^2A on random tangible 2x2 max-plus matrices.
Verdict semigroup_identity_2x2(std::size_t trials, std::uint64_t seed,
                               SemigroupSample sample = SemigroupSample::Full);

}  // namespace trop
