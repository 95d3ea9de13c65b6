#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropical/matrix.hpp"

namespace trop {

/// A list of vectors of a common dimension.
struct VectorSet {
  int dim = 0;
  std::vector<TropVector> vectors;

  static VectorSet rows_of(const TropMatrix& A);
  static VectorSet cols_of(const TropMatrix& A);
  std::size_t size() const noexcept { return vectors.size(); }
  /// The vectors as rows of a |S| x dim matrix.
  TropMatrix as_rows() const;
};

/// Largest set accepted by rank.
inline constexpr std::size_t kRankCap = 16;

/// Decision by permanents: |S| = dim + 1 is dependent, |S| = dim is dependent
/// iff the square matrix is singular, |S| < dim iff every maximal minor is.
bool is_dependent(const VectorSet& S);

/// Tangible coefficients (Zero allowed, not all Zero) whose combination is
/// ghost or Zero in every coordinate, or nullopt when none exists.
std::optional<std::vector<LayeredScalar>> dependence_witness(const VectorSet& S);

/// Every canonical ghost-producing combination of the vectors, one per
/// feasible tie pattern, with the first nonzero coefficient at value 0.
std::vector<std::vector<LayeredScalar>> ghost_combinations(const VectorSet& S);

/// sum_i alpha_i v_i.
TropVector combine(const VectorSet& S, const std::vector<LayeredScalar>& alpha);

/// Size of a largest independent subset.
int rank(const VectorSet& S);

/// Independent tangible subset containing v of size rank(V), drawn from V and
/// the tangible retags of its members.
VectorSet tangible_dbase_through(const VectorSet& V, const TropVector& v);

/// Every entry tangible or Zero, at least one nonzero.
bool is_tangible_vector(const TropVector& v);

struct AnnihilatorReport {
  int rank_a = 0;
  int annihilator_rank_lower_bound = 0;
  bool holds = false;
  std::vector<TropVector> annihilators;
};

/// Row rank m of A against the rank of tangible v with A v ghost or Zero.
AnnihilatorReport ghost_annihilator_rank_check(const TropMatrix& A);

struct EigenPair {
  ValueRat beta;
  std::optional<TropVector> vector;
  /// A v = beta v holds exactly rather than up to ghost surpassing.
  bool exact = false;
};

/// Corner roots of the tangible characteristic polynomial, largest first,
/// each with a tangible eigenvector when one is found.
std::vector<EigenPair> eigen_tangible(const TropMatrix& A);

/// Smallest m in [1, max_m] with A^m v ghost-surpassing beta^m v.
std::optional<unsigned> generalized_eigen_check(const TropMatrix& A, const TropVector& v,
                                                const ValueRat& beta, unsigned max_m);

/// B(v, w) = v^T M w.
struct BilinearForm {
  TropMatrix gram_generator;
};

LayeredScalar form_eval(const BilinearForm& B, const TropVector& v, const TropVector& w);
TropMatrix gram(const BilinearForm& B, const VectorSet& S);
bool is_ghost_orthogonal(const BilinearForm& B, const TropVector& v, const TropVector& w);

struct NondegeneracyReport {
  bool nondegenerate = true;
  /// The search covers a bounded grid only.
  bool approximate = true;
  /// A non-ghost combination orthogonal to all of S, when found.
  std::optional<TropVector> radical_vector;
};

/// Searches tangible combinations of S with integer coefficients in
/// [-radius, radius] for a non-ghost vector ghost-orthogonal to all of S.
/// A negative radius picks one from the spread of the values involved.
NondegeneracyReport is_nondegenerate(const BilinearForm& B, const VectorSet& S, int radius = -1);

struct SymmetryReport {
  bool symmetric = true;
  std::optional<std::pair<TropVector, TropVector>> counterexample;
};

/// Samples pairs with B(v, w) forced to a ghost by a tie and checks that
/// B(w, v) is ghost or Zero as well.
SymmetryReport orthogonal_symmetry_sampled(const BilinearForm& B, std::size_t trials,
                                           std::uint64_t seed);

}  // namespace trop
