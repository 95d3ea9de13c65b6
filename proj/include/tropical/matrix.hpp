#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "tropical/layered.hpp"
#include "tropical/poly.hpp"

namespace Eigen {

template <>
struct NumTraits<trop::LayeredScalar> : GenericNumTraits<trop::LayeredScalar> {
  using Real = trop::LayeredScalar;
  using NonInteger = trop::LayeredScalar;
  using Nested = trop::LayeredScalar;
  using Literal = trop::LayeredScalar;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 8,
  };

  static inline int digits10() { return 0; }
  static inline trop::LayeredScalar epsilon() { return trop::LayeredScalar::zero(); }
  static inline trop::LayeredScalar dummy_precision() { return trop::LayeredScalar::zero(); }
};

}  // namespace Eigen

namespace trop {

using TropMatrix = Eigen::Matrix<LayeredScalar, Eigen::Dynamic, Eigen::Dynamic>;
using TropVector = Eigen::Matrix<LayeredScalar, Eigen::Dynamic, 1>;

/// Largest n for which det enumerates S_n.
inline constexpr int kDefaultDetCap = 9;

/// Entries given as values, all at layer one of L; nullopt gives Zero.
TropMatrix tangible_matrix(const std::vector<std::vector<std::optional<ValueRat>>>& rows,
                           const SortSemiring& L);
TropVector tangible_vector(const std::vector<std::optional<ValueRat>>& values,
                           const SortSemiring& L);

TropMatrix identity(int n, const SortSemiring& L);
TropMatrix zero_matrix(int rows, int cols);

TropMatrix mat_add(const TropMatrix& A, const TropMatrix& B);
TropMatrix mat_mul(const TropMatrix& A, const TropMatrix& B);
TropMatrix transpose(const TropMatrix& A);
TropMatrix scalar_mul(const LayeredScalar& c, const TropMatrix& A);
TropMatrix mat_pow(const TropMatrix& A, unsigned k, const SortSemiring& L);

/// Descriptor shared by the entries; nullopt when all entries are Zero.
std::optional<SortSemiring> matrix_semiring(const TropMatrix& A);

bool all_ghost_or_zero(const TropMatrix& A);
bool all_tangible_or_zero(const TropMatrix& A);
/// Entrywise ghost_surpass(A(i,j), B(i,j)).
bool ghost_surpasses(const TropMatrix& A, const TropMatrix& B);
/// Entrywise nu_eq.
bool nu_equal(const TropMatrix& A, const TropMatrix& B);

struct DetReport {
  LayeredScalar value;
  /// Each permutation in row form: sigma[i] is the column used by row i.
  std::vector<std::vector<int>> attaining;
  bool tangible = false;
};

/// Permanent by exhaustive enumeration of S_n. A Zero permanent lists all
/// permutations as attaining.
DetReport det(const TropMatrix& A, int cap = kDefaultDetCap);
/// Value of det(A).
LayeredScalar det_value(const TropMatrix& A, int cap = kDefaultDetCap);

/// A with row i and column j deleted (0-based).
TropMatrix minor(const TropMatrix& A, int i, int j);
/// Transpose of the matrix of minor permanents; [[unit]] for 1x1.
TropMatrix adjoint(const TropMatrix& A, int cap = kDefaultDetCap);

/// adj(A) with every value lowered by the value of |A|. Needs |A| tangible.
TropMatrix a_nabla(const TropMatrix& A);
/// (A * a_nabla(A), a_nabla(A) * A).
std::pair<TropMatrix, TropMatrix> quasi_identity(const TropMatrix& A);

/// Tangible vector with the values of a_nabla(A) * v.
TropVector cramer_solve(const TropMatrix& A, const TropVector& v);

/// |lambda I + A| over the polynomial semiring.
TropPoly char_poly(const TropMatrix& A);
/// char_poly with every coefficient moved to the unit layer.
TropPoly tangible_char_poly(const TropMatrix& A);

/// f evaluated at A, constants times the identity.
TropMatrix poly_eval_matrix(const TropPoly& f, const TropMatrix& A);
/// f(A) is ghost or Zero in every entry.
bool satisfies_poly(const TropMatrix& A, const TropPoly& f);

std::string to_string(const TropMatrix& A);

}  // namespace trop
