#include "tropical/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "tropical/error.hpp"

namespace trop {

namespace {

void require_square(const TropMatrix& A) {
  if (A.rows() != A.cols() || A.rows() == 0) {
    throw Error(Errc::NotSquare, "expected a nonempty square matrix, got " +
                                     std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
  }
}

void require_same_shape(const TropMatrix& A, const TropMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw Error(Errc::ShapeMismatch, std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                                         " against " + std::to_string(B.rows()) + "x" +
                                         std::to_string(B.cols()));
  }
}

SortSemiring semiring_or_default(const TropMatrix& A) {
  return matrix_semiring(A).value_or(SortSemiring::two_layer());
}

}  // namespace

TropMatrix tangible_matrix(const std::vector<std::vector<std::optional<ValueRat>>>& rows,
                           const SortSemiring& L) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = n == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows[0].size());
  TropMatrix A(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != m) {
      throw Error(Errc::ShapeMismatch, "ragged rows");
    }
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto& v = rows[i][j];
      A(i, j) = v ? LayeredScalar::tangible(*v, L) : LayeredScalar::zero();
    }
  }
  return A;
}

TropVector tangible_vector(const std::vector<std::optional<ValueRat>>& values,
                           const SortSemiring& L) {
  TropVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    v(i) = values[i] ? LayeredScalar::tangible(*values[i], L) : LayeredScalar::zero();
  }
  return v;
}

TropMatrix identity(int n, const SortSemiring& L) {
  TropMatrix I = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = LayeredScalar::one(L);
  return I;
}

TropMatrix zero_matrix(int rows, int cols) {
  return TropMatrix::Constant(rows, cols, LayeredScalar::zero());
}

TropMatrix mat_add(const TropMatrix& A, const TropMatrix& B) {
  require_same_shape(A, B);
  return A + B;
}

TropMatrix mat_mul(const TropMatrix& A, const TropMatrix& B) {
  if (A.cols() != B.rows()) {
    throw Error(Errc::ShapeMismatch, "cannot multiply " + std::to_string(A.rows()) + "x" +
                                         std::to_string(A.cols()) + " by " +
                                         std::to_string(B.rows()) + "x" + std::to_string(B.cols()));
  }
  if (A.cols() == 0) return zero_matrix(static_cast<int>(A.rows()), static_cast<int>(B.cols()));
  return A.lazyProduct(B);
}

TropMatrix transpose(const TropMatrix& A) { return A.transpose(); }

TropMatrix scalar_mul(const LayeredScalar& c, const TropMatrix& A) {
  return A.unaryExpr([&](const LayeredScalar& x) { return c * x; });
}

TropMatrix mat_pow(const TropMatrix& A, unsigned k, const SortSemiring& L) {
  require_square(A);
  TropMatrix out = identity(static_cast<int>(A.rows()), L);
  for (unsigned i = 0; i < k; ++i) out = mat_mul(out, A);
  return out;
}

std::optional<SortSemiring> matrix_semiring(const TropMatrix& A) {
  std::optional<SortSemiring> found;
  for (Eigen::Index i = 0; i < A.size(); ++i) {
    auto L = A.data()[i].semiring();
    if (!L) continue;
    if (found && !(*found == *L)) {
      throw Error(Errc::MismatchedDescriptor,
                  "matrix mixes " + found->descriptor() + " and " + L->descriptor());
    }
    found = L;
  }
  return found;
}

bool all_ghost_or_zero(const TropMatrix& A) {
  return std::all_of(A.data(), A.data() + A.size(), [](const auto& x) { return is_ghost_or_zero(x); });
}

bool all_tangible_or_zero(const TropMatrix& A) {
  return std::all_of(A.data(), A.data() + A.size(),
                     [](const auto& x) { return x.is_zero() || is_tangible(x); });
}

bool ghost_surpasses(const TropMatrix& A, const TropMatrix& B) {
  require_same_shape(A, B);
  for (Eigen::Index i = 0; i < A.size(); ++i) {
    if (!ghost_surpass(A.data()[i], B.data()[i])) return false;
  }
  return true;
}

bool nu_equal(const TropMatrix& A, const TropMatrix& B) {
  require_same_shape(A, B);
  for (Eigen::Index i = 0; i < A.size(); ++i) {
    if (!nu_eq(A.data()[i], B.data()[i])) return false;
  }
  return true;
}

DetReport det(const TropMatrix& A, int cap) {
  require_square(A);
  const int n = static_cast<int>(A.rows());
  if (n > cap) {
    throw Error(Errc::TooLarge, "permanent of a " + std::to_string(n) + "x" + std::to_string(n) +
                                    " matrix exceeds the cap " + std::to_string(cap));
  }
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::pair<std::vector<int>, LayeredScalar>> products;
  DetReport report;
  do {
    LayeredScalar p = A(0, sigma[0]);
    for (int i = 1; i < n && !p.is_zero(); ++i) p *= A(i, sigma[i]);
    report.value += p;
    products.emplace_back(sigma, p);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  for (auto& [perm, p] : products) {
    if (nu_eq(p, report.value)) report.attaining.push_back(std::move(perm));
  }
  report.tangible = is_tangible(report.value);
  return report;
}

LayeredScalar det_value(const TropMatrix& A, int cap) { return det(A, cap).value; }

TropMatrix minor(const TropMatrix& A, int i, int j) {
  require_square(A);
  const int n = static_cast<int>(A.rows());
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw Error(Errc::IndexOutOfRange, "minor (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") of a " + std::to_string(n) + "x" +
                                           std::to_string(n) + " matrix");
  }
  TropMatrix M(n - 1, n - 1);
  for (int r = 0, mr = 0; r < n; ++r) {
    if (r == i) continue;
    for (int c = 0, mc = 0; c < n; ++c) {
      if (c == j) continue;
      M(mr, mc++) = A(r, c);
    }
    ++mr;
  }
  return M;
}

TropMatrix adjoint(const TropMatrix& A, int cap) {
  require_square(A);
  const int n = static_cast<int>(A.rows());
  if (n == 1) {
    TropMatrix one(1, 1);
    auto L = matrix_semiring(A);
    one(0, 0) = L ? LayeredScalar::one(*L) : LayeredScalar::unit();
    return one;
  }
  TropMatrix adj(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) adj(j, i) = det_value(minor(A, i, j), cap);
  }
  return adj;
}

TropMatrix a_nabla(const TropMatrix& A) {
  const DetReport d = det(A);
  if (!d.tangible) {
    throw Error(Errc::SingularMatrix, "|A| = " + to_string(d.value) + " is not tangible");
  }
  const ValueRat shift = -d.value.value();
  return adjoint(A).unaryExpr([&](const LayeredScalar& x) { return shift_value(x, shift); });
}

std::pair<TropMatrix, TropMatrix> quasi_identity(const TropMatrix& A) {
  const TropMatrix nabla = a_nabla(A);
  return {mat_mul(A, nabla), mat_mul(nabla, A)};
}

TropVector cramer_solve(const TropMatrix& A, const TropVector& v) {
  require_square(A);
  if (v.size() != A.rows()) {
    throw Error(Errc::ShapeMismatch, "right-hand side of length " + std::to_string(v.size()) +
                                         " for a " + std::to_string(A.rows()) + "x" +
                                         std::to_string(A.cols()) + " system");
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero() && !is_tangible(v(i))) {
      throw Error(Errc::NonTangibleRHS, "entry " + std::to_string(i) + " is " + to_string(v(i)));
    }
  }
  const TropVector y = mat_mul(a_nabla(A), v);
  return y.unaryExpr([](const LayeredScalar& x) { return tangible_retag(x); });
}

TropPoly char_poly(const TropMatrix& A) {
  require_square(A);
  const int n = static_cast<int>(A.rows());
  if (n > kDefaultDetCap) throw Error(Errc::TooLarge, "characteristic polynomial above the cap");
  const SortSemiring L = semiring_or_default(A);
  std::vector<TropPoly> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      TropPoly e = TropPoly::constant(A(i, j));
      if (i == j) e.add_term({1}, LayeredScalar::one(L));
      entries.push_back(std::move(e));
    }
  }
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  TropPoly sum(1);
  do {
    TropPoly p = entries[sigma[0]];
    for (int i = 1; i < n && !p.is_zero(); ++i) p = p * entries[i * n + sigma[i]];
    sum = sum + p;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

TropPoly tangible_char_poly(const TropMatrix& A) {
  const TropPoly f = char_poly(A);
  TropPoly out(1);
  for (const auto& [exp, c] : f.terms()) out.add_term(exp, tangible_retag(c));
  return out;
}

TropMatrix poly_eval_matrix(const TropPoly& f, const TropMatrix& A) {
  require_square(A);
  if (f.nvars() != 1) throw Error(Errc::NotUnivariate, "matrix evaluation needs one variable");
  const int n = static_cast<int>(A.rows());
  const SortSemiring L = matrix_semiring(A).value_or(f.semiring().value_or(SortSemiring::two_layer()));
  TropMatrix sum = zero_matrix(n, n);
  TropMatrix pow_k = identity(n, L);
  std::uint32_t k = 0;
  for (const auto& [exp, c] : f.terms()) {
    while (k < exp[0]) {
      pow_k = mat_mul(pow_k, A);
      ++k;
    }
    sum = sum + scalar_mul(c, pow_k);
  }
  return sum;
}

bool satisfies_poly(const TropMatrix& A, const TropPoly& f) {
  return all_ghost_or_zero(poly_eval_matrix(f, A));
}

std::string to_string(const TropMatrix& A) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    out += i == 0 ? "[" : ", [";
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (j != 0) out += ", ";
      out += to_string(A(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace trop
