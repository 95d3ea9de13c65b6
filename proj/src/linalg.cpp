#include "tropical/linalg.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>

#include "tropical/error.hpp"

namespace trop {

namespace {

constexpr std::size_t kMaxCombinations = 4096;

SortSemiring set_semiring(const VectorSet& S) {
  for (const auto& v : S.vectors) {
    if (auto L = matrix_semiring(v)) return *L;
  }
  return SortSemiring::two_layer();
}

void require_dims(const VectorSet& S) {
  for (const auto& v : S.vectors) {
    if (v.size() != S.dim) {
      throw Error(Errc::ShapeMismatch, "vector of length " + std::to_string(v.size()) +
                                           " in a set of dimension " + std::to_string(S.dim));
    }
  }
}

VectorSet subset(const VectorSet& S, std::uint32_t mask) {
  VectorSet out{S.dim, {}};
  for (std::size_t i = 0; i < S.size(); ++i) {
    if ((mask >> i) & 1U) out.vectors.push_back(S.vectors[i]);
  }
  return out;
}

// a[to] - a[from] <= bound
struct DiffConstraint {
  int from;
  int to;
  ValueRat bound;
};

// Bellman-Ford from a virtual source joined to every node by a 0 edge.
bool solve_constraints(int nodes, const std::vector<DiffConstraint>& cs, std::vector<ValueRat>& pot) {
  pot.assign(nodes, ValueRat(0));
  for (int round = 0; round <= nodes; ++round) {
    bool changed = false;
    for (const auto& c : cs) {
      const ValueRat candidate = pot[c.from] + c.bound;
      if (candidate < pot[c.to]) {
        pot[c.to] = candidate;
        changed = true;
      }
    }
    if (!changed) return true;
  }
  return false;
}

struct Term {
  int pos;  // index into the support
  ValueRat value;
  bool ghost;
};

class CombinationSearch {
 public:
  CombinationSearch(const VectorSet& S, bool first_only)
      : S_(S), L_(set_semiring(S)), first_only_(first_only) {}

  std::vector<std::vector<LayeredScalar>> run() {
    const auto k = S_.size();
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
      return std::popcount(a) < std::popcount(b);
    });
    for (auto mask : masks) {
      if (search_support(mask)) break;
    }
    return std::move(found_);
  }

 private:
  // Returns true when the search should stop.
  bool search_support(std::uint32_t mask) {
    support_.clear();
    for (std::size_t i = 0; i < S_.size(); ++i) {
      if ((mask >> i) & 1U) support_.push_back(static_cast<int>(i));
    }
    rows_.clear();
    for (int r = 0; r < S_.dim; ++r) {
      std::vector<Term> terms;
      for (int p = 0; p < static_cast<int>(support_.size()); ++p) {
        const auto& x = S_.vectors[support_[p]](r);
        if (!x.is_zero()) terms.push_back({p, x.value(), is_ghost(x)});
      }
      if (terms.empty()) continue;
      const bool any_ghost = std::any_of(terms.begin(), terms.end(), [](const Term& t) { return t.ghost; });
      if (!any_ghost && (terms.size() < 2 || !L_.ties_are_ghost())) return false;
      rows_.push_back(std::move(terms));
    }
    std::vector<DiffConstraint> cs;
    return descend(0, cs);
  }

  bool descend(std::size_t row, std::vector<DiffConstraint>& cs) {
    std::vector<ValueRat> pot;
    if (!solve_constraints(static_cast<int>(support_.size()), cs, pot)) return false;
    if (row == rows_.size()) return record(pot);
    const auto& terms = rows_[row];
    const auto base = cs.size();
    auto dominate = [&](const Term& top, const Term* also) {
      for (const auto& t : terms) {
        if (t.pos == top.pos || (also != nullptr && t.pos == also->pos)) continue;
        cs.push_back({top.pos, t.pos, top.value - t.value});
      }
    };
    for (const auto& t : terms) {
      if (!t.ghost) continue;
      dominate(t, nullptr);
      if (descend(row + 1, cs)) return true;
      cs.resize(base);
    }
    if (L_.ties_are_ghost()) {
      for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
          const auto& a = terms[i];
          const auto& b = terms[j];
          cs.push_back({a.pos, b.pos, a.value - b.value});
          cs.push_back({b.pos, a.pos, b.value - a.value});
          dominate(a, &b);
          if (descend(row + 1, cs)) return true;
          cs.resize(base);
        }
      }
    }
    return false;
  }

  bool record(const std::vector<ValueRat>& pot) {
    std::vector<LayeredScalar> alpha(S_.size());
    for (std::size_t p = 0; p < support_.size(); ++p) {
      alpha[support_[p]] = LayeredScalar::tangible(pot[p] - pot[0], L_);
    }
    const TropVector sum = combine(S_, alpha);
    if (all_ghost_or_zero(sum) && std::find(found_.begin(), found_.end(), alpha) == found_.end()) {
      found_.push_back(std::move(alpha));
    }
    return first_only_ ? !found_.empty() : found_.size() >= kMaxCombinations;
  }

  const VectorSet& S_;
  SortSemiring L_;
  bool first_only_;
  std::vector<int> support_;
  std::vector<std::vector<Term>> rows_;
  std::vector<std::vector<LayeredScalar>> found_;
};

// Calls visit on every k-subset mask of an n-set until it returns true.
bool any_subset(std::size_t n, std::size_t k, const std::function<bool(std::uint32_t)>& visit) {
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) == k && visit(mask)) return true;
  }
  return false;
}

}  // namespace

VectorSet VectorSet::rows_of(const TropMatrix& A) {
  VectorSet S{static_cast<int>(A.cols()), {}};
  for (Eigen::Index i = 0; i < A.rows(); ++i) S.vectors.emplace_back(A.row(i).transpose());
  return S;
}

VectorSet VectorSet::cols_of(const TropMatrix& A) {
  VectorSet S{static_cast<int>(A.rows()), {}};
  for (Eigen::Index j = 0; j < A.cols(); ++j) S.vectors.emplace_back(A.col(j));
  return S;
}

TropMatrix VectorSet::as_rows() const {
  TropMatrix M(static_cast<Eigen::Index>(vectors.size()), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) M.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  return M;
}

bool is_dependent(const VectorSet& S) {
  if (S.vectors.empty()) throw Error(Errc::EmptySet, "dependence of an empty set");
  require_dims(S);
  const auto k = S.size();
  const auto n = static_cast<std::size_t>(S.dim);
  if (k > n + 1) {
    throw Error(Errc::TooManyVectors, std::to_string(k) + " vectors in dimension " + std::to_string(n));
  }
  if (k == n + 1) return true;
  const TropMatrix M = S.as_rows();
  if (k == n) return !det(M).tangible;
  const bool some_regular = any_subset(n, k, [&](std::uint32_t mask) {
    TropMatrix sub(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    Eigen::Index c = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1U) sub.col(c++) = M.col(static_cast<Eigen::Index>(j));
    }
    return det(sub).tangible;
  });
  return !some_regular;
}

std::optional<std::vector<LayeredScalar>> dependence_witness(const VectorSet& S) {
  if (S.vectors.empty()) throw Error(Errc::EmptySet, "dependence of an empty set");
  require_dims(S);
  if (S.size() > static_cast<std::size_t>(S.dim) + 1) {
    throw Error(Errc::TooManyVectors,
                std::to_string(S.size()) + " vectors in dimension " + std::to_string(S.dim));
  }
  auto found = CombinationSearch(S, true).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<std::vector<LayeredScalar>> ghost_combinations(const VectorSet& S) {
  require_dims(S);
  if (S.size() > kRankCap) throw Error(Errc::TooLarge, "too many vectors for a combination search");
  return CombinationSearch(S, false).run();
}

TropVector combine(const VectorSet& S, const std::vector<LayeredScalar>& alpha) {
  if (alpha.size() != S.size()) {
    throw Error(Errc::ArityMismatch, std::to_string(alpha.size()) + " coefficients for " +
                                         std::to_string(S.size()) + " vectors");
  }
  TropVector sum = TropVector::Constant(S.dim, LayeredScalar::zero());
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (alpha[i].is_zero()) continue;
    for (int r = 0; r < S.dim; ++r) sum(r) += alpha[i] * S.vectors[i](r);
  }
  return sum;
}

int rank(const VectorSet& S) {
  if (S.vectors.empty()) return 0;
  require_dims(S);
  if (S.size() > kRankCap) {
    throw Error(Errc::TooLarge, "rank of " + std::to_string(S.size()) + " vectors exceeds the cap");
  }
  const auto top = std::min(S.size(), static_cast<std::size_t>(S.dim));
  for (auto s = top; s >= 1; --s) {
    if (any_subset(S.size(), s, [&](std::uint32_t mask) { return !is_dependent(subset(S, mask)); })) {
      return static_cast<int>(s);
    }
  }
  return 0;
}

bool is_tangible_vector(const TropVector& v) {
  bool any = false;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    if (!is_tangible(v(i))) return false;
    any = true;
  }
  return any;
}

VectorSet tangible_dbase_through(const VectorSet& V, const TropVector& v) {
  if (!is_tangible_vector(v)) throw Error(Errc::NotTangible, "base vector must be tangible");
  require_dims(V);
  if (v.size() != V.dim) throw Error(Errc::ShapeMismatch, "vector length differs from the set dimension");
  VectorSet pool{V.dim, {}};
  auto offer = [&](const TropVector& w) {
    if (!is_tangible_vector(w) || w == v) return;
    if (std::find(pool.vectors.begin(), pool.vectors.end(), w) == pool.vectors.end()) {
      pool.vectors.push_back(w);
    }
  };
  for (const auto& w : V.vectors) {
    offer(w);
    offer(w.unaryExpr([](const LayeredScalar& x) { return tangible_retag(x); }));
  }
  if (pool.size() > kRankCap) throw Error(Errc::TooLarge, "candidate pool exceeds the cap");
  const auto r = static_cast<std::size_t>(rank(V));
  if (r == 0) throw Error(Errc::NotFound, "the set has rank 0");
  VectorSet result{V.dim, {}};
  const bool found = any_subset(pool.size(), r - 1, [&](std::uint32_t mask) {
    VectorSet candidate = subset(pool, mask);
    candidate.vectors.insert(candidate.vectors.begin(), v);
    if (is_dependent(candidate)) return false;
    result = std::move(candidate);
    return true;
  });
  if (!found) throw Error(Errc::NotFound, "no tangible independent set of the right size in the pool");
  return result;
}

AnnihilatorReport ghost_annihilator_rank_check(const TropMatrix& A) {
  if (A.rows() != A.cols()) throw Error(Errc::NotSquare, "annihilator check needs a square matrix");
  const int n = static_cast<int>(A.rows());
  if (n > 4) throw Error(Errc::TooLarge, "annihilator search is limited to n <= 4");
  AnnihilatorReport report;
  report.rank_a = rank(VectorSet::rows_of(A));
  VectorSet ann{n, {}};
  for (const auto& alpha : ghost_combinations(VectorSet::cols_of(A))) {
    TropVector v(n);
    for (int i = 0; i < n; ++i) v(i) = alpha[i];
    ann.vectors.push_back(v);
  }
  report.annihilators = ann.vectors;
  if (ann.size() <= kRankCap) {
    report.annihilator_rank_lower_bound = rank(ann);
  } else {
    VectorSet greedy{n, {}};
    for (const auto& v : ann.vectors) {
      if (greedy.size() == static_cast<std::size_t>(n)) break;
      greedy.vectors.push_back(v);
      if (is_dependent(greedy)) greedy.vectors.pop_back();
    }
    report.annihilator_rank_lower_bound = static_cast<int>(greedy.size());
  }
  report.holds = report.annihilator_rank_lower_bound >= n - report.rank_a;
  return report;
}

std::vector<EigenPair> eigen_tangible(const TropMatrix& A) {
  if (A.rows() != A.cols() || A.rows() == 0) throw Error(Errc::NotSquare, "eigen data needs a square matrix");
  const int n = static_cast<int>(A.rows());
  const SortSemiring L = matrix_semiring(A).value_or(SortSemiring::two_layer());
  const TropPoly f = tangible_char_poly(A);
  std::vector<EigenPair> out;
  if (f.size() < 2) return out;
  auto roots = corner_roots_univariate(f);
  std::reverse(roots.begin(), roots.end());
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const bool dominant = r == 0;
    EigenPair pair{roots[r].root, std::nullopt, false};
    const LayeredScalar beta = LayeredScalar::tangible(pair.beta, L);
    const TropMatrix shifted = mat_add(A, scalar_mul(beta, identity(n, L)));
    auto accept = [&](const TropVector& v) {
      if (!is_tangible_vector(v)) return false;
      const TropVector Av = mat_mul(A, v);
      const TropVector bv = scalar_mul(beta, v);
      const bool exact = Av == bv;
      if (!exact && (dominant || !ghost_surpasses(Av, bv))) return false;
      pair.vector = v;
      pair.exact = exact;
      return true;
    };
    const TropMatrix adj = adjoint(shifted);
    bool found = false;
    for (int j = 0; j < n && !found; ++j) {
      found = accept(adj.col(j).unaryExpr([](const LayeredScalar& x) { return tangible_retag(x); }));
    }
    if (!found && n <= 4) {
      for (const auto& alpha : ghost_combinations(VectorSet::cols_of(shifted))) {
        TropVector v(n);
        for (int i = 0; i < n; ++i) v(i) = alpha[i];
        if (accept(v)) break;
      }
    }
    out.push_back(std::move(pair));
  }
  return out;
}

std::optional<unsigned> generalized_eigen_check(const TropMatrix& A, const TropVector& v,
                                                const ValueRat& beta, unsigned max_m) {
  if (A.rows() != A.cols()) throw Error(Errc::NotSquare, "eigen check needs a square matrix");
  if (!is_tangible_vector(v)) throw Error(Errc::NotTangible, "eigen check needs a tangible vector");
  const SortSemiring L = matrix_semiring(A).value_or(SortSemiring::two_layer());
  TropVector image = v;
  for (unsigned m = 1; m <= max_m; ++m) {
    image = mat_mul(A, image);
    const LayeredScalar bm = LayeredScalar::tangible(beta * static_cast<std::int64_t>(m), L);
    if (ghost_surpasses(image, scalar_mul(bm, v))) return m;
  }
  return std::nullopt;
}

LayeredScalar form_eval(const BilinearForm& B, const TropVector& v, const TropVector& w) {
  const auto& M = B.gram_generator;
  if (v.size() != M.rows() || w.size() != M.cols()) {
    throw Error(Errc::ShapeMismatch, "vectors do not match the form's dimension");
  }
  LayeredScalar sum;
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    if (v(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < M.cols(); ++j) sum += v(i) * M(i, j) * w(j);
  }
  return sum;
}

TropMatrix gram(const BilinearForm& B, const VectorSet& S) {
  const auto k = static_cast<Eigen::Index>(S.size());
  TropMatrix G(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) G(i, j) = form_eval(B, S.vectors[i], S.vectors[j]);
  }
  return G;
}

bool is_ghost_orthogonal(const BilinearForm& B, const TropVector& v, const TropVector& w) {
  return is_ghost_or_zero(form_eval(B, v, w));
}

namespace {

// Twice the spread of the finite values in the form and the set, plus one,
// capped at 12: large enough for every tie between two entries to be reachable.
int auto_radius(const BilinearForm& B, const VectorSet& S) {
  std::optional<ValueRat> lo;
  std::optional<ValueRat> hi;
  auto see = [&](const LayeredScalar& x) {
    if (x.is_zero()) return;
    if (!lo || x.value() < *lo) lo = x.value();
    if (!hi || x.value() > *hi) hi = x.value();
  };
  for (const auto& v : S.vectors) std::for_each(v.data(), v.data() + v.size(), see);
  const auto& M = B.gram_generator;
  std::for_each(M.data(), M.data() + M.size(), see);
  if (!lo) return 1;
  const ValueRat spread = *hi - *lo;
  const auto whole = spread.numerator() / spread.denominator() + 1;
  return static_cast<int>(std::min<std::int64_t>(2 * whole + 1, 12));
}

}  // namespace

NondegeneracyReport is_nondegenerate(const BilinearForm& B, const VectorSet& S, int radius) {
  require_dims(S);
  if (S.dim != B.gram_generator.rows() || B.gram_generator.rows() != B.gram_generator.cols()) {
    throw Error(Errc::ShapeMismatch, "form and vector set dimensions differ");
  }
  if (S.size() > 6) throw Error(Errc::TooLarge, "nondegeneracy search is limited to 6 vectors");
  NondegeneracyReport report;
  const SortSemiring L = set_semiring(S);
  const auto k = S.size();
  if (radius < 0) radius = auto_radius(B, S);
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) idx.push_back(i);
    }
    std::vector<int> coeff(idx.size(), -radius);
    coeff[0] = 0;
    while (true) {
      std::vector<LayeredScalar> alpha(k);
      for (std::size_t p = 0; p < idx.size(); ++p) alpha[idx[p]] = LayeredScalar::tangible(coeff[p], L);
      const TropVector v = combine(S, alpha);
      const bool has_tangible = std::any_of(v.data(), v.data() + v.size(),
                                            [](const LayeredScalar& x) { return is_tangible(x); });
      if (has_tangible && std::all_of(S.vectors.begin(), S.vectors.end(), [&](const TropVector& w) {
            return is_ghost_orthogonal(B, v, w);
          })) {
        report.nondegenerate = false;
        report.radical_vector = v;
        return report;
      }
      std::size_t p = 1;
      while (p < idx.size() && coeff[p] == radius) coeff[p++] = -radius;
      if (p >= idx.size()) break;
      ++coeff[p];
    }
  }
  return report;
}

SymmetryReport orthogonal_symmetry_sampled(const BilinearForm& B, std::size_t trials,
                                           std::uint64_t seed) {
  const auto& M = B.gram_generator;
  const auto n = M.rows();
  const SortSemiring L = matrix_semiring(M).value_or(SortSemiring::two_layer());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-5, 5);
  std::uniform_int_distribution<Eigen::Index> coord(0, n - 1);
  SymmetryReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    TropVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = LayeredScalar::tangible(val(rng), L);
    // Linear functional w -> B(v, w), coefficient c_j on coordinate j.
    std::vector<LayeredScalar> c(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) c[j] += v(i) * M(i, j);
    }
    TropVector w = TropVector::Constant(n, LayeredScalar::zero());
    const Eigen::Index j = coord(rng);
    Eigen::Index k = coord(rng);
    if (n > 1) {
      while (k == j) k = coord(rng);
    }
    for (auto idx : {j, k}) {
      if (!c[idx].is_zero()) w(idx) = LayeredScalar::tangible(-c[idx].value(), L);
    }
    if (!is_tangible_vector(w) || !is_ghost_or_zero(form_eval(B, v, w))) continue;
    if (!is_ghost_or_zero(form_eval(B, w, v))) {
      report.symmetric = false;
      report.counterexample = std::make_pair(v, w);
      return report;
    }
  }
  return report;
}

}  // namespace trop
