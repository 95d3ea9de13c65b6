#include "tropical/identities.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

#include "tropical/error.hpp"

namespace trop {

namespace {

int permutation_parity(const std::vector<std::uint32_t>& sigma) {
  int inversions = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) inversions += sigma[i] > sigma[j] ? 1 : 0;
  }
  return inversions % 2;
}

std::size_t skip_spaces(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
  return pos;
}

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw Error(Errc::ParseError, what + " at position " + std::to_string(pos) + " in '" +
                                    std::string(text) + "'");
}

std::uint64_t parse_digits(std::string_view text, std::size_t& pos) {
  std::uint64_t n = 0;
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
    if (__builtin_mul_overflow(n, 10U, &n) ||
        __builtin_add_overflow(n, static_cast<std::uint64_t>(text[pos] - '0'), &n)) {
      parse_fail(text, start, "number too large");
    }
    ++pos;
  }
  if (pos == start) parse_fail(text, start, "expected digits");
  return n;
}

int square_size(std::span<const TropMatrix> xs, std::span<const TropMatrix> ys) {
  int n = -1;
  for (auto group : {xs, ys}) {
    for (const auto& M : group) {
      if (M.rows() != M.cols()) throw Error(Errc::ShapeMismatch, "arguments must be square");
      if (n >= 0 && M.rows() != n) throw Error(Errc::ShapeMismatch, "arguments differ in size");
      n = static_cast<int>(M.rows());
    }
  }
  if (n < 0) throw Error(Errc::ArityMismatch, "no arguments to evaluate at");
  return n;
}

SortSemiring args_semiring(std::span<const TropMatrix> xs, std::span<const TropMatrix> ys) {
  for (auto group : {xs, ys}) {
    for (const auto& M : group) {
      if (auto L = matrix_semiring(M)) return *L;
    }
  }
  return SortSemiring::two_layer();
}

TropMatrix nat_multiple_matrix(std::uint64_t c, const TropMatrix& M) {
  if (c == 1) return M;
  return M.unaryExpr([c](const LayeredScalar& x) { return nat_multiple(c, x); });
}

LayeredScalar random_entry(const SortSemiring& L, std::mt19937_64& rng, bool mixed) {
  std::uniform_int_distribution<int> value(-10, 10);
  if (!mixed) return LayeredScalar::tangible(value(rng), L);
  std::uniform_int_distribution<int> kind(0, 9);
  const int k = kind(rng);
  if (k < 2) return LayeredScalar::zero();
  if (k < 4) return LayeredScalar::make(value(rng), layer_add(L, L.one(), L.one()), L);
  return LayeredScalar::tangible(value(rng), L);
}

TropMatrix random_matrix(int n, const SortSemiring& L, std::mt19937_64& rng, bool mixed) {
  TropMatrix M(n, n);
  for (Eigen::Index i = 0; i < M.size(); ++i) M.data()[i] = random_entry(L, rng, mixed);
  return M;
}

NCPoly permuted_sum(const NCPoly& h, std::uint32_t t, int parity) {
  std::vector<std::uint32_t> sigma(t);
  std::iota(sigma.begin(), sigma.end(), 1U);
  NCPoly out;
  do {
    if (permutation_parity(sigma) != parity) continue;
    for (const auto& [word, c] : h.terms()) {
      Word image = word;
      for (auto& letter : image) {
        if (!letter.is_y && letter.index <= t) letter.index = sigma[letter.index - 1];
      }
      out.add(image, c);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

struct CapelliSums {
  TropMatrix even;
  TropMatrix odd;
};

// Sum of x_sigma(1) y_1 ... x_sigma(t) y_t split by the parity of sigma,
// skipping partial products that are already Zero.
void capelli_descend(const std::vector<TropMatrix>& xs, const std::vector<TropMatrix>& ys,
                     const TropMatrix& prefix, std::vector<bool>& used, std::size_t depth,
                     int parity, CapelliSums& sums) {
  if (depth == xs.size()) {
    if (parity == 0) {
      sums.even = sums.even + prefix;
    } else {
      sums.odd = sums.odd + prefix;
    }
    return;
  }
  for (std::size_t idx = 0; idx < xs.size(); ++idx) {
    if (used[idx]) continue;
    int later_smaller = 0;
    for (std::size_t j = 0; j < idx; ++j) later_smaller += used[j] ? 0 : 1;
    const TropMatrix next = mat_mul(mat_mul(prefix, xs[idx]), ys[depth]);
    if (std::all_of(next.data(), next.data() + next.size(), [](const auto& x) { return x.is_zero(); })) {
      continue;
    }
    used[idx] = true;
    capelli_descend(xs, ys, next, used, depth + 1, (parity + later_smaller) % 2, sums);
    used[idx] = false;
  }
}

}  // namespace

void NCPoly::add(const Word& w, std::uint64_t coeff) {
  if (coeff == 0) return;
  for (const auto& letter : w) {
    if (letter.index == 0) throw Error(Errc::ParseError, "variable indices start at 1");
  }
  terms_[w] += coeff;
}

std::uint32_t NCPoly::x_arity() const {
  std::uint32_t top = 0;
  for (const auto& [w, c] : terms_) {
    for (const auto& letter : w) {
      if (!letter.is_y) top = std::max(top, letter.index);
    }
  }
  return top;
}

std::uint32_t NCPoly::y_arity() const {
  std::uint32_t top = 0;
  for (const auto& [w, c] : terms_) {
    for (const auto& letter : w) {
      if (letter.is_y) top = std::max(top, letter.index);
    }
  }
  return top;
}

bool NCPoly::is_multilinear_in(std::uint32_t t) const {
  for (const auto& [w, c] : terms_) {
    std::vector<int> seen(t + 1, 0);
    for (const auto& letter : w) {
      if (letter.is_y) continue;
      if (letter.index > t) return false;
      ++seen[letter.index];
    }
    for (std::uint32_t i = 1; i <= t; ++i) {
      if (seen[i] != 1) return false;
    }
  }
  return true;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = skip_spaces(text, 0);
  while (pos < text.size()) {
    const char c = text[pos];
    if (c != 'x' && c != 'y') parse_fail(text, pos, "expected a variable x<i> or y<i>");
    ++pos;
    const auto index = parse_digits(text, pos);
    if (index == 0 || index > UINT32_MAX) parse_fail(text, pos, "variable index out of range");
    w.push_back({c == 'y', static_cast<std::uint32_t>(index)});
    pos = skip_spaces(text, pos);
  }
  return w;
}

NCPoly parse_ncpoly(std::string_view text) {
  NCPoly p;
  std::size_t pos = skip_spaces(text, 0);
  if (text.substr(pos) == "0") return p;
  while (true) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    std::size_t tpos = skip_spaces(term, 0);
    std::uint64_t coeff = 1;
    if (tpos < term.size() && std::isdigit(static_cast<unsigned char>(term[tpos])) != 0) {
      coeff = parse_digits(term, tpos);
      tpos = skip_spaces(term, tpos);
      if (tpos < term.size()) {
        if (term[tpos] != '*') parse_fail(text, pos + tpos, "expected '*'");
        ++tpos;
      }
    }
    const Word w = parse_word(term.substr(tpos));
    if (w.empty() && coeff == 1 && skip_spaces(term, 0) == term.size()) {
      parse_fail(text, pos, "empty term");
    }
    p.add(w, coeff);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return p;
}

PIPair parse_pi_pair(std::string_view text) {
  const auto split = text.find("==");
  if (split == std::string_view::npos) parse_fail(text, 0, "expected 'lhs == rhs'");
  PIPair pair{parse_ncpoly(text.substr(0, split)), parse_ncpoly(text.substr(split + 2)), 0};
  pair.arity = std::max(pair.f.x_arity(), pair.g.x_arity());
  return pair;
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& letter : w) {
    if (!out.empty()) out += ' ';
    out += (letter.is_y ? 'y' : 'x') + std::to_string(letter.index);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const NCPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += to_string(w);
  }
  return out;
}

TropMatrix nc_eval(const NCPoly& p, std::span<const TropMatrix> xs, std::span<const TropMatrix> ys) {
  const int n = square_size(xs, ys);
  if (p.x_arity() > xs.size() || p.y_arity() > ys.size()) {
    throw Error(Errc::ArityMismatch, "polynomial needs " + std::to_string(p.x_arity()) + " x and " +
                                         std::to_string(p.y_arity()) + " y arguments");
  }
  const SortSemiring L = args_semiring(xs, ys);
  TropMatrix sum = zero_matrix(n, n);
  for (const auto& [w, c] : p.terms()) {
    TropMatrix prod = identity(n, L);
    for (const auto& letter : w) {
      prod = mat_mul(prod, letter.is_y ? ys[letter.index - 1] : xs[letter.index - 1]);
    }
    sum = sum + nat_multiple_matrix(c, prod);
  }
  return sum;
}

Verdict check_pi(const PIPair& pair, int n, std::size_t trials, std::uint64_t seed,
                 const SortSemiring& L) {
  if (n < 1) throw Error(Errc::ShapeMismatch, "matrix size must be positive");
  std::mt19937_64 rng(seed);
  const auto nx = std::max({pair.arity, pair.f.x_arity(), pair.g.x_arity()});
  const auto ny = std::max(pair.f.y_arity(), pair.g.y_arity());
  Verdict verdict;
  for (std::size_t t = 0; t < trials; ++t) {
    const bool mixed = (t % 2) == 1;
    std::vector<TropMatrix> xs;
    std::vector<TropMatrix> ys;
    for (std::uint32_t i = 0; i < nx; ++i) xs.push_back(random_matrix(n, L, rng, mixed));
    for (std::uint32_t i = 0; i < ny; ++i) ys.push_back(random_matrix(n, L, rng, mixed));
    if (xs.empty() && ys.empty()) xs.push_back(random_matrix(n, L, rng, mixed));
    ++verdict.trials;
    if (!(nc_eval(pair.f, xs, ys) == nc_eval(pair.g, xs, ys))) {
      verdict.holds = false;
      verdict.counterexample = xs;
      verdict.counterexample.insert(verdict.counterexample.end(), ys.begin(), ys.end());
      return verdict;
    }
  }
  return verdict;
}

PIPair alternating_pair(const NCPoly& h, std::uint32_t t) {
  if (t < 2) throw Error(Errc::ArityMismatch, "alternating pairs need t >= 2");
  if (!h.is_multilinear_in(t) || h.x_arity() > t) {
    throw Error(Errc::NotMultilinear, "'" + to_string(h) + "' is not multilinear in x1..x" +
                                          std::to_string(t));
  }
  return {permuted_sum(h, t, 0), permuted_sum(h, t, 1), t};
}

PIPair standard_pair(std::uint32_t t) {
  NCPoly h;
  Word w;
  for (std::uint32_t i = 1; i <= t; ++i) w.push_back({false, i});
  h.add(w);
  return alternating_pair(h, t);
}

PIPair capelli_pair(std::uint32_t t) {
  NCPoly h;
  Word w;
  for (std::uint32_t i = 1; i <= t; ++i) {
    w.push_back({false, i});
    w.push_back({true, i});
  }
  h.add(w);
  return alternating_pair(h, t);
}

Verdict spanned_alternating_check(const PIPair& pair, const std::vector<TropMatrix>& generators,
                                  std::size_t trials, std::uint64_t seed) {
  if (generators.empty()) throw Error(Errc::ArityMismatch, "no generators");
  const int n = square_size(generators, {});
  const SortSemiring L = args_semiring(generators, {});
  const auto nx = std::max({pair.arity, pair.f.x_arity(), pair.g.x_arity()});
  const auto ny = std::max(pair.f.y_arity(), pair.g.y_arity());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> drop(0, 4);
  Verdict verdict;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<TropMatrix> xs;
    for (std::uint32_t i = 0; i < nx; ++i) {
      TropMatrix x = zero_matrix(n, n);
      for (std::size_t g = 0; g < generators.size(); ++g) {
        if (g > 0 && drop(rng) == 0) continue;
        x = x + scalar_mul(LayeredScalar::tangible(coeff(rng), L), generators[g]);
      }
      xs.push_back(std::move(x));
    }
    std::vector<TropMatrix> ys;
    for (std::uint32_t i = 0; i < ny; ++i) ys.push_back(random_matrix(n, L, rng, false));
    ++verdict.trials;
    if (!(nc_eval(pair.f, xs, ys) == nc_eval(pair.g, xs, ys))) {
      verdict.holds = false;
      verdict.counterexample = xs;
      verdict.counterexample.insert(verdict.counterexample.end(), ys.begin(), ys.end());
      return verdict;
    }
  }
  return verdict;
}

TropMatrix matrix_unit(int n, int i, int j, const SortSemiring& L) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw Error(Errc::IndexOutOfRange, "matrix unit index");
  TropMatrix E = zero_matrix(n, n);
  E(i, j) = LayeredScalar::one(L);
  return E;
}

CapelliWitness capelli_witness(int n, const SortSemiring& L) {
  if (n < 1) throw Error(Errc::ShapeMismatch, "matrix size must be positive");
  if (n > 3) throw Error(Errc::TooLarge, "Capelli witness is limited to n <= 3");
  std::vector<std::pair<int, int>> units;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) units.emplace_back(i, j);
  }
  CapelliWitness w;
  const std::size_t t = units.size();
  for (std::size_t k = 0; k < t; ++k) {
    w.xs.push_back(matrix_unit(n, units[k].first, units[k].second, L));
    const int next_row = k + 1 < t ? units[k + 1].first : 0;
    w.ys.push_back(matrix_unit(n, units[k].second, next_row, L));
  }
  CapelliSums sums{zero_matrix(n, n), zero_matrix(n, n)};
  std::vector<bool> used(t, false);
  capelli_descend(w.xs, w.ys, identity(n, L), used, 0, 0, sums);
  w.value_f = sums.even;
  w.value_g = sums.odd;
  return w;
}

std::vector<TropMatrix> min_degree_witness(const NCPoly& f, const NCPoly& g, int n,
                                           const SortSemiring& L) {
  if (f.empty()) throw Error(Errc::HypothesisViolated, "f has no monomials");
  const auto m = std::max(f.x_arity(), g.x_arity());
  if (f.y_arity() != 0 || g.y_arity() != 0 || !f.is_multilinear_in(m) || !g.is_multilinear_in(m)) {
    throw Error(Errc::NotMultilinear, "staircase witness needs multilinear polynomials in x");
  }
  if (static_cast<int>(m) >= 2 * n) {
    throw Error(Errc::HypothesisViolated, "degree " + std::to_string(m) + " is not below 2n = " +
                                              std::to_string(2 * n));
  }
  for (const auto& [w, c] : f.terms()) {
    if (g.terms().count(w) != 0) {
      throw Error(Errc::HypothesisViolated, "f and g share the monomial " + to_string(w));
    }
  }
  const Word& word = f.terms().begin()->first;
  std::vector<TropMatrix> args(m);
  for (std::size_t k = 0; k < word.size(); ++k) {
    const int r = static_cast<int>(k / 2);
    args[word[k].index - 1] = matrix_unit(n, r, k % 2 == 0 ? r : r + 1, L);
  }
  return args;
}

SignedNCPoly split_integer_poly(const IntNCPoly& p) {
  SignedNCPoly out;
  for (const auto& [w, c] : p) {
    if (c > 0) out.plus.add(w, static_cast<std::uint64_t>(c));
    if (c < 0) out.minus.add(w, static_cast<std::uint64_t>(-(c + 1)) + 1);
  }
  return out;
}

MatrixIdentity det_multiplicativity_identity(int n) {
  MatrixIdentity id;
  id.name = "det";
  id.arity = 2;
  id.degree = static_cast<std::uint32_t>(2 * n);
  id.lhs = [](std::span<const TropMatrix> a) {
    TropMatrix out(1, 1);
    out(0, 0) = det_value(mat_mul(a[0], a[1]));
    return out;
  };
  id.rhs = [](std::span<const TropMatrix> a) {
    TropMatrix out(1, 1);
    out(0, 0) = det_value(a[0]) * det_value(a[1]);
    return out;
  };
  return id;
}

MatrixIdentity adjugate_identity(int n) {
  MatrixIdentity id;
  id.name = "adjugate";
  id.arity = 1;
  id.degree = static_cast<std::uint32_t>(n - 1);
  id.lhs = [](std::span<const TropMatrix> a) {
    const TropMatrix& A = a[0];
    const int size = static_cast<int>(A.rows());
    const SortSemiring L = matrix_semiring(A).value_or(SortSemiring::two_layer());
    const TropPoly f = char_poly(A);
    TropMatrix sum = zero_matrix(size, size);
    TropMatrix pow = identity(size, L);
    for (int k = 1; k <= size; ++k) {
      sum = sum + scalar_mul(f.coeff(static_cast<std::uint32_t>(k)), pow);
      pow = mat_mul(pow, A);
    }
    return sum;
  };
  id.rhs = [](std::span<const TropMatrix> a) { return adjoint(a[0]); };
  return id;
}

MatrixIdentity double_adjoint_identity(int n) {
  MatrixIdentity id;
  id.name = "double-adjoint";
  id.arity = 1;
  id.degree = static_cast<std::uint32_t>(n - 1);
  id.lhs = [](std::span<const TropMatrix> a) { return adjoint(adjoint(a[0])); };
  id.rhs = [](std::span<const TropMatrix> a) {
    const TropMatrix& A = a[0];
    const auto k = static_cast<unsigned>(A.rows() >= 2 ? A.rows() - 2 : 0);
    return scalar_mul(power(det_value(A), k), A);
  };
  return id;
}

MatrixIdentity identity_from_signed(const SignedNCPoly& P, const SignedNCPoly& Q,
                                    std::uint32_t degree) {
  MatrixIdentity id;
  id.name = "signed";
  id.arity = std::max({P.plus.x_arity(), P.minus.x_arity(), Q.plus.x_arity(), Q.minus.x_arity(), 1U});
  id.degree = degree;
  id.lhs = [P](std::span<const TropMatrix> a) {
    return mat_add(nc_eval(P.plus, a), nc_eval(P.minus, a));
  };
  id.rhs = [Q](std::span<const TropMatrix> a) {
    return mat_add(nc_eval(Q.plus, a), nc_eval(Q.minus, a));
  };
  return id;
}

SortLayer layer_power(const SortSemiring& L, const SortLayer& ell, std::uint32_t d) {
  SortLayer out = L.one();
  for (std::uint32_t i = 0; i < d; ++i) out = layer_mul(L, out, ell);
  return out;
}

Verdict transfer_check(const MatrixIdentity& id, int n, const SortLayer& ell, std::size_t trials,
                       std::uint64_t seed) {
  const auto N = SortSemiring::naturals();
  if (!N.valid_nonzero(ell)) {
    throw Error(Errc::MismatchedDescriptor, "layer threshold " + to_string(ell) + " is not in nat");
  }
  const SortLayer threshold = layer_power(N, ell, id.degree);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(-10, 10);
  std::uniform_int_distribution<std::uint64_t> bump(0, 3);
  Verdict verdict;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<TropMatrix> args;
    for (std::uint32_t a = 0; a < id.arity; ++a) {
      TropMatrix M(n, n);
      for (Eigen::Index i = 0; i < M.size(); ++i) {
        M.data()[i] = LayeredScalar::make(value(rng), SortLayer::fin(ell.first + bump(rng)), N);
      }
      args.push_back(std::move(M));
    }
    ++verdict.trials;
    const TropMatrix lhs = id.lhs(args);
    const TropMatrix rhs = id.rhs(args);
    bool ok = lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols();
    for (Eigen::Index i = 0; ok && i < lhs.size(); ++i) {
      ok = strong_l_surpass(lhs.data()[i], rhs.data()[i], threshold);
    }
    if (!ok) {
      verdict.holds = false;
      verdict.counterexample = args;
      return verdict;
    }
  }
  return verdict;
}

Verdict transfer_check(const SignedNCPoly& P, const SignedNCPoly& Q, int n, std::uint32_t d,
                       const SortLayer& ell, std::size_t trials, std::uint64_t seed) {
  return transfer_check(identity_from_signed(P, Q, d), n, ell, trials, seed);
}

Verdict semigroup_identity_2x2(std::size_t trials, std::uint64_t seed, SemigroupSample sample) {
  const auto L = SortSemiring::trivial();
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    TropMatrix M = random_matrix(2, L, rng, false);
    if (sample == SemigroupSample::UpperTriangular) M(1, 0) = LayeredScalar::zero();
    if (sample == SemigroupSample::Squared) M = mat_mul(M, M);
    return M;
  };
  Verdict verdict;
  for (std::size_t t = 0; t < trials; ++t) {
    const TropMatrix A = draw();
    const TropMatrix B = draw();
    const TropMatrix AB = mat_mul(A, B);
    const TropMatrix BA = mat_mul(B, A);
    const TropMatrix outer = mat_mul(mat_mul(AB, B), A);
    const TropMatrix lhs = mat_mul(mat_mul(outer, AB), outer);
    const TropMatrix rhs = mat_mul(mat_mul(outer, BA), outer);
    ++verdict.trials;
    if (!(lhs == rhs)) {
      verdict.holds = false;
      verdict.counterexample = {A, B};
      return verdict;
    }
  }
  return verdict;
}

}  // namespace trop
