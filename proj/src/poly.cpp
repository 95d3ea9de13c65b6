#include "tropical/poly.hpp"

#include <algorithm>
#include <random>

#include "tropical/error.hpp"

namespace trop {

namespace {

void require_arity(const TropPoly& f, const TropPoly& g) {
  if (f.nvars() != g.nvars()) {
    throw Error(Errc::ArityMismatch, "polynomials in " + std::to_string(f.nvars()) + " and " +
                                         std::to_string(g.nvars()) + " variables");
  }
}

void require_univariate(const TropPoly& f) {
  if (f.nvars() != 1) {
    throw Error(Errc::NotUnivariate,
                "expected a univariate polynomial, got " + std::to_string(f.nvars()) + " variables");
  }
}

struct HullPoint {
  ValueRat x;
  ValueRat y;
};

// (b - a) x (c - a); nonnegative means c is not strictly below the line ab.
ValueRat cross(const HullPoint& a, const HullPoint& b, const HullPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Roots read off the upper hull of (degree, value), ascending.
std::vector<ValueRat> hull_roots(const TropPoly& f) {
  std::vector<HullPoint> hull;
  for (const auto& [exp, c] : f.terms()) {
    const HullPoint p{ValueRat(exp[0]), c.value()};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0) hull.pop_back();
    hull.push_back(p);
  }
  std::vector<ValueRat> roots;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    roots.push_back((hull[i].y - hull[i + 1].y) / (hull[i + 1].x - hull[i].x));
  }
  return roots;
}

std::optional<SortSemiring> shared_semiring(const TropPoly& f, const TropPoly& g) {
  auto Lf = f.semiring();
  auto Lg = g.semiring();
  if (Lf && Lg && !(*Lf == *Lg)) {
    throw Error(Errc::MismatchedDescriptor, "polynomials over " + Lf->descriptor() + " and " +
                                                Lg->descriptor());
  }
  return Lf ? Lf : Lg;
}

SortLayer random_layer(const SortSemiring& L, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> extra(0, 3);
  SortLayer layer = L.one();
  for (int i = extra(rng); i > 0; --i) layer = layer_add(L, layer, L.one());
  if (L.is_doubled() && (rng() & 1U) != 0) layer = negation_tau(L, layer);
  return layer;
}

LayeredScalar random_point(const SortSemiring& L, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 19);
  std::uniform_int_distribution<int> halves(-24, 24);
  const int kind = pick(rng);
  if (kind == 0) return LayeredScalar::zero();
  const ValueRat v(halves(rng), 2);
  if (kind < 14) return LayeredScalar::tangible(v, L);
  return LayeredScalar::make(v, random_layer(L, rng), L);
}

std::uint64_t factorial(std::uint32_t k) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 2; i <= k; ++i) {
    if (__builtin_mul_overflow(out, i, &out)) {
      throw Error(Errc::Overflow, std::to_string(k) + "! exceeds 64 bits");
    }
  }
  return out;
}

}  // namespace

TropPoly TropPoly::univariate(const std::vector<LayeredScalar>& coeffs) {
  TropPoly f(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    f.add_term({static_cast<std::uint32_t>(i)}, coeffs[i]);
  }
  return f;
}

TropPoly TropPoly::monomial(const LayeredScalar& coef, Exponent exp) {
  TropPoly f(exp.size());
  f.add_term(exp, coef);
  return f;
}

TropPoly TropPoly::constant(const LayeredScalar& c, std::size_t nvars) {
  return monomial(c, Exponent(nvars, 0));
}

void TropPoly::add_term(const Exponent& exp, const LayeredScalar& c) {
  if (exp.size() != nvars_) {
    throw Error(Errc::ArityMismatch, "exponent of length " + std::to_string(exp.size()) +
                                         " in a polynomial of " + std::to_string(nvars_) +
                                         " variables");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
  }
}

LayeredScalar TropPoly::coeff(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? LayeredScalar::zero() : it->second;
}

LayeredScalar TropPoly::coeff(std::uint32_t degree) const {
  require_univariate(*this);
  return coeff(Exponent{degree});
}

std::uint32_t TropPoly::degree() const {
  require_univariate(*this);
  return terms_.empty() ? 0 : terms_.rbegin()->first[0];
}

bool TropPoly::is_tangible() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& term) { return trop::is_tangible(term.second); });
}

std::optional<SortSemiring> TropPoly::semiring() const {
  for (const auto& [exp, c] : terms_) {
    if (auto L = c.semiring()) return L;
  }
  return std::nullopt;
}

TropPoly poly_add(const TropPoly& f, const TropPoly& g) {
  require_arity(f, g);
  TropPoly out = f;
  for (const auto& [exp, c] : g.terms()) out.add_term(exp, c);
  return out;
}

TropPoly poly_mul(const TropPoly& f, const TropPoly& g) {
  require_arity(f, g);
  TropPoly out(f.nvars());
  Exponent exp(f.nvars());
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) {
      for (std::size_t i = 0; i < exp.size(); ++i) exp[i] = ef[i] + eg[i];
      out.add_term(exp, cf * cg);
    }
  }
  return out;
}

TropPoly poly_pow(const TropPoly& f, unsigned k) {
  TropPoly out = TropPoly::constant(LayeredScalar::unit(), f.nvars());
  if (auto L = f.semiring()) out = TropPoly::constant(LayeredScalar::one(*L), f.nvars());
  for (unsigned i = 0; i < k; ++i) out = out * f;
  return out;
}

LayeredScalar poly_eval(const TropPoly& f, std::span<const LayeredScalar> point) {
  if (point.size() != f.nvars()) {
    throw Error(Errc::ArityMismatch, "point of length " + std::to_string(point.size()) +
                                         " for a polynomial of " + std::to_string(f.nvars()) +
                                         " variables");
  }
  LayeredScalar sum;
  for (const auto& [exp, c] : f.terms()) {
    LayeredScalar term = c;
    for (std::size_t i = 0; i < exp.size(); ++i) term *= power(point[i], exp[i]);
    sum += term;
  }
  return sum;
}

LayeredScalar poly_eval(const TropPoly& f, const LayeredScalar& x) {
  return poly_eval(f, std::span<const LayeredScalar>(&x, 1));
}

bool is_root(const TropPoly& f, std::span<const LayeredScalar> point) {
  return is_ghost_or_zero(poly_eval(f, point));
}

bool is_root(const TropPoly& f, const LayeredScalar& x) { return is_ghost_or_zero(poly_eval(f, x)); }

std::vector<CornerRoot> corner_roots_univariate(const TropPoly& f, bool allow_layered) {
  require_univariate(f);
  if (!allow_layered && !f.is_tangible()) {
    throw Error(Errc::NotTangible, "corner roots need tangible coefficients");
  }
  if (f.size() < 2) throw Error(Errc::NoRoots, "a single monomial has no corner roots");
  const SortSemiring L = *f.semiring();
  std::vector<CornerRoot> out;
  for (const auto& r : hull_roots(f)) {
    out.push_back({r, sort(poly_eval(f, LayeredScalar::tangible(r, L)))});
  }
  return out;
}

TropPoly layered_derivative(const TropPoly& f) {
  require_univariate(f);
  TropPoly out(1);
  for (const auto& [exp, c] : f.terms()) {
    if (exp[0] == 0) continue;
    out.add_term({exp[0] - 1}, nat_multiple(exp[0], c));
  }
  return out;
}

EquivResult func_equiv(const TropPoly& f, const TropPoly& g, std::size_t domain_samples,
                       std::uint64_t seed) {
  require_arity(f, g);
  EquivResult result;
  const auto L = shared_semiring(f, g);
  if (!L) {
    result.exact = true;
    result.equal = f.is_zero() && g.is_zero();
    if (!result.equal) result.counterexample.assign(f.nvars(), LayeredScalar::zero());
    return result;
  }
  auto differs = [&](const std::vector<LayeredScalar>& point) {
    if (poly_eval(f, point) == poly_eval(g, point)) return false;
    result.equal = false;
    result.counterexample = point;
    return true;
  };

  if (f.nvars() == 1 && f.is_tangible() && g.is_tangible()) {
    result.exact = true;
    std::vector<ValueRat> corners;
    for (const auto* p : {&f, &g}) {
      if (p->size() >= 2) {
        auto roots = hull_roots(*p);
        corners.insert(corners.end(), roots.begin(), roots.end());
      }
    }
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    std::vector<ValueRat> probes;
    if (corners.empty()) {
      probes.push_back(0);
    } else {
      probes.push_back(corners.front() - 1);
      for (std::size_t i = 0; i < corners.size(); ++i) {
        probes.push_back(corners[i]);
        if (i + 1 < corners.size()) probes.push_back((corners[i] + corners[i + 1]) / 2);
      }
      probes.push_back(corners.back() + 1);
    }
    if (differs({LayeredScalar::zero()})) return result;
    for (const auto& x : probes) {
      if (differs({LayeredScalar::tangible(x, *L)})) return result;
    }
    return result;
  }

  std::mt19937_64 rng(seed);
  std::vector<LayeredScalar> point(f.nvars());
  for (std::size_t s = 0; s < domain_samples; ++s) {
    for (auto& x : point) x = random_point(*L, rng);
    if (differs(point)) return result;
  }
  return result;
}

LaplaceSeq laplace(const TropPoly& f, std::uint32_t upto) {
  require_univariate(f);
  if (!f.is_zero() && f.degree() > upto) {
    throw Error(Errc::IndexOutOfRange, "laplace length " + std::to_string(upto) +
                                           " is below the degree " + std::to_string(f.degree()));
  }
  if (auto L = f.semiring(); L && !(*L == SortSemiring::naturals())) {
    throw Error(Errc::UnsupportedDescriptor, "laplace transform needs nat, got " + L->descriptor());
  }
  const auto N = SortSemiring::naturals();
  LaplaceSeq out(upto + 1);
  for (std::uint32_t k = 0; k <= upto; ++k) {
    const LayeredScalar a = f.coeff(k);
    if (a.is_zero()) continue;
    out[k] = retag(a, layer_mul(N, SortLayer::fin(factorial(k)), sort(a)));
  }
  return out;
}

LaplaceSeq laplace_derivative(const LaplaceSeq& s) {
  LaplaceSeq out;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const LayeredScalar& a = s[k];
    if (a.is_zero()) {
      out.emplace_back();
      continue;
    }
    if (!(a.semiring() == SortSemiring::naturals())) {
      throw Error(Errc::UnsupportedDescriptor, "laplace derivative needs nat layers");
    }
    const std::uint64_t layer = a.layer().first;
    out.push_back(layer <= 1 ? LayeredScalar::zero() : retag(a, SortLayer::fin(layer - 1)));
  }
  return out;
}

std::string to_string(const TropPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += to_string(it->second);
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      const auto e = it->first[i];
      if (e == 0) continue;
      out += f.nvars() == 1 ? " x" : " x" + std::to_string(i + 1);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace trop
