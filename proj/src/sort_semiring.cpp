#include "tropical/sort_semiring.hpp"

#include <algorithm>
#include <charconv>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropical/error.hpp"

namespace trop {

namespace {

using Component = std::uint64_t;

std::string component_string(Component c) {
  return c == kInfLayer ? std::string("inf") : std::to_string(c);
}

bool component_valid(SortKind kind, std::uint64_t q, Component c) {
  switch (kind) {
    case SortKind::Trivial: return c <= 1;
    case SortKind::TwoLayer: return c <= 1 || c == kInfLayer;
    case SortKind::Naturals: return c != kInfLayer;
    case SortKind::Truncated: return c <= q;
  }
  return false;
}

Component checked_add(Component a, Component b) {
  Component out = 0;
  if (__builtin_add_overflow(a, b, &out) || out == kInfLayer) {
    throw Error(Errc::Overflow, "layer addition overflows 64 bits");
  }
  return out;
}

Component checked_mul(Component a, Component b) {
  Component out = 0;
  if (__builtin_mul_overflow(a, b, &out) || out == kInfLayer) {
    throw Error(Errc::Overflow, "layer multiplication overflows 64 bits");
  }
  return out;
}

Component add_component(SortKind kind, std::uint64_t q, Component a, Component b) {
  if (a == 0) return b;
  if (b == 0) return a;
  switch (kind) {
    case SortKind::Trivial: return 1;
    case SortKind::TwoLayer: return kInfLayer;
    case SortKind::Naturals: return checked_add(a, b);
    case SortKind::Truncated: return (a >= q || b >= q || a + b >= q) ? q : a + b;
  }
  return 0;
}

Component mul_component(SortKind kind, std::uint64_t q, Component a, Component b) {
  if (a == 0 || b == 0) return 0;
  switch (kind) {
    case SortKind::Trivial: return 1;
    case SortKind::TwoLayer: return (a == kInfLayer || b == kInfLayer) ? kInfLayer : 1;
    case SortKind::Naturals: return checked_mul(a, b);
    case SortKind::Truncated: {
      Component out = 0;
      if (__builtin_mul_overflow(a, b, &out) || out >= q) return q;
      return out;
    }
  }
  return 0;
}

// Components g with a + g == target; complete for upward-closed predicates.
std::vector<Component> component_summands(SortKind kind, std::uint64_t q, Component base,
                                           Component target) {
  std::vector<Component> out;
  auto try_candidate = [&](Component g) {
    if (component_valid(kind, q, g) && add_component(kind, q, base, g) == target &&
        std::find(out.begin(), out.end(), g) == out.end()) {
      out.push_back(g);
    }
  };
  switch (kind) {
    case SortKind::Trivial:
      try_candidate(0);
      try_candidate(1);
      break;
    case SortKind::TwoLayer:
      try_candidate(0);
      try_candidate(1);
      try_candidate(kInfLayer);
      break;
    case SortKind::Naturals:
      if (target >= base) try_candidate(target - base);
      break;
    case SortKind::Truncated:
      if (target < q) {
        if (target >= base) try_candidate(target - base);
      } else {
        const Component lo = base >= q ? 0 : q - base;
        try_candidate(lo);
        try_candidate(std::min<Component>(lo + 1, q));
        try_candidate(q);
      }
      break;
  }
  return out;
}

void require_contains(const SortSemiring& L, const SortLayer& k) {
  if (!L.contains(k)) {
    throw Error(Errc::MismatchedDescriptor,
                "layer " + to_string(k) + " is not an element of " + L.descriptor());
  }
}

}  // namespace

std::string to_string(const SortLayer& layer) {
  if (layer.paired) {
    return "(" + component_string(layer.first) + "," + component_string(layer.second) + ")";
  }
  return component_string(layer.first);
}

SortSemiring SortSemiring::truncated(std::uint64_t q) {
  if (q < 2 || q == kInfLayer) {
    throw Error(Errc::UnsupportedDescriptor, "truncation bound must be at least 2");
  }
  return {SortKind::Truncated, q, false};
}

SortSemiring SortSemiring::doubled(const SortSemiring& inner) {
  if (inner.doubled_) {
    throw Error(Errc::UnsupportedDescriptor, "nested doubling is not supported");
  }
  return {inner.kind_, inner.q_, true};
}

SortSemiring SortSemiring::parse(std::string_view text) {
  if (text == "trivial") return trivial();
  if (text == "super") return two_layer();
  if (text == "nat") return naturals();
  if (text.starts_with("trunc:")) {
    auto digits = text.substr(6);
    std::uint64_t q = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error(Errc::ParseError, "bad truncation bound in '" + std::string(text) + "'");
    }
    return truncated(q);
  }
  if (text.starts_with("doubled:")) return doubled(parse(text.substr(8)));
  throw Error(Errc::ParseError, "unknown semiring descriptor '" + std::string(text) + "'");
}

std::string SortSemiring::descriptor() const {
  std::string base_name;
  switch (kind_) {
    case SortKind::Trivial: base_name = "trivial"; break;
    case SortKind::TwoLayer: base_name = "super"; break;
    case SortKind::Naturals: base_name = "nat"; break;
    case SortKind::Truncated: base_name = "trunc:" + std::to_string(q_); break;
  }
  return doubled_ ? "doubled:" + base_name : base_name;
}

bool SortSemiring::contains(const SortLayer& layer) const noexcept {
  if (layer.paired != doubled_) return false;
  if (!component_valid(kind_, q_, layer.first)) return false;
  return !doubled_ || component_valid(kind_, q_, layer.second);
}

bool SortSemiring::valid_nonzero(const SortLayer& layer) const noexcept {
  return contains(layer) && !(layer == zero());
}

SortLayer SortSemiring::zero() const noexcept {
  return doubled_ ? SortLayer::pair(0, 0) : SortLayer::fin(0);
}

SortLayer SortSemiring::one() const noexcept {
  return doubled_ ? SortLayer::pair(1, 0) : SortLayer::fin(1);
}

bool SortSemiring::is_tangible_layer(const SortLayer& layer) const noexcept {
  if (doubled_) return layer == SortLayer::pair(1, 0) || layer == SortLayer::pair(0, 1);
  return layer == SortLayer::fin(1);
}

bool SortSemiring::ties_are_ghost() const noexcept { return kind_ != SortKind::Trivial; }

SortLayer layer_add(const SortSemiring& L, const SortLayer& k, const SortLayer& l) {
  require_contains(L, k);
  require_contains(L, l);
  const auto kind = L.kind();
  const auto q = L.q();
  if (!L.is_doubled()) return SortLayer::fin(add_component(kind, q, k.first, l.first));
  return SortLayer::pair(add_component(kind, q, k.first, l.first),
                         add_component(kind, q, k.second, l.second));
}

SortLayer layer_mul(const SortSemiring& L, const SortLayer& k, const SortLayer& l) {
  require_contains(L, k);
  require_contains(L, l);
  const auto kind = L.kind();
  const auto q = L.q();
  if (!L.is_doubled()) return SortLayer::fin(mul_component(kind, q, k.first, l.first));
  auto mul = [&](Component a, Component b) { return mul_component(kind, q, a, b); };
  auto add = [&](Component a, Component b) { return add_component(kind, q, a, b); };
  return SortLayer::pair(add(mul(k.first, l.first), mul(k.second, l.second)),
                         add(mul(k.first, l.second), mul(k.second, l.first)));
}

bool layer_leq(const SortSemiring& L, const SortLayer& k, const SortLayer& l) {
  require_contains(L, k);
  require_contains(L, l);
  if (!L.is_doubled()) return k.first <= l.first;
  return k.first <= l.first && k.second <= l.second;
}

SortLayer negation_tau(const SortSemiring& L, const SortLayer& k) {
  if (!L.is_doubled()) {
    throw Error(Errc::NotDoubled, "negation map needs a doubled descriptor, got " + L.descriptor());
  }
  require_contains(L, k);
  return SortLayer::pair(k.second, k.first);
}

SortLayer layer_scale(const SortSemiring& L, std::uint64_t n, const SortLayer& k) {
  require_contains(L, k);
  SortLayer result = L.zero();
  SortLayer addend = k;
  while (n != 0) {
    if ((n & 1U) != 0) result = layer_add(L, result, addend);
    n >>= 1U;
    if (n != 0) addend = layer_add(L, addend, addend);
  }
  return result;
}

std::vector<SortLayer> summand_candidates(const SortSemiring& L, const SortLayer& base,
                                          const SortLayer& target) {
  require_contains(L, base);
  require_contains(L, target);
  const auto kind = L.kind();
  const auto q = L.q();
  std::vector<SortLayer> out;
  if (!L.is_doubled()) {
    for (auto g : component_summands(kind, q, base.first, target.first)) {
      if (g != 0) out.push_back(SortLayer::fin(g));
    }
    return out;
  }
  const auto firsts = component_summands(kind, q, base.first, target.first);
  const auto seconds = component_summands(kind, q, base.second, target.second);
  for (auto a : firsts) {
    for (auto b : seconds) {
      if (a != 0 || b != 0) out.push_back(SortLayer::pair(a, b));
    }
  }
  return out;
}

std::pair<ValueRat, std::uint64_t> exp_maxtimes(const ValueRat& a) {
  using boost::multiprecision::cpp_rational;
  if (a <= 0) throw Error(Errc::NonPositive, "exp_maxtimes needs a > 0, got " + format_value(a));
  const cpp_rational base(a.numerator(), a.denominator());
  cpp_rational term = 1;
  cpp_rational best = 1;
  std::uint64_t count = 1;
  for (std::uint64_t k = 1;; ++k) {
    term = term * base / k;
    if (term > best) {
      best = term;
      count = 1;
    } else if (term == best) {
      ++count;
    } else if (cpp_rational(k) > base) {
      break;
    }
  }
  const auto num = boost::multiprecision::numerator(best);
  const auto den = boost::multiprecision::denominator(best);
  if (num > std::numeric_limits<std::int64_t>::max() || den > std::numeric_limits<std::int64_t>::max()) {
    throw Error(Errc::Overflow, "exp_maxtimes result exceeds 64-bit rationals");
  }
  return {ValueRat(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)), count};
}

}  // namespace trop
