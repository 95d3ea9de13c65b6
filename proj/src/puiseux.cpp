#include "tropical/puiseux.hpp"

#include <cctype>

#include "tropical/error.hpp"

namespace trop {

namespace {

class SeriesParser {
 public:
  explicit SeriesParser(std::string_view text) : text_(text) {}

  PuiseuxElem parse() {
    PuiseuxElem out;
    skip();
    if (pos_ == text_.size()) fail("empty series");
    bool first = true;
    while (pos_ < text_.size()) {
      ValueRat sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(sign, out);
      skip();
    }
    return out;
  }

 private:
  void parse_term(const ValueRat& sign, PuiseuxElem& out) {
    ValueRat coeff = 1;
    ValueRat exponent = 0;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
      coeff = number();
      have_coeff = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
      } else {
        out.add_term(exponent, sign * coeff);
        return;
      }
    }
    if (peek() != 't') fail(have_coeff ? "expected 't' after '*'" : "expected a number or 't'");
    ++pos_;
    skip();
    exponent = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      if (peek() == '(') {
        ++pos_;
        skip();
        exponent = signed_number();
        skip();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
      } else {
        exponent = signed_number();
      }
    }
    out.add_term(exponent, sign * coeff);
  }

  ValueRat signed_number() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    const ValueRat v = number();
    return negative ? -v : v;
  }

  ValueRat number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
    if (peek() == '/') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return parse_value(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at position " + std::to_string(pos_) + " in '" +
                                      std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PuiseuxElem PuiseuxElem::term(const ValueRat& coeff, const ValueRat& exponent) {
  PuiseuxElem p;
  p.add_term(exponent, coeff);
  return p;
}

void PuiseuxElem::add_term(const ValueRat& exponent, const ValueRat& coeff) {
  if (coeff == ValueRat(0)) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == ValueRat(0)) terms_.erase(it);
}

PuiseuxElem puiseux_add(const PuiseuxElem& p, const PuiseuxElem& q) {
  PuiseuxElem out = p;
  for (const auto& [e, c] : q.terms()) out.add_term(e, c);
  return out;
}

PuiseuxElem puiseux_mul(const PuiseuxElem& p, const PuiseuxElem& q) {
  PuiseuxElem out;
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) out.add_term(ep + eq, cp * cq);
  }
  return out;
}

PuiseuxElem puiseux_neg(const PuiseuxElem& p) {
  PuiseuxElem out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, -c);
  return out;
}

std::optional<ValueRat> order_val(const PuiseuxElem& p) {
  if (p.is_zero()) return std::nullopt;
  return p.terms().begin()->first;
}

ExplodedScalar explode(const PuiseuxElem& p) {
  if (p.is_zero()) return {};
  const auto& [e, c] = *p.terms().begin();
  return ExplodedScalar::make(c, -e);
}

PuiseuxElem parse_puiseux(std::string_view text) { return SeriesParser(text).parse(); }

std::string to_string(const PuiseuxElem& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const ValueRat magnitude = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == ValueRat(0)) {
      out += format_value(magnitude);
      continue;
    }
    if (magnitude != ValueRat(1)) out += format_value(magnitude) + "*";
    out += "t";
    if (e != ValueRat(1)) {
      const std::string shown = format_value(e);
      out += e.denominator() != 1 || e < 0 ? "^(" + shown + ")" : "^" + shown;
    }
  }
  return out;
}

void PuiseuxPoly::add_term(const Exponent& exp, const PuiseuxElem& c) {
  if (exp.size() != nvars) throw Error(Errc::ArityMismatch, "exponent length differs from nvars");
  auto& slot = terms[exp];
  slot = slot + c;
  if (slot.is_zero()) terms.erase(exp);
}

PuiseuxPoly puiseux_poly_mul(const PuiseuxPoly& F, const PuiseuxPoly& G) {
  if (F.nvars != G.nvars) throw Error(Errc::ArityMismatch, "polynomials differ in arity");
  PuiseuxPoly out{F.nvars, {}};
  Exponent exp(F.nvars);
  for (const auto& [ef, cf] : F.terms) {
    for (const auto& [eg, cg] : G.terms) {
      for (std::size_t i = 0; i < exp.size(); ++i) exp[i] = ef[i] + eg[i];
      out.add_term(exp, cf * cg);
    }
  }
  return out;
}

PuiseuxElem puiseux_poly_eval(const PuiseuxPoly& F, const PuiseuxElem& a) {
  if (F.nvars != 1) throw Error(Errc::NotUnivariate, "evaluation needs a univariate polynomial");
  PuiseuxElem sum;
  for (const auto& [exp, c] : F.terms) {
    PuiseuxElem term = c;
    for (std::uint32_t i = 0; i < exp[0]; ++i) term = term * a;
    sum = sum + term;
  }
  return sum;
}

TropPoly tropicalize(const PuiseuxPoly& F, const SortSemiring& L) {
  TropPoly f(F.nvars);
  for (const auto& [exp, c] : F.terms) {
    if (auto v = order_val(c)) f.add_term(exp, LayeredScalar::tangible(-*v, L));
  }
  return f;
}

bool kapranov_forward_check(const PuiseuxPoly& F, const PuiseuxElem& a) {
  const PuiseuxElem value = puiseux_poly_eval(F, a);
  if (!value.is_zero()) {
    throw Error(Errc::NotARoot, "F(a) = " + to_string(value) + " is not zero");
  }
  const auto L = SortSemiring::two_layer();
  const auto v = order_val(a);
  const LayeredScalar point = v ? LayeredScalar::tangible(-*v, L) : LayeredScalar::zero();
  return is_root(tropicalize(F, L), point);
}

}  // namespace trop
