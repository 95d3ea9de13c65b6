#include "tropical/value.hpp"

#include <charconv>

#include "tropical/error.hpp"

namespace trop {

std::string format_value(const ValueRat& v) {
  if (v.denominator() == 1) return std::to_string(v.numerator());
  return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(Errc::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

ValueRat parse_value(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ValueRat(parse_int(text, text));
  const auto num = parse_int(text.substr(0, slash), text);
  const auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return ValueRat(num, den);
}

}  // namespace trop
