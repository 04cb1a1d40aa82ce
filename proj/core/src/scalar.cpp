#include "equiform/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace equiform {

namespace {

bool is_signed_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_signed_integer(num)) return std::nullopt;
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(mpz_class(strip_plus(num)));
    return r;
  }
  const std::string_view den = text.substr(slash + 1);
  if (den.empty() || den[0] == '-' || den[0] == '+' || !is_signed_integer(den)) return std::nullopt;
  const mpz_class d{std::string(den)};
  if (d == 0) return std::nullopt;
  r = Rational(mpz_class(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

std::string ScalarTraits<double>::to_string(double x) { return format_double(x); }

}  // namespace equiform
