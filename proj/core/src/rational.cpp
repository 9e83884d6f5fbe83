#include "frege/rational.hpp"

#include <cctype>
#include <ostream>

namespace frege {

BigInt floor_int(const Rational& x) {
  const BigInt n = x.num();
  const BigInt d = x.den(); // canonical: d > 0
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

BigInt ceil_int(const Rational& x) { return -floor_int(-x); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::string to_fraction_string(const Rational& x) {
  if (x.is_integer()) return x.num().str();
  return x.num().str() + "/" + x.den().str();
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] { return ValidationError("cannot parse rational: '" + std::string(text) + "'"); };
  std::size_t i = 0;
  const auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (i >= end) throw bad();

  const std::string_view body = text.substr(i, end - i);
  const auto parse_int = [&](std::string_view s) -> BigInt {
    if (s.empty()) throw bad();
    std::size_t p = 0;
    if (s[p] == '+' || s[p] == '-') ++p;
    if (p == s.size()) throw bad();
    for (std::size_t q = p; q < s.size(); ++q)
      if (!std::isdigit(static_cast<unsigned char>(s[q]))) throw bad();
    return BigInt(std::string(s));
  };

  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_int(body.substr(0, slash));
    const BigInt den = parse_int(body.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  }
  if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    bool neg = false;
    if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) {
      neg = ip[0] == '-';
      ip.remove_prefix(1);
    }
    if (ip.empty() && fp.empty()) throw bad();
    BigInt num = ip.empty() ? BigInt(0) : parse_int(ip);
    BigInt den = 1;
    for (char c : fp) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rational r(num, den);
    return neg ? -r : r;
  }
  return Rational(parse_int(body));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << to_fraction_string(x);
}

} // namespace frege
