#include "e7/numeric.hpp"

#include <cctype>

namespace e7 {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Fp& x) { return std::to_string(x.value()); }

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  auto den_text = s.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') throw std::invalid_argument("denominator must be positive: '" + std::string(s) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Fp to_fp(const Rational& x, std::uint32_t p) {
  Integer n = x.get_num() % p;
  Integer d = x.get_den() % p;
  if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
  return Fp(n.get_si(), p) / Fp(d.get_si(), p);
}

}  // namespace e7
