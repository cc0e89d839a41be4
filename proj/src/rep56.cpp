#include "e7/rep56.hpp"

namespace e7 {

namespace {

bool vanishes_mod(const Rational& q, std::uint32_t p) {
  if (p == 0) return q == 0;
  return Integer(q.get_num() % p) == 0 || Integer(q.get_den() % p) == 0;
}

}  // namespace

std::string WordToken::str() const {
  switch (kind) {
    case TokenKind::RootUnipotent: return "x" + root.str() + "[" + to_string(param) + "]";
    case TokenKind::TorusWeight: return "h[" + to_string(param) + "]";
    case TokenKind::WeylElem: return "w" + root.str() + "[" + to_string(param) + "]";
  }
  return "?";
}

std::string to_string(const GroupWord& w) {
  std::string s;
  for (const auto& t : w) {
    if (!s.empty()) s += " ";
    s += t.str();
  }
  return s;
}

GroupWord random_word(std::uint64_t seed, int length, const WordOptions& opts) {
  if (length < 0) throw std::invalid_argument("random_word: negative length");
  const auto& rs = RootSystem::get();
  auto e7 = rs.e7_roots();
  static const long kXi[] = {1, -1, 2, -2, 3, -3};
  static const Rational kEta[] = {Rational(2), Rational(3), Rational(-1), Rational(1, 2), Rational(-2, 3)};
  Lcg64 g(seed);
  GroupWord w;
  while (static_cast<int>(w.size()) < length) {
    std::uint64_t kind = draw(g, 20);
    WordToken tok;
    if (kind < 14 || (!opts.torus && !opts.weyl)) {
      tok.kind = TokenKind::RootUnipotent;
      tok.root = e7[draw(g, e7.size())];
      tok.param = kXi[draw(g, 6)];
    } else if (kind < 17 && opts.weyl) {
      tok.kind = TokenKind::WeylElem;
      tok.root = e7[draw(g, e7.size())];
      tok.param = draw(g, 2) ? 1 : -1;
    } else if (opts.torus) {
      tok.kind = TokenKind::TorusWeight;
      tok.param = kEta[draw(g, 5)];
    } else {
      continue;
    }
    if (vanishes_mod(tok.param, opts.characteristic)) continue;
    w.push_back(tok);
  }
  return w;
}

}  // namespace e7
