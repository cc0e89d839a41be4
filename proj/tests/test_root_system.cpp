#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "e7/matrix.hpp"
#include "e7/root_system.hpp"

using namespace e7;

namespace {

// E8 in the even-coordinate model, doubled so that every coordinate is an integer.
using Vec8 = std::array<int, 8>;

std::vector<Vec8> even_coordinate_roots() {
  std::vector<Vec8> out;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {-2, 2})
        for (int sj : {-2, 2}) {
          Vec8 v{};
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    Vec8 v;
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    out.push_back(v);
  }
  return out;
}

// Simple roots in the same model (Bourbaki).
std::array<Vec8, 8> simple_roots() {
  return {{{1, -1, -1, -1, -1, -1, -1, 1},
           {2, 2, 0, 0, 0, 0, 0, 0},
           {-2, 2, 0, 0, 0, 0, 0, 0},
           {0, -2, 2, 0, 0, 0, 0, 0},
           {0, 0, -2, 2, 0, 0, 0, 0},
           {0, 0, 0, -2, 2, 0, 0, 0},
           {0, 0, 0, 0, -2, 2, 0, 0},
           {0, 0, 0, 0, 0, -2, 2, 0}}};
}

}  // namespace

TEST_CASE("reflection closure agrees with the even-coordinate model") {
  const auto& rs = RootSystem::get();
  auto model = even_coordinate_roots();
  CHECK(model.size() == 240);
  CHECK(rs.roots().size() == 240);

  RationalField Q;
  Matrix<RationalField> S(Q, 8, 8);  // columns are simple roots
  auto simple = simple_roots();
  for (int k = 0; k < 8; ++k)
    for (int i = 0; i < 8; ++i) S(i, k) = simple[k][i];
  auto Sinv = inverse(S);

  // Gram matrix of the simple roots reproduces the Cartan pairing (doubled model: /4).
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int dot = 0;
      for (int i = 0; i < 8; ++i) dot += simple[a][i] * simple[b][i];
      CHECK(dot == 4 * RootSystem::inner(fundamental_root(a + 1), fundamental_root(b + 1)));
    }

  std::set<Root> from_model;
  for (const auto& v : model) {
    Root r;
    for (int k = 0; k < 8; ++k) {
      Rational c = 0;
      for (int i = 0; i < 8; ++i) c += Sinv(k, i) * v[i];
      REQUIRE(c.get_den() == 1);
      r.c[k] = static_cast<int>(c.get_num().get_si());
    }
    from_model.insert(r);
  }
  std::set<Root> ours(rs.roots().begin(), rs.roots().end());
  CHECK(from_model == ours);
}

TEST_CASE("every root has norm 2 and negatives are roots") {
  const auto& rs = RootSystem::get();
  for (const Root& r : rs.roots()) {
    CHECK(RootSystem::inner(r, r) == 2);
    CHECK(rs.is_root(-r));
  }
}

TEST_CASE("highest root and E7 subsystem") {
  const auto& rs = RootSystem::get();
  CHECK(rs.highest_root().c == std::array<int, 8>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(rs.is_root(-rs.highest_root()));
  auto e7 = rs.e7_roots();
  CHECK(e7.size() == 126);
  for (const Root& a : e7) {
    CHECK(a.grade() == 0);
    CHECK(RootSystem::inner(a, rs.highest_root()) == 0);
    CHECK(rs.is_e7_root(-a));
  }
  CHECK(std::find(e7.begin(), e7.end(), fundamental_root(7)) != e7.end());
}

TEST_CASE("weights, numbering and bar involution") {
  const auto& rs = RootSystem::get();
  auto ws = rs.weights();
  REQUIRE(ws.size() == 56);
  CHECK(rs.root_of(ws.front()).c == std::array<int, 8>{2, 3, 4, 6, 5, 4, 3, 1});
  int count = 0;
  for (const Root& r : rs.roots()) count += r.grade() == 1;
  CHECK(count == 56);
  for (WeightIndex w : ws) {
    CHECK(rs.root_of(w).grade() == 1);
    WeightIndex b = rs.bar(w);
    CHECK(b != w);
    CHECK(rs.bar(b) == w);
    CHECK(rs.root_of(w) + rs.root_of(b) == rs.highest_root());
    CHECK(b.label() == -w.label());
    CHECK(rs.weight_of(rs.root_of(w)) == w);
  }
  CHECK(rs.bar(rs.weight(1)).label() == -1);
  // Heights are non-increasing along the numbering.
  for (std::size_t i = 1; i < ws.size(); ++i) CHECK(rs.root_of(ws[i - 1]).height() >= rs.root_of(ws[i]).height());
  CHECK_THROWS(rs.weight(0));
  CHECK_THROWS(rs.weight(57));
}

TEST_CASE("distance function") {
  const auto& rs = RootSystem::get();
  for (WeightIndex a : rs.weights()) {
    std::map<int, int> hist;
    for (WeightIndex b : rs.weights()) {
      int d = rs.distance(a, b);
      CHECK(d == rs.distance(b, a));
      CHECK(d == 2 - RootSystem::inner(rs.root_of(a), rs.root_of(b)));
      CHECK((d == 0) == (a == b));
      CHECK((d == 3) == (b == rs.bar(a)));
      hist[d]++;
    }
    CHECK(hist[0] == 1);
    CHECK(hist[1] == 27);
    CHECK(hist[2] == 27);
    CHECK(hist[3] == 1);
  }
}

TEST_CASE("maximal squares") {
  const auto& rs = RootSystem::get();
  std::set<std::vector<WeightIndex>> distinct;
  std::map<std::pair<int, int>, int> pair_cover;
  for (const Root& a : rs.e7_roots()) {
    auto sq = rs.maximal_square(a);
    CHECK(sq.members.size() == 12);
    CHECK(sq.pairs.size() == 6);
    for (WeightIndex l : sq.members) CHECK(rs.weight_of(rs.root_of(l) - a).has_value());
    for (auto [l, m] : sq.pairs) {
      CHECK(rs.distance(l, m) == 2);
      CHECK(rs.root_of(l) + rs.root_of(m) == rs.highest_root() + a);
      pair_cover[{l.ordinal(), m.ordinal()}]++;
    }
    auto neg = rs.maximal_square(-a);
    std::set<WeightIndex> bars;
    for (WeightIndex l : sq.members) bars.insert(rs.bar(l));
    CHECK(bars == std::set<WeightIndex>(neg.members.begin(), neg.members.end()));
    for (WeightIndex l : sq.members) CHECK(std::find(neg.members.begin(), neg.members.end(), l) == neg.members.end());
    distinct.insert(sq.members);
  }
  CHECK(distinct.size() == 126);
  // Every orthogonal pair not summing to delta lies in exactly one square.
  int pairs = 0;
  for (WeightIndex a : rs.weights())
    for (WeightIndex b : rs.weights())
      if (a < b && rs.distance(a, b) == 2) {
        ++pairs;
        CHECK(pair_cover[{a.ordinal(), b.ordinal()}] == 1);
      }
  CHECK(pairs == 56 * 27 / 2);
  CHECK_THROWS_AS(rs.maximal_square(rs.highest_root()), std::invalid_argument);
  CHECK_THROWS_AS(rs.maximal_square(Root{}), std::invalid_argument);
}

TEST_CASE("tetrads") {
  const auto& rs = RootSystem::get();
  auto ts = rs.tetrads();
  CHECK(ts.size() == 630);
  Root two_delta = rs.highest_root() + rs.highest_root();
  for (const auto& t : ts) {
    Root s;
    for (int i = 0; i < 4; ++i) {
      s = s + rs.root_of(t[i]);
      for (int j = i + 1; j < 4; ++j) CHECK(rs.distance(t[i], t[j]) == 2);
    }
    CHECK(s == two_delta);
  }
  long ordered = 0;
  auto ws = rs.weights();
  for (WeightIndex a : ws)
    for (WeightIndex b : ws) {
      if (rs.distance(a, b) != 2) continue;
      for (WeightIndex c : ws) {
        if (rs.distance(a, c) != 2 || rs.distance(b, c) != 2) continue;
        for (WeightIndex d : ws)
          if (rs.distance(a, d) == 2 && rs.distance(b, d) == 2 && rs.distance(c, d) == 2) ++ordered;
      }
    }
  CHECK(ordered == 15120);
  CHECK(ordered == 56 * 27 * 10);
}
