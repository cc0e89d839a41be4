#include <doctest.h>

#include "e7/chevalley.hpp"
#include "e7/rep56.hpp"

using namespace e7;

namespace {

using Elem = LieElement<long long>;

Elem basis_element(int k) {
  // 0..239 root vectors, 240..247 coroots
  return k < kNumRoots ? Elem::root_vector(k, 1) : Elem::coroot(k - kNumRoots, 1);
}

}  // namespace

TEST_CASE("structure table passes the exhaustive consistency sweep") {
  auto rep = StructureTable::get().check();
  CHECK(rep.ok());
  CHECK(rep.antisymmetry > 0);
  CHECK(rep.cocycle > 0);
  CHECK(rep.triple > 0);
}

TEST_CASE("antisymmetry and sign values") {
  const auto& rs = RootSystem::get();
  const auto& t = StructureTable::get();
  for (int a = 0; a < kNumRoots; ++a)
    for (int b = 0; b < kNumRoots; ++b) {
      Root s = rs.root(a) + rs.root(b);
      if (rs.is_root(s)) {
        CHECK(t.n(a, b) * t.n(b, a) == -1);
        CHECK(t.sum(a, b) == rs.index_of(s));
      } else {
        CHECK(t.n(a, b) == 0);
        CHECK(t.sum(a, b) == -1);
      }
    }
}

TEST_CASE("bracket basics") {
  const auto& rs = RootSystem::get();
  const int d = rs.highest_index();
  const int md = rs.index_of(-rs.highest_root());
  CHECK(bracket(Elem::root_vector(5, 1), Elem::root_vector(5, 1)).zero());
  auto h = bracket(Elem::root_vector(d, 1), Elem::root_vector(md, 1));
  CHECK(h.roots.empty());
  long long pairing = 0;
  for (const auto& [i, c] : h.cartan) pairing += c * StructureTable::get().cartan(d, i);
  CHECK(pairing == 2);
}

TEST_CASE("Jacobi identity on 1000 random basis triples") {
  Lcg64 g(2024);
  for (int n = 0; n < 1000; ++n) {
    Elem x = basis_element(static_cast<int>(draw(g, 248)));
    Elem y = basis_element(static_cast<int>(draw(g, 248)));
    Elem z = basis_element(static_cast<int>(draw(g, 248)));
    Elem j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    CHECK(j.zero());
  }
}

TEST_CASE("Jacobi identity on triples built from weights and E7 roots") {
  const auto& rs = RootSystem::get();
  auto ws = rs.weights();
  Lcg64 g(7);
  for (int n = 0; n < 500; ++n) {
    int a = rs.root_index_of(ws[draw(g, 56)]);
    int b = rs.e7_root_indices()[draw(g, 126)];
    int c = rs.index_of(-rs.root_of(ws[draw(g, 56)]));
    Elem x = Elem::root_vector(a, 1), y = Elem::root_vector(b, 1), z = Elem::root_vector(c, 1);
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).zero());
  }
}

TEST_CASE("bracket respects the five-step grading") {
  const auto& rs = RootSystem::get();
  for (int a = 0; a < kNumRoots; ++a)
    for (int b = 0; b < kNumRoots; ++b) {
      Elem z = bracket(Elem::root_vector(a, 1), Elem::root_vector(b, 1));
      const int k = rs.root(a).grade() + rs.root(b).grade();
      if (k < -2 || k > 2) CHECK(z.zero());
      for (const auto& [r, c] : z.roots) CHECK(rs.root(r).grade() == k);
      if (!z.cartan.empty()) CHECK(k == 0);
    }
}

TEST_CASE("height components") {
  const auto& rs = RootSystem::get();
  Elem ed = Elem::root_vector(rs.highest_index(), 1);
  CHECK(height_component(ed, 2) == ed);
  CHECK(height_component(ed, 1).zero());
  for (WeightIndex w : rs.weights()) {
    Elem e = Elem::root_vector(rs.root_index_of(w), 1);
    CHECK(height_component(e, 1) == e);
  }
  Elem mix;
  Lcg64 g(3);
  for (int n = 0; n < 30; ++n) mix.add(basis_element(static_cast<int>(draw(g, 248))), static_cast<long long>(draw(g, 5)) - 2);
  Elem sum;
  for (int k = -2; k <= 2; ++k) sum = sum + height_component(mix, k);
  CHECK(sum == mix);
}

TEST_CASE("constants on the 56 weights are units") {
  const auto& rs = RootSystem::get();
  const auto& t = StructureTable::get();
  for (const Root& g : rs.e7_roots())
    for (WeightIndex w : rs.weights()) {
      auto src = rs.weight_of(rs.root_of(w) - g);
      if (!src) continue;
      int n = t.n(g, rs.root_of(*src));
      CHECK((n == 1 || n == -1));
    }
}
