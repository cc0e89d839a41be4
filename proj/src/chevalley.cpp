#include "e7/chevalley.hpp"

#include <stdexcept>

namespace e7 {

namespace {

// Simple-root values of the sign pairing: -1 on the diagonal and on
// Dynkin edges i<j, +1 elsewhere.
int simple_sign(int i, int j) {
  if (i == j) return -1;
  if (i < j && RootSystem::inner(fundamental_root(i + 1), fundamental_root(j + 1)) == -1) return -1;
  return 1;
}

int pairing_sign(const Root& a, const Root& b) {
  int parity = 0;
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j)
      if (simple_sign(i, j) < 0) parity += a.c[i] * b.c[j];
  return (parity & 1) ? -1 : 1;
}

int positivity(const Root& r) { return r.height() > 0 ? 1 : -1; }

}  // namespace

const StructureTable& StructureTable::get() {
  static const StructureTable instance;
  return instance;
}

StructureTable::StructureTable()
    : n_(kNumRoots * kNumRoots, 0), sum_(kNumRoots * kNumRoots, -1), neg_(kNumRoots), cartan_(kNumRoots) {
  const auto& rs = RootSystem::get();
  for (int a = 0; a < kNumRoots; ++a) {
    const Root& ra = rs.root(a);
    neg_[a] = rs.index_of(-ra);
    for (int i = 0; i < kRank; ++i) cartan_[a][i] = RootSystem::inner(ra, fundamental_root(i + 1));
    for (int b = 0; b < kNumRoots; ++b) {
      const Root& rb = rs.root(b);
      int s = rs.index_of(ra + rb);
      if (s < 0) continue;
      sum_[a * kNumRoots + b] = static_cast<std::int16_t>(s);
      n_[a * kNumRoots + b] = static_cast<std::int8_t>(pairing_sign(ra, rb) * positivity(ra) * positivity(rb) * positivity(rs.root(s)));
    }
  }
  ConsistencyReport rep = check();
  if (!rep.ok()) throw std::logic_error("structure constants inconsistent: " + rep.violations.front());
}

int StructureTable::n(const Root& a, const Root& b) const {
  const auto& rs = RootSystem::get();
  int ia = rs.index_of(a), ib = rs.index_of(b);
  if (ia < 0 || ib < 0) return 0;
  return n(ia, ib);
}

ConsistencyReport StructureTable::check() const {
  ConsistencyReport rep;
  auto fail = [&](const std::string& what, int a, int b) {
    if (rep.violations.size() < 20) {
      const auto& rs = RootSystem::get();
      rep.violations.push_back(what + " at " + rs.root(a).str() + ", " + rs.root(b).str());
    }
  };
  for (int a = 0; a < kNumRoots; ++a)
    for (int b = 0; b < kNumRoots; ++b) {
      int s = sum(a, b);
      if (s < 0) continue;
      ++rep.antisymmetry;
      if (n(a, b) * n(b, a) != -1) fail("antisymmetry", a, b);
      ++rep.negation;
      int na = negative(a), nb = negative(b);
      if (n(a, b) != n(nb, na) || n(a, b) != -n(na, nb)) fail("negation symmetry", a, b);
      // a + b + c = 0 with c = -(a+b)
      int c = negative(s);
      ++rep.triple;
      if (n(a, b) != n(b, c) || n(a, b) != n(c, a)) fail("triple symmetry", a, b);
      for (int g = 0; g < kNumRoots; ++g) {
        int bg = sum(b, g);
        if (bg < 0 || sum(a, bg) < 0 || sum(s, g) < 0) continue;
        ++rep.cocycle;
        if (n(b, g) * n(a, bg) != n(s, g) * n(a, b)) fail("cocycle", a, b);
      }
    }
  return rep;
}

}  // namespace e7
