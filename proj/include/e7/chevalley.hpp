#pragma once

// Structure constants of the E8 Chevalley basis and bracket evaluation in
// the 5-graded algebra g_{-2} + g_{-1} + g_0 + g_1 + g_2.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "e7/numeric.hpp"
#include "e7/root_system.hpp"

namespace e7 {

struct ConsistencyReport {
  long antisymmetry = 0;   // pairs checked
  long negation = 0;       // N_{ab} = N_{-b,-a} = -N_{-a,-b}
  long triple = 0;         // a+b+c = 0 triples
  long cocycle = 0;        // quadruples of defined constants
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// N_{ab} for every ordered root pair; [e_a, e_{-a}] = H_a, [H_i, e_b] = (b, a_i) e_b.
/// Signs come from the bimultiplicative pairing on simple roots, rescaled so
/// that the positive and negative root vectors bracket to the coroot.
class StructureTable {
 public:
  static const StructureTable& get();

  /// Indices are positions in RootSystem::roots(); 0 when a+b is not a root.
  int n(int a, int b) const { return n_[a * kNumRoots + b]; }
  int n(const Root& a, const Root& b) const;
  /// Index of a+b, or -1 when it is not a root.
  int sum(int a, int b) const { return sum_[a * kNumRoots + b]; }
  int negative(int a) const { return neg_[a]; }
  /// <b, alpha_i^vee>, i in 0..7.
  int cartan(int b, int i) const { return cartan_[b][i]; }

  ConsistencyReport check() const;

 private:
  StructureTable();
  std::vector<std::int8_t> n_;
  std::vector<std::int16_t> sum_;
  std::vector<int> neg_;
  std::vector<std::array<int, kRank>> cartan_;
};

/// Sparse element of the E8 Lie algebra: root vectors keyed by root index,
/// Cartan part over the simple coroots H_1..H_8 keyed 0..7.
template <class S>
struct LieElement {
  std::map<int, S> roots;
  std::map<int, S> cartan;

  static LieElement root_vector(int index, S coeff) {
    LieElement x;
    if (!is_zero(coeff)) x.roots.emplace(index, coeff);
    return x;
  }
  static LieElement coroot(int i, S coeff) {
    LieElement x;
    if (!is_zero(coeff)) x.cartan.emplace(i, coeff);
    return x;
  }

  bool zero() const { return roots.empty() && cartan.empty(); }

  LieElement& add(const LieElement& o, const S& scale) {
    accumulate(roots, o.roots, scale);
    accumulate(cartan, o.cartan, scale);
    return *this;
  }
  friend LieElement operator+(LieElement a, const LieElement& b) { return a.add(b, S(1)); }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a.add(b, S(-1)); }
  friend bool operator==(const LieElement&, const LieElement&) = default;

  /// Coefficient of e_index (zero if absent).
  S coeff(int index) const {
    auto it = roots.find(index);
    return it == roots.end() ? S(0) : it->second;
  }

 private:
  static void accumulate(std::map<int, S>& into, const std::map<int, S>& from, const S& scale) {
    for (const auto& [k, v] : from) {
      S& slot = into[k];
      slot += scale * v;
      if (is_zero(slot)) into.erase(k);
    }
  }
};

namespace detail {
template <class S>
void add_term(std::map<int, S>& m, int k, const S& v) {
  if (is_zero(v)) return;
  S& slot = m[k];
  slot += v;
  if (is_zero(slot)) m.erase(k);
}
}  // namespace detail

template <class S>
LieElement<S> bracket(const LieElement<S>& x, const LieElement<S>& y) {
  const auto& rs = RootSystem::get();
  const auto& t = StructureTable::get();
  LieElement<S> out;
  for (const auto& [a, ca] : x.roots) {
    for (const auto& [b, cb] : y.roots) {
      if (t.negative(a) == b) {
        const Root& r = rs.root(a);
        for (int i = 0; i < kRank; ++i)
          if (r.c[i]) detail::add_term(out.cartan, i, S(r.c[i]) * ca * cb);
      } else if (int s = t.sum(a, b); s >= 0) {
        detail::add_term(out.roots, s, S(t.n(a, b)) * ca * cb);
      }
    }
    for (const auto& [i, hi] : y.cartan)
      if (int p = t.cartan(a, i)) detail::add_term(out.roots, a, S(-p) * ca * hi);
  }
  for (const auto& [i, hi] : x.cartan)
    for (const auto& [b, cb] : y.roots)
      if (int p = t.cartan(b, i)) detail::add_term(out.roots, b, S(p) * hi * cb);
  return out;
}

/// Projection onto the alpha_8-height k summand (k = 0 keeps the Cartan part).
template <class S>
LieElement<S> height_component(const LieElement<S>& x, int k) {
  const auto& rs = RootSystem::get();
  LieElement<S> out;
  for (const auto& [a, c] : x.roots)
    if (rs.root(a).grade() == k) out.roots.emplace(a, c);
  if (k == 0) out.cartan = x.cartan;
  return out;
}

}  // namespace e7
