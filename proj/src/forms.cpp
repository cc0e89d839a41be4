#include "e7/forms.hpp"

#include <algorithm>

namespace e7 {

namespace {

using Elem = LieElement<long long>;

Elem weight_vector(WeightIndex w) { return Elem::root_vector(RootSystem::get().root_index_of(w), 1); }

Elem lowest_vector() {
  const auto& rs = RootSystem::get();
  return Elem::root_vector(StructureTable::get().negative(rs.highest_index()), 1);
}

}  // namespace

int coeff_c(WeightIndex a, WeightIndex b, WeightIndex c, WeightIndex d) {
  Elem x = bracket(bracket(bracket(bracket(lowest_vector(), weight_vector(a)), weight_vector(b)), weight_vector(c)), weight_vector(d));
  return static_cast<int>(x.coeff(RootSystem::get().highest_index()));
}

std::string to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::Zero: return "zero";
    case OrbitClass::Singular: return "singular";
    case OrbitClass::Brilliant: return "brilliant";
    case OrbitClass::Luminous: return "luminous";
    case OrbitClass::Dark: return "dark";
  }
  return "?";
}

const InvariantForms& InvariantForms::get() {
  static const InvariantForms instance;
  return instance;
}

InvariantForms::InvariantForms() : dense_(static_cast<std::size_t>(kDim) * kDim * kDim * kDim, 0) {
  const auto& rs = RootSystem::get();
  const int top = rs.highest_index();
  auto ws = rs.weights();

  for (WeightIndex a : ws) {
    Elem x = bracket(weight_vector(a), weight_vector(rs.bar(a)));
    h_[a.pos()] = static_cast<int>(x.coeff(top));
  }

  // Share the bracket prefixes; the third partial bracket is always a single
  // root vector of height 1, which fixes the last argument.
  for (WeightIndex a : ws) {
    Elem x1 = bracket(lowest_vector(), weight_vector(a));
    for (WeightIndex b : ws) {
      Elem x2 = bracket(x1, weight_vector(b));
      if (x2.zero()) continue;
      for (WeightIndex c : ws) {
        Elem x3 = bracket(x2, weight_vector(c));
        for (const auto& [idx, coeff] : x3.roots) {
          (void)coeff;
          auto d = rs.weight_of(rs.highest_root() - rs.root(idx));
          if (!d) continue;
          Elem x4 = bracket(x3, weight_vector(*d));
          int v = static_cast<int>(x4.coeff(top));
          if (v == 0) continue;
          dense_[((a.pos() * kDim + b.pos()) * kDim + c.pos()) * kDim + d->pos()] = static_cast<std::int8_t>(v);
          support_.push_back({{a.pos(), b.pos(), c.pos(), d->pos()}, v});
        }
      }
    }
  }
  std::sort(support_.begin(), support_.end(), [](const FourEntry& x, const FourEntry& y) { return x.pos < y.pos; });
}

std::vector<PermutationSymmetry> InvariantForms::symmetries() const {
  std::vector<PermutationSymmetry> out;
  std::array<int, 4> perm = {0, 1, 2, 3};
  do {
    bool sym = true, anti = true;
    for (const auto& e : support_) {
      std::array<int, 4> q;
      for (int k = 0; k < 4; ++k) q[k] = e.pos[perm[k]];
      int v = c(q[0], q[1], q[2], q[3]);
      sym = sym && v == e.c;
      anti = anti && v == -e.c;
      if (!sym && !anti) break;
    }
    out.push_back({perm, sym ? 1 : (anti ? -1 : 0)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace e7
