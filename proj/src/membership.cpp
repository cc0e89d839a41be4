#include "e7/membership.hpp"

#include <stdexcept>

namespace e7 {

namespace {

G0Tables build_tables() {
  const auto& rs = RootSystem::get();
  const auto& t = StructureTable::get();
  G0Tables g;

  std::vector<int> g0_of_root(kNumRoots, -1);
  {
    int i = 0;
    for (int r : rs.e7_root_indices()) g0_of_root[r] = i++;
    if (i != 126) throw std::logic_error("g0: expected 126 E7 roots");
  }
  const int minus_delta = rs.index_of(-rs.highest_root());

  auto to_g0 = [&](const LieElement<long long>& x) {
    G0Vec out;
    for (const auto& [r, c] : x.roots) {
      if (g0_of_root[r] < 0) throw std::logic_error("g0: component outside degree zero");
      out.emplace_back(g0_of_root[r], static_cast<int>(c));
    }
    for (const auto& [i, c] : x.cartan) out.emplace_back(126 + i, static_cast<int>(c));
    return out;
  };

  g.ycols.resize(kDim);
  for (int a = 0; a < kDim; ++a) {
    auto ea = LieElement<long long>::root_vector(rs.root_index_of(rs.weight(a + 1)), 1);
    auto left = bracket(LieElement<long long>::root_vector(minus_delta, 1), ea);
    for (int b = 0; b < kDim; ++b) {
      auto y = bracket(left, LieElement<long long>::root_vector(rs.root_index_of(rs.weight(b + 1)), 1));
      if (!y.zero()) g.ycols[a].emplace_back(b, to_g0(y));
    }
  }

  g.rho.resize(kG0Dim);
  for (WeightIndex lam : rs.weights()) {
    const Root& l = rs.root_of(lam);
    for (int r : rs.e7_root_indices()) {
      auto dst = rs.weight_of(l + rs.root(r));
      if (dst) g.rho[g0_of_root[r]].push_back({dst->pos(), lam.pos(), t.n(rs.root(r), l)});
    }
    for (int k = 0; k < kRank; ++k)
      if (int p = t.cartan(rs.root_index_of(lam), k)) g.rho[126 + k].push_back({lam.pos(), lam.pos(), p});
  }

  // Root vectors: the first basis pair whose Y is a multiple of e_gamma.
  g.preimage.resize(kG0Dim);
  for (int a = 0; a < kDim; ++a)
    for (const auto& [b, y] : g.ycols[a])
      if (y.size() == 1 && y[0].first < 126 && g.preimage[y[0].first].empty()) g.preimage[y[0].first].push_back({a, b, y[0].second});

  // Cartan part: Y(bar w, w) is a multiple of H_w; these eight w give a unimodular system.
  const std::array<Root, kRank> cartan_roots = {{
      {{0, 0, 0, 0, 0, 0, 0, 1}},
      {{0, 0, 0, 0, 0, 0, 1, 1}},
      {{0, 0, 0, 0, 0, 1, 1, 1}},
      {{0, 0, 0, 0, 1, 1, 1, 1}},
      {{0, 0, 0, 1, 1, 1, 1, 1}},
      {{0, 0, 1, 1, 1, 1, 1, 1}},
      {{0, 1, 0, 1, 1, 1, 1, 1}},
      {{1, 0, 1, 1, 1, 1, 1, 1}},
  }};
  RationalField Q;
  Matrix<RationalField> P(Q, kRank, kRank);
  std::array<std::pair<int, int>, kRank> pairs{};
  for (int k = 0; k < kRank; ++k) {
    auto w = rs.weight_of(cartan_roots[k]);
    if (!w) throw std::logic_error("g0: Cartan seed is not a weight");
    pairs[k] = {rs.bar(*w).pos(), w->pos()};
    for (const auto& [i, c] : g.y(pairs[k].first, pairs[k].second)) P(k, i - 126) = c;
  }
  auto Pinv = inverse(P);
  for (int j = 0; j < kRank; ++j)
    for (int k = 0; k < kRank; ++k) {
      const Rational& x = Pinv(j, k);
      if (x.get_den() != 1) throw std::logic_error("g0: Cartan seeds are not unimodular");
      if (!is_zero(x)) g.preimage[126 + j].push_back({pairs[k].first, pairs[k].second, static_cast<int>(x.get_num().get_si())});
    }
  for (int i = 0; i < kG0Dim; ++i)
    if (g.preimage[i].empty()) throw std::logic_error("g0: basis element without preimage");
  return g;
}

}  // namespace

const G0Tables& G0Tables::get() {
  static const G0Tables tables = build_tables();
  return tables;
}

const G0Vec& G0Tables::y(int a, int b) const {
  static const G0Vec empty;
  for (const auto& [d, v] : ycols[a])
    if (d == b) return v;
  return empty;
}

}  // namespace e7
