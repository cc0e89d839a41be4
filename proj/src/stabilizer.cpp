#include "e7/stabilizer.hpp"

#include <algorithm>

namespace e7 {

const BlockLayout& BlockLayout::get() {
  static const BlockLayout layout = [] {
    const auto& rs = RootSystem::get();
    BlockLayout L;
    L.block.assign(kNumMatrixUnknowns, -1);
    L.local.assign(kNumMatrixUnknowns, -1);
    std::map<Root, int> ids;
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b) {
        Root w = rs.root_of(rs.weight(a + 1)) - rs.root_of(rs.weight(b + 1));
        auto [it, fresh] = ids.emplace(w, static_cast<int>(L.size.size()));
        if (fresh) {
          L.size.push_back(0);
          L.partner.emplace_back();
          L.partner.back().fill(-1);
        }
        const int blk = it->second;
        L.block[a * kDim + b] = blk;
        L.local[a * kDim + b] = L.size[blk]++;
        L.partner[blk][b] = a;
      }
    L.zero_block = L.block[0];
    return L;
  }();
  return layout;
}

namespace detail {

namespace {

std::vector<FhTuple> collect_tuples(bool extended) {
  const auto& forms = InvariantForms::get();
  const auto& L = BlockLayout::get();
  std::vector<bool> seen(static_cast<std::size_t>(kDim) * kDim * kDim * kDim, false);
  std::vector<FhTuple> out;
  auto key = [](const std::array<int, 4>& t) { return ((static_cast<std::size_t>(t[0]) * kDim + t[1]) * kDim + t[2]) * kDim + t[3]; };
  auto push = [&](const std::array<int, 4>& t, int block) {
    auto k = key(t);
    if (seen[k]) return;
    seen[k] = true;
    out.push_back({t, block});
  };
  // A term z_{ka} c(.., k, ..) is nonzero only if replacing a by k lands in
  // the support of c, so every relevant tuple is a support entry with one
  // slot changed.
  for (const auto& e : forms.support())
    for (int q = 0; q < 4; ++q)
      for (int a = 0; a < kDim; ++a) {
        auto t = e.pos;
        t[q] = a;
        push(t, L.block[e.pos[q] * kDim + a]);
      }
  if (extended)
    for (int a = 0; a < kDim; ++a)
      for (int c = 0; c < kDim; ++c) {
        const int ab = kDim - 1 - a, cb = kDim - 1 - c;
        push({a, ab, c, cb}, L.zero_block);
        push({a, c, ab, cb}, L.zero_block);
        push({a, c, cb, ab}, L.zero_block);
      }
  std::sort(out.begin(), out.end(), [&](const FhTuple& x, const FhTuple& y) { return key(x.t) < key(y.t); });
  return out;
}

}  // namespace

const std::vector<FhTuple>& fh_tuples(bool extended) {
  static const std::vector<FhTuple> plain = collect_tuples(false);
  static const std::vector<FhTuple> ext = collect_tuples(true);
  return extended ? ext : plain;
}

}  // namespace detail

}  // namespace e7

namespace e7 {

std::array<WeightIndex, 8> diagonal_relation_weights() {
  const auto& rs = RootSystem::get();
  auto step = [&](WeightIndex w, int k) {
    auto r = rs.weight_of(rs.root_of(w) - fundamental_root(k));
    if (!r) throw std::logic_error("diagonal relation: weight chain leaves the weights");
    return *r;
  };
  WeightIndex m1 = rs.weight(1);
  WeightIndex m2 = step(m1, 7), m3 = step(m2, 6), m4 = step(m3, 5), m5 = step(m4, 4);
  WeightIndex m6 = step(m5, 2), m7 = step(m5, 3), m8 = step(m7, 1);
  return {m1, m2, m3, m4, m5, m6, m7, m8};
}

}  // namespace e7
