#include "e7/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace e7 {

namespace {

// Cartan matrix of E8, Bourbaki numbering: chain 1-3-4-5-6-7-8, with 2 on 4.
constexpr std::array<std::array<int, kRank>, kRank> kCartan = {{
    {2, 0, -1, 0, 0, 0, 0, 0},
    {0, 2, 0, -1, 0, 0, 0, 0},
    {-1, 0, 2, -1, 0, 0, 0, 0},
    {0, -1, -1, 2, -1, 0, 0, 0},
    {0, 0, 0, -1, 2, -1, 0, 0},
    {0, 0, 0, 0, -1, 2, -1, 0},
    {0, 0, 0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, 0, 0, -1, 2},
}};

unsigned long long key_of(const Root& r) {
  unsigned long long k = 0;
  for (int x : r.c) k = (k << 5) | static_cast<unsigned long long>(x + 16);
  return k;
}

}  // namespace

int Root::height() const {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

Root Root::operator-() const {
  Root r;
  for (int i = 0; i < kRank; ++i) r.c[i] = -c[i];
  return r;
}

Root operator+(const Root& a, const Root& b) {
  Root r;
  for (int i = 0; i < kRank; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

std::string Root::str() const {
  std::string s = "(";
  for (int i = 0; i < kRank; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

Root fundamental_root(int i) {
  if (i < 1 || i > kRank) throw std::out_of_range("fundamental_root: index must be in 1..8");
  Root r;
  r.c[i - 1] = 1;
  return r;
}

int RootSystem::inner(const Root& a, const Root& b) {
  int s = 0;
  for (int i = 0; i < kRank; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < kRank; ++j) s += a.c[i] * kCartan[i][j] * b.c[j];
  }
  return s;
}

const RootSystem& RootSystem::get() {
  static const RootSystem instance;
  return instance;
}

RootSystem::RootSystem() {
  // Orbit of the fundamental roots under the simple reflections.
  std::set<Root> found;
  std::vector<Root> frontier;
  for (int i = 1; i <= kRank; ++i) {
    found.insert(fundamental_root(i));
    frontier.push_back(fundamental_root(i));
  }
  while (!frontier.empty()) {
    Root r = frontier.back();
    frontier.pop_back();
    for (int i = 1; i <= kRank; ++i) {
      Root a = fundamental_root(i);
      int k = inner(r, a);
      Root s = r;
      s.c[i - 1] -= k;
      if (found.insert(s).second) frontier.push_back(s);
    }
  }
  roots_.assign(found.begin(), found.end());
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    return ha != hb ? ha < hb : a < b;
  });
  if (roots_.size() != kNumRoots) throw std::logic_error("E8 closure did not produce 240 roots");

  for (int i = 0; i < kNumRoots; ++i) index_.emplace(key_of(roots_[i]), i);
  highest_ = kNumRoots - 1;

  for (int i = 0; i < kNumRoots; ++i)
    if (roots_[i].grade() == 0) e7_.push_back(i);

  // Weights: alpha_8-height 1, numbered by height descending, then
  // lexicographically ascending on the coefficient vector.
  for (const Root& r : roots_)
    if (r.grade() == 1) weight_roots_.push_back(r);
  std::sort(weight_roots_.begin(), weight_roots_.end(), [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    return ha != hb ? ha > hb : a < b;
  });
  if (weight_roots_.size() != kDim) throw std::logic_error("expected 56 weights");
  const Root& delta = highest_root();
  for (int i = 0; i < kDim; ++i) {
    weight_root_index_.push_back(index_of(weight_roots_[i]));
    if (weight_roots_[kDim - 1 - i] != delta - weight_roots_[i])
      throw std::logic_error("weight numbering is not bar-symmetric");
  }
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      int ip = inner(weight_roots_[i], weight_roots_[j]);
      distance_[i][j] = 2 - ip;  // 2 -> 0, 1 -> 1, 0 -> 2, -1 -> 3
    }
}

int RootSystem::index_of(const Root& r) const {
  for (int x : r.c)
    if (x < -15 || x > 15) return -1;
  auto it = index_.find(key_of(r));
  return it == index_.end() ? -1 : it->second;
}

std::vector<Root> RootSystem::e7_roots() const {
  std::vector<Root> out;
  out.reserve(e7_.size());
  for (int i : e7_) out.push_back(roots_[i]);
  return out;
}

std::vector<WeightIndex> RootSystem::weights() const {
  std::vector<WeightIndex> out;
  for (int o = 1; o <= kDim; ++o) out.push_back(WeightIndex(o));
  return out;
}

WeightIndex RootSystem::weight(int ordinal) const {
  if (ordinal < 1 || ordinal > kDim) throw std::out_of_range("weight ordinal must be in 1..56, got " + std::to_string(ordinal));
  return WeightIndex(ordinal);
}

std::optional<WeightIndex> RootSystem::weight_of(const Root& r) const {
  if (r.grade() != 1) return std::nullopt;
  auto it = std::lower_bound(weight_roots_.begin(), weight_roots_.end(), r, [](const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    return ha != hb ? ha > hb : a < b;
  });
  if (it == weight_roots_.end() || *it != r) return std::nullopt;
  return WeightIndex(static_cast<int>(it - weight_roots_.begin()) + 1);
}

MaximalSquare RootSystem::maximal_square(const Root& alpha) const {
  if (!is_e7_root(alpha)) throw std::invalid_argument("maximal_square: " + alpha.str() + " is not an E7 root");
  MaximalSquare sq;
  sq.alpha = alpha;
  for (int i = 0; i < kDim; ++i)
    if (weight_of(weight_roots_[i] - alpha)) sq.members.push_back(WeightIndex(i + 1));
  const Root target = highest_root() + alpha;
  for (WeightIndex w : sq.members) {
    auto partner = weight_of(target - root_of(w));
    if (!partner) throw std::logic_error("maximal square without orthogonal partner");
    if (w < *partner) sq.pairs.emplace_back(w, *partner);
  }
  return sq;
}

std::vector<Tetrad> RootSystem::tetrads() const {
  std::vector<Tetrad> out;
  for (int a = 0; a < kDim; ++a)
    for (int b = a + 1; b < kDim; ++b) {
      if (distance_[a][b] != 2) continue;
      for (int c = b + 1; c < kDim; ++c) {
        if (distance_[a][c] != 2 || distance_[b][c] != 2) continue;
        for (int d = c + 1; d < kDim; ++d)
          if (distance_[a][d] == 2 && distance_[b][d] == 2 && distance_[c][d] == 2)
            out.push_back({WeightIndex(a + 1), WeightIndex(b + 1), WeightIndex(c + 1), WeightIndex(d + 1)});
      }
    }
  return out;
}

}  // namespace e7
