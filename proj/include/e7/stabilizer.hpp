#pragma once

// Lie algebras of the stabilizers of I and of (f, h) as kernels of exact
// linear systems, and the two membership procedures for 56x56 matrices.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "e7/forms.hpp"
#include "e7/linalg.hpp"
#include "e7/matrix.hpp"
#include "e7/quadrics.hpp"

namespace e7 {

inline constexpr int kNumMatrixUnknowns = kDim * kDim;  // z_{ab} at a * 56 + b
inline constexpr int kNumAux = 5;                        // eps-1, eps'-1, c2, c3, c4

/// Elimination ring for a field: rationals are handled fraction-free over Z.
template <class F>
struct ElimRingOf {
  using type = F;
  static F make(const F& f) { return f; }
};
template <>
struct ElimRingOf<RationalField> {
  using type = IntegerRing;
  static IntegerRing make(const RationalField&) { return {}; }
};

/// The unknowns z_{ab} split by weight difference root(a) - root(b); every
/// constraint used here is homogeneous for that grading, so each block is
/// eliminated independently. Auxiliary unknowns join the zero block.
struct BlockLayout {
  std::vector<int> block;   // per matrix unknown
  std::vector<int> local;   // per matrix unknown
  std::vector<int> size;    // per block, without auxiliaries
  std::vector<std::array<int, kDim>> partner;  // partner[blk][a] = k with (k, a) in blk, or -1
  int zero_block = -1;
  static const BlockLayout& get();
};

struct LieSolveReport {
  std::string ring;
  std::uint32_t p = 0;
  bool extended = false;
  int unknowns = 0;
  int rank = 0;
  int kernel_dim = 0;
  long rows = 0;
};

template <class Ring>
class LieSystem {
 public:
  using T = typename Ring::value_type;

  LieSystem(Ring R, int aux) : R_(R), aux_(aux) {
    const auto& L = BlockLayout::get();
    for (std::size_t b = 0; b < L.size.size(); ++b)
      blocks_.emplace_back(R, L.size[b] + (static_cast<int>(b) == L.zero_block ? aux : 0));
  }

  int unknowns() const { return kNumMatrixUnknowns + aux_; }
  int aux() const { return aux_; }
  const Ring& ring() const { return R_; }

  int block_of(int u) const {
    const auto& L = BlockLayout::get();
    return u < kNumMatrixUnknowns ? L.block[u] : L.zero_block;
  }
  int local_of(int u) const {
    const auto& L = BlockLayout::get();
    return u < kNumMatrixUnknowns ? L.local[u] : L.size[L.zero_block] + (u - kNumMatrixUnknowns);
  }
  bool block_full(int b) const { return blocks_[b].full(); }

  /// Adds sum(coeff * unknown) = 0. All unknowns must share a block.
  void add(const std::vector<std::pair<int, T>>& terms) {
    if (terms.empty()) return;
    const int b = block_of(terms.front().first);
    ++rows_;
    if (blocks_[b].full()) return;
    std::vector<T> v(blocks_[b].width(), R_.from_int(0));
    bool nonzero = false;
    for (const auto& [u, c] : terms) {
      if (block_of(u) != b) throw std::logic_error("LieSystem: row mixes weight blocks");
      v[local_of(u)] += c;
    }
    for (const auto& x : v) nonzero = nonzero || !is_zero(x);
    if (nonzero) blocks_[b].add(std::move(v));
  }

  int rank() const {
    int r = 0;
    for (const auto& e : blocks_) r += e.rank();
    return r;
  }
  long rows() const { return rows_; }
  /// Records a row that was not eliminated because its block has full rank.
  void count_skipped() { ++rows_; }

  /// True when z satisfies every constraint (z indexed like the unknowns).
  bool annihilates(const std::vector<T>& z) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      std::vector<T> loc(blocks_[b].width(), R_.from_int(0));
      for (int u = 0; u < unknowns(); ++u)
        if (block_of(u) == static_cast<int>(b)) loc[local_of(u)] = z[u];
      for (int i = 0; i < blocks_[b].rank(); ++i) {
        T acc = R_.from_int(0);
        const auto& r = blocks_[b].row(i);
        for (std::size_t j = 0; j < r.size(); ++j) acc += r[j] * loc[j];
        if (!is_zero(acc)) return false;
      }
    }
    return true;
  }

  /// True when the relation sum(coeff * unknown) = 0 holds on the whole kernel.
  bool implies(const std::vector<std::pair<int, T>>& terms) const {
    if (terms.empty()) return true;
    const int b = block_of(terms.front().first);
    std::vector<T> v(blocks_[b].width(), R_.from_int(0));
    for (const auto& [u, c] : terms) {
      if (block_of(u) != b) return false;
      v[local_of(u)] += c;
    }
    return blocks_[b].contains(std::move(v));
  }

 private:
  Ring R_;
  int aux_;
  long rows_ = 0;
  std::vector<RowEchelon<Ring>> blocks_;
};

template <class Field>
LieSolveReport make_report(const Field& F, const LieSystem<typename ElimRingOf<Field>::type>& sys, bool extended) {
  LieSolveReport r;
  r.ring = F.tag();
  r.p = F.characteristic();
  r.extended = extended;
  r.unknowns = sys.unknowns();
  r.rank = sys.rank();
  r.kernel_dim = r.unknowns - r.rank;
  r.rows = sys.rows();
  return r;
}

/// Quadric basis over a ring, built once per ring and shared.
template <class Ring>
const QuadricBasis<Ring>& shared_basis(const Ring& R) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<QuadricBasis<Ring>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[R.characteristic()];
  if (!slot) slot = std::make_unique<QuadricBasis<Ring>>(R);
  return *slot;
}

/// Constraints for z with d/dt q((1 + t z) x) in the span of the generators, for all q.
template <class Field>
LieSystem<typename ElimRingOf<Field>::type> build_gi_system(const Field& F) {
  using ER = typename ElimRingOf<Field>::type;
  using T = typename ER::value_type;
  const ER R = ElimRingOf<Field>::make(F);
  const auto& basis = shared_basis(R);
  auto rows = basis.rows();
  std::vector<std::vector<int>> row_nz(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int m = 0; m < kNumMonomials; ++m)
      if (!is_zero(rows[i].second[m])) row_nz[i].push_back(m);

  LieSystem<ER> sys(R, 0);
  for (const auto& g : generators()) {
    std::vector<std::map<int, T>> D(kNumMonomials);
    auto put = [&](int m, int u, long long c) {
      T& slot = D[m][u];
      slot += R.from_int(c);
      if (is_zero(slot)) D[m].erase(u);
    };
    for (const auto& [k, c] : g.form.terms) {
      const int i = k.first, j = k.second;
      for (int a = 0; a < kDim; ++a) {
        put(monomial_index(a, j), i * kDim + a, c);
        put(monomial_index(i, a), j * kDim + a, c);
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& [pivot, vals] = rows[r];
      if (D[pivot].empty()) continue;
      std::map<int, T> lead = D[pivot];
      const T& pv = vals[pivot];
      if (pv != R.from_int(1))
        for (auto& form : D)
          for (auto& [u, c] : form) c *= pv;
      for (int m : row_nz[r])
        for (const auto& [u, c] : lead) {
          T& slot = D[m][u];
          slot -= vals[m] * c;
          if (is_zero(slot)) D[m].erase(u);
        }
    }
    for (const auto& form : D)
      if (!form.empty()) sys.add(std::vector<std::pair<int, T>>(form.begin(), form.end()));
  }
  return sys;
}

template <class Field>
LieSolveReport lie_dim_GI(const Field& F) {
  return make_report(F, build_gi_system(F), false);
}

namespace detail {
struct FhTuple {
  std::array<int, 4> t;
  int block;
};
/// Every basis tuple whose equation can be nonzero, each once, in a fixed order.
const std::vector<FhTuple>& fh_tuples(bool extended);
}  // namespace detail

/// Constraints from f(xu,v,w,z)+...+f(u,v,w,xz) = [(eps-1) f + c2 hh + c3 hh + c4 hh]
/// and h(xu,v)+h(u,xv) = [(eps'-1) h], bracketed terms only when extended.
template <class Field>
LieSystem<typename ElimRingOf<Field>::type> build_fh_system(const Field& F, bool extended) {
  using ER = typename ElimRingOf<Field>::type;
  using T = typename ER::value_type;
  const ER R = ElimRingOf<Field>::make(F);
  const auto& forms = InvariantForms::get();
  const auto& L = BlockLayout::get();
  LieSystem<ER> sys(R, extended ? kNumAux : 0);
  const int eps = kNumMatrixUnknowns, eps_h = eps + 1, c2 = eps + 2, c3 = eps + 3, c4 = eps + 4;

  std::vector<std::pair<int, T>> terms;
  for (const auto& [t, b] : detail::fh_tuples(extended)) {
    if (sys.block_full(b)) {
      sys.count_skipped();
      continue;
    }
    terms.clear();
    for (int q = 0; q < 4; ++q) {
      const int a = t[q];
      const int k = L.partner[b][a];
      if (k < 0) continue;
      auto s = t;
      s[q] = k;
      if (int c = forms.c(s[0], s[1], s[2], s[3])) terms.emplace_back(k * kDim + a, R.from_int(c));
    }
    if (extended) {
      if (int c = forms.c(t[0], t[1], t[2], t[3])) terms.emplace_back(eps, R.from_int(-c));
      if (int v = forms.h(t[0], t[1]) * forms.h(t[2], t[3])) terms.emplace_back(c2, R.from_int(-v));
      if (int v = forms.h(t[0], t[2]) * forms.h(t[1], t[3])) terms.emplace_back(c3, R.from_int(-v));
      if (int v = forms.h(t[0], t[3]) * forms.h(t[1], t[2])) terms.emplace_back(c4, R.from_int(-v));
    }
    if (!terms.empty()) sys.add(terms);
  }
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      terms.clear();
      const int bb = kDim - 1 - b, ab = kDim - 1 - a;
      terms.emplace_back(bb * kDim + a, R.from_int(forms.h(bb, b)));
      terms.emplace_back(ab * kDim + b, R.from_int(forms.h(a, ab)));
      if (extended && forms.h(a, b)) terms.emplace_back(eps_h, R.from_int(-forms.h(a, b)));
      sys.add(terms);
    }
  return sys;
}

template <class Field>
LieSolveReport lie_dim_fh(const Field& F, bool extended) {
  return make_report(F, build_fh_system(F, extended), extended);
}

/// mu_1 = highest weight, then mu_1 - a7, - a6, - a5, - a4, mu_5 - a2, mu_5 - a3, mu_7 - a1.
std::array<WeightIndex, 8> diagonal_relation_weights();

/// The relation z_11 + ... + z_55 - 3 z_66 - 2 z_77 - 2 z_88 on the diagonal entries at those weights.
template <class Ring>
std::vector<std::pair<int, typename Ring::value_type>> diagonal_relation(const Ring& R) {
  static constexpr int kCoeff[8] = {1, 1, 1, 1, 1, -3, -2, -2};
  std::vector<std::pair<int, typename Ring::value_type>> terms;
  auto mu = diagonal_relation_weights();
  for (int i = 0; i < 8; ++i) terms.emplace_back(mu[i].pos() * (kDim + 1), R.from_int(kCoeff[i]));
  return terms;
}

/// The matrix rho(e_gamma) = d/dxi x_gamma(xi) at 0, flattened like the unknowns.
template <class Ring>
std::vector<typename Ring::value_type> root_element(const Ring& R, const Root& gamma, int aux = 0) {
  auto m = root_unipotent(R, gamma, R.from_int(1));
  std::vector<typename Ring::value_type> z(kNumMatrixUnknowns + aux, R.from_int(0));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (i != j) z[i * kDim + j] = m(i, j);
  return z;
}

/// The diagonal matrix of the coroot H_i (i in 0..7) acting on the 56 weights.
template <class Ring>
std::vector<typename Ring::value_type> coroot_element(const Ring& R, int i, int aux = 0) {
  const auto& rs = RootSystem::get();
  std::vector<typename Ring::value_type> z(kNumMatrixUnknowns + aux, R.from_int(0));
  for (WeightIndex w : rs.weights()) z[w.pos() * (kDim + 1)] = R.from_int(StructureTable::get().cartan(rs.root_index_of(w), i));
  return z;
}

}  // namespace e7
