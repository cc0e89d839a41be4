#pragma once

// The invariant symplectic form h and four-linear form f on the 56-dim
// module, read off from iterated brackets in the graded E8 algebra.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "e7/chevalley.hpp"
#include "e7/matrix.hpp"
#include "e7/root_system.hpp"

namespace e7 {

/// e_delta coefficient of [[[[e_{-delta}, e_a], e_b], e_c], e_d], straight from brackets.
int coeff_c(WeightIndex a, WeightIndex b, WeightIndex c, WeightIndex d);

struct FourEntry {
  std::array<int, 4> pos;  // zero-based weight positions
  int c;
};

enum class OrbitClass { Zero, Singular, Brilliant, Luminous, Dark };
std::string to_string(OrbitClass c);

/// For each of the 24 argument permutations: +1 if c is invariant, -1 if it
/// changes sign, 0 if neither, over the whole table.
struct PermutationSymmetry {
  std::array<int, 4> perm;
  int behaviour;
};

class InvariantForms {
 public:
  static const InvariantForms& get();

  /// h(e_a, e_b) on zero-based positions; nonzero only for b = bar(a).
  int h(int a, int b) const { return b == kDim - 1 - a ? h_[a] : 0; }
  int h(WeightIndex a, WeightIndex b) const { return h(a.pos(), b.pos()); }

  int c(int a, int b, int cc, int d) const { return dense_[((a * kDim + b) * kDim + cc) * kDim + d]; }
  int c(WeightIndex a, WeightIndex b, WeightIndex cc, WeightIndex d) const { return c(a.pos(), b.pos(), cc.pos(), d.pos()); }

  /// All nonzero c, ordered lexicographically by position.
  const std::vector<FourEntry>& support() const { return support_; }

  template <class Ring>
  Matrix<Ring> h_matrix(const Ring& R) const {
    Matrix<Ring> m(R, kDim, kDim);
    for (int a = 0; a < kDim; ++a) m(a, kDim - 1 - a) = R.from_int(h_[a]);
    return m;
  }

  std::vector<PermutationSymmetry> symmetries() const;

 private:
  InvariantForms();
  std::array<int, kDim> h_{};
  std::vector<std::int8_t> dense_;
  std::vector<FourEntry> support_;
};

template <class T>
void require_dim(const std::vector<T>& v) {
  if (v.size() != static_cast<std::size_t>(kDim)) throw std::invalid_argument("form evaluation: vectors must have 56 entries");
}

template <class Ring>
typename Ring::value_type eval_h(const Ring& R, const std::vector<typename Ring::value_type>& u, const std::vector<typename Ring::value_type>& v) {
  require_dim(u);
  require_dim(v);
  const auto& F = InvariantForms::get();
  auto acc = R.from_int(0);
  for (int a = 0; a < kDim; ++a) {
    int b = kDim - 1 - a;
    if (!is_zero(u[a]) && !is_zero(v[b])) acc += R.from_int(F.h(a, b)) * u[a] * v[b];
  }
  return acc;
}

template <class Ring>
typename Ring::value_type eval_f(const Ring& R, const std::vector<typename Ring::value_type>& u, const std::vector<typename Ring::value_type>& v,
                                 const std::vector<typename Ring::value_type>& w, const std::vector<typename Ring::value_type>& z) {
  require_dim(u);
  require_dim(v);
  require_dim(w);
  require_dim(z);
  auto acc = R.from_int(0);
  for (const auto& e : InvariantForms::get().support()) {
    const auto& p = e.pos;
    if (is_zero(u[p[0]]) || is_zero(v[p[1]]) || is_zero(w[p[2]]) || is_zero(z[p[3]])) continue;
    acc += R.from_int(e.c) * u[p[0]] * v[p[1]] * w[p[2]] * z[p[3]];
  }
  return acc;
}

template <class Ring>
typename Ring::value_type quartic_Q(const Ring& R, const std::vector<typename Ring::value_type>& v) {
  return eval_f(R, v, v, v, v);
}

/// Orbit class of v read off from f itself in the argument order it is
/// defined: f(v,v,x,y) for all x, y, then f(v,v,v,x), then f(v,v,v,v).
template <class Ring>
OrbitClass orbit_class(const Ring& R, const std::vector<typename Ring::value_type>& v) {
  using T = typename Ring::value_type;
  static_assert(Ring::is_field, "orbit_class requires a field");
  const auto ch = R.characteristic();
  if (ch == 2 || ch == 3) throw std::domain_error("orbit_class: characteristic 2 and 3 are not supported");
  require_dim(v);
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || !is_zero(x);
  if (!nonzero) return OrbitClass::Zero;

  std::vector<T> bil(kDim * kDim, R.from_int(0));
  std::vector<T> lin(kDim, R.from_int(0));
  T quart = R.from_int(0);
  for (const auto& e : InvariantForms::get().support()) {
    const auto& p = e.pos;
    T two = R.from_int(e.c) * v[p[0]] * v[p[1]];
    if (is_zero(two)) continue;
    bil[p[2] * kDim + p[3]] += two;
    T three = two * v[p[2]];
    if (is_zero(three)) continue;
    lin[p[3]] += three;
    quart += three * v[p[3]];
  }
  auto all_zero = [](const std::vector<T>& xs) {
    for (const auto& x : xs)
      if (!is_zero(x)) return false;
    return true;
  };
  if (all_zero(bil)) return OrbitClass::Singular;
  if (all_zero(lin)) return OrbitClass::Brilliant;
  if (is_zero(quart)) return OrbitClass::Luminous;
  return OrbitClass::Dark;
}

}  // namespace e7
