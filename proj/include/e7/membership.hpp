#pragma once

// Membership of a 56x56 matrix in the stabilizer of the quadric ideal and in
// the similitude group of (f, h).
//
// The forms test avoids the 56^4 quadruples. Writing Y(u,v) = [[e_{-delta},u],v]
// in g_0, one has f(u,v,w,z) = h(rho(Y(u,v)) w, z), so once h(Mu,Mv) = eps_h h(u,v)
// the f condition becomes: the bilinear map Y(M.,M.) factors as Phi o Y with
// rho(Phi(t)) M = c M rho(t) for every t in g_0; then eps_f = c eps_h.

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "e7/forms.hpp"
#include "e7/matrix.hpp"
#include "e7/quadrics.hpp"
#include "e7/stabilizer.hpp"

namespace e7 {

inline constexpr int kG0Dim = 134;  // 126 E7 root vectors, then H_1..H_8

/// Sparse integer element of g_0 in the coordinates above.
using G0Vec = std::vector<std::pair<int, int>>;

struct G0Tables {
  /// Y(e_a, e_b) for zero-based positions; ycols[a] lists the b with Y != 0.
  std::vector<std::vector<std::pair<int, G0Vec>>> ycols;
  /// rho(t_i) as (row, col, coefficient) triples on V.
  std::vector<std::vector<std::array<int, 3>>> rho;
  /// t_i = sum over (a, b, k) of k Y(e_a, e_b).
  std::vector<std::vector<std::array<int, 3>>> preimage;
  static const G0Tables& get();
  const G0Vec& y(int a, int b) const;
};

template <class S>
struct MembershipVerdict {
  bool member = false;
  std::optional<S> eps_h;
  std::optional<S> eps_f;
  std::string witness_name;    // failing generator or check
  std::string witness_detail;  // remainder or offending entry
};

template <class S>
std::string format_form(const QuadraticForm<S>& q, std::size_t max_terms = 12) {
  std::ostringstream os;
  std::size_t n = 0;
  for (const auto& [k, c] : q.terms) {
    if (n == max_terms) {
      os << " + ... (" << q.terms.size() << " terms)";
      break;
    }
    if (n++) os << " + ";
    os << "(" << to_string(c) << ")*x" << k.first + 1 << "*x" << k.second + 1;
  }
  if (!n) os << "0";
  return os.str();
}

namespace detail {

/// The matrix over the elimination ring plus the factor D with elim = D * M.
template <class Field>
struct Scaled {
  Matrix<typename ElimRingOf<Field>::type> m;
  Integer factor = 1;
};

template <class Field>
Scaled<Field> scale_to_elim(const Matrix<Field>& M) {
  if (M.rows() != kDim || M.cols() != kDim) throw std::invalid_argument("membership: matrix must be 56x56");
  if constexpr (std::is_same_v<Field, RationalField>) {
    Integer d = 1;
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), M(i, j).get_den_mpz_t());
    Scaled<Field> s{Matrix<IntegerRing>(IntegerRing{}, kDim, kDim), d};
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) s.m(i, j) = M(i, j).get_num() * (d / M(i, j).get_den());
    return s;
  } else {
    return {M, 1};
  }
}

template <class Field>
typename Field::value_type from_elim(const Field& F, const typename ElimRingOf<Field>::type::value_type& x, const Integer& divisor) {
  if constexpr (std::is_same_v<Field, RationalField>) return Rational(x) / Rational(divisor);
  else return F.from_integer(divisor) == F.from_int(1) ? x : x / F.from_integer(divisor);
}

template <class Ring>
void require_invertible(const Matrix<Ring>& m) {
  if (is_zero(determinant(m))) throw std::domain_error("membership: matrix is singular");
}

}  // namespace detail

/// Member iff every generator pulls back into the span of the 133 generators.
template <class Field>
MembershipVerdict<typename Field::value_type> membership_GI(const Matrix<Field>& M) {
  using ER = typename ElimRingOf<Field>::type;
  const Field& F = M.ring();
  auto sc = detail::scale_to_elim(M);
  detail::require_invertible(sc.m);
  const auto& basis = shared_basis(ER(sc.m.ring()));
  MembershipVerdict<typename Field::value_type> v;
  for (const auto& g : generators()) {
    auto red = basis.reduce_dense(pullback_dense(g.form, sc.m));
    if (red.remainder.zero()) continue;
    // q(Nx) = D^2 q(Mx), and scale * q(Nx) = combination + remainder.
    QuadraticForm<typename Field::value_type> rem;
    Integer div = sc.factor * sc.factor;
    if constexpr (std::is_same_v<Field, RationalField>) div *= red.scale;
    for (const auto& [k, c] : red.remainder.terms) rem.terms.emplace(k, detail::from_elim(F, c, div));
    v.witness_name = g.name;
    v.witness_detail = "remainder " + format_form(rem);
    return v;
  }
  v.member = true;
  return v;
}

/// Member iff h(Mu,Mv) = eps_h h(u,v) and f(Mu,Mv,Mw,Mz) = eps_f f(u,v,w,z).
template <class Field>
MembershipVerdict<typename Field::value_type> membership_forms(const Matrix<Field>& M) {
  using ER = typename ElimRingOf<Field>::type;
  using T = typename ER::value_type;
  const Field& F = M.ring();
  auto sc = detail::scale_to_elim(M);
  const auto& N = sc.m;
  const ER& R = N.ring();
  detail::require_invertible(N);
  const auto& forms = InvariantForms::get();
  const auto& G = G0Tables::get();
  MembershipVerdict<typename Field::value_type> v;
  const T zero = R.from_int(0);

  // h similarity: N^T H N = eps H.
  auto H = forms.h_matrix(R);
  auto Hp = N.transpose() * (H * N);
  const T eh = Hp(0, kDim - 1) * R.from_int(forms.h(0, kDim - 1));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (Hp(i, j) != eh * H(i, j)) {
        v.witness_name = "h";
        v.witness_detail = "h(M e" + std::to_string(i + 1) + ", M e" + std::to_string(j + 1) + ") = " + to_string(Hp(i, j)) +
                           " is not " + to_string(eh) + " * " + to_string(H(i, j));
        return v;
      }

  // Nonzero pattern of N by column.
  std::vector<std::vector<int>> colnz(kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (!is_zero(N(i, j))) colnz[j].push_back(i);

  // Stage one: Z[c][b] = Y(e_c, N e_b); stage two: Y(N e_a, N e_b) = sum_c N_ca Z[c][b].
  std::vector<std::vector<T>> Z(kDim * kDim);
  for (int c = 0; c < kDim; ++c)
    for (const auto& [d, y] : G.ycols[c])
      for (int b = 0; b < kDim; ++b) {
        const T& ndb = N(d, b);
        if (is_zero(ndb)) continue;
        auto& z = Z[c * kDim + b];
        if (z.empty()) z.assign(kG0Dim, zero);
        for (const auto& [i, k] : y) z[i] += R.from_int(k) * ndb;
      }
  auto pulled = [&](int a, int b) {
    std::vector<T> out(kG0Dim, zero);
    for (int c : colnz[a]) {
      const auto& z = Z[c * kDim + b];
      if (z.empty()) continue;
      const T& nca = N(c, a);
      for (int i = 0; i < kG0Dim; ++i)
        if (!is_zero(z[i])) out[i] += nca * z[i];
    }
    return out;
  };

  // Phi(t_i) from the preimages of the basis.
  std::vector<std::vector<T>> phi(kG0Dim, std::vector<T>(kG0Dim, zero));
  for (int i = 0; i < kG0Dim; ++i)
    for (const auto& [a, b, k] : G.preimage[i]) {
      auto y = pulled(a, b);
      for (int j = 0; j < kG0Dim; ++j)
        if (!is_zero(y[j])) phi[i][j] += R.from_int(k) * y[j];
    }

  // Factorization: Y(N e_a, N e_b) = Phi(Y(e_a, e_b)) for every basis pair.
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      auto y = pulled(a, b);
      for (const auto& [i, k] : G.y(a, b))
        for (int j = 0; j < kG0Dim; ++j)
          if (!is_zero(phi[i][j])) y[j] -= R.from_int(k) * phi[i][j];
      for (int j = 0; j < kG0Dim; ++j)
        if (!is_zero(y[j])) {
          v.witness_name = "f";
          v.witness_detail = "Y(M e" + std::to_string(a + 1) + ", M e" + std::to_string(b + 1) + ") leaves the image of g_0 at coordinate " +
                             std::to_string(j);
          return v;
        }
    }

  // Intertwining: rho(Phi(t_i)) N = c N rho(t_i), c = num / den.
  auto lhs = [&](int i) {
    Matrix<ER> out(R, kDim, kDim);
    for (int j = 0; j < kG0Dim; ++j) {
      if (is_zero(phi[i][j])) continue;
      for (const auto& [r, s, k] : G.rho[j]) {
        T w = R.from_int(k) * phi[i][j];
        for (int x = 0; x < kDim; ++x)
          if (!is_zero(N(s, x))) out(r, x) += w * N(s, x);
      }
    }
    return out;
  };
  auto rhs = [&](int i) {
    Matrix<ER> out(R, kDim, kDim);
    for (const auto& [r, s, k] : G.rho[i])
      for (int x = 0; x < kDim; ++x)
        if (!is_zero(N(x, r))) out(x, s) += R.from_int(k) * N(x, r);
    return out;
  };
  std::optional<T> num, den;
  for (int i = 0; i < kG0Dim; ++i) {
    auto l = lhs(i), r = rhs(i);
    if (!den)
      for (int x = 0; x < kDim && !den; ++x)
        for (int y = 0; y < kDim && !den; ++y)
          if (!is_zero(r(x, y))) {
            den = r(x, y);
            num = l(x, y);
          }
    if (!den || is_zero(*num) || !(l.scaled(*den) == r.scaled(*num))) {
      v.witness_name = "f";
      v.witness_detail = "g_0 basis element " + std::to_string(i) + " is not carried to a multiple of its conjugate";
      return v;
    }
  }

  // eps values of M itself: eps_h(N) = D^2 eps_h(M), eps_f(N) = D^4 eps_f(M).
  const Integer d2 = sc.factor * sc.factor;
  if constexpr (std::is_same_v<Field, RationalField>) {
    Rational eh_m = Rational(eh) / Rational(d2);
    Rational ef_m = Rational(eh) * Rational(*num) / Rational(*den) / Rational(d2 * d2);
    v.eps_h = eh_m;
    v.eps_f = ef_m;
  } else {
    (void)F;
    v.eps_h = eh;
    v.eps_f = eh * (*num) / (*den);
  }
  if (*v.eps_f != *v.eps_h * *v.eps_h) throw std::logic_error("membership_forms: eps_f differs from eps_h^2");
  v.member = true;
  return v;
}

template <class S>
struct CrossCheckEntry {
  std::string label;
  MembershipVerdict<S> ideal;
  MembershipVerdict<S> forms;
  bool agree() const { return ideal.member == forms.member; }
};

template <class S>
struct CrossCheckReport {
  std::vector<CrossCheckEntry<S>> entries;
  int accepted = 0;
  int rejected = 0;
  int disagreements = 0;
  bool ok() const { return disagreements == 0; }
};

template <class Field>
CrossCheckReport<typename Field::value_type> cross_check(const std::vector<std::pair<std::string, Matrix<Field>>>& ms) {
  CrossCheckReport<typename Field::value_type> rep;
  for (const auto& [label, M] : ms) {
    CrossCheckEntry<typename Field::value_type> e{label, membership_GI(M), membership_forms(M)};
    if (!e.agree()) ++rep.disagreements;
    else if (e.ideal.member) ++rep.accepted;
    else ++rep.rejected;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace e7
