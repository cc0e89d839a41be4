#include <doctest.h>

#include "e7/membership.hpp"
#include "e7/stabilizer.hpp"
#include "e7/suites.hpp"

using namespace e7;

namespace {

const RootSystem& rs() { return RootSystem::get(); }

// Probabilistic oracle: f(Mu, Mv, Mw, Mz) = eps f(u, v, w, z) on random vectors.
template <class Field>
std::optional<typename Field::value_type> f_multiplier(const Matrix<Field>& M, std::uint64_t seed, int trials) {
  using T = typename Field::value_type;
  const Field& F = M.ring();
  Lcg64 g(seed);
  auto rnd = [&] {
    std::vector<T> v(kDim);
    for (auto& x : v) x = F.from_int(static_cast<long long>(draw(g, 7)) - 3);
    return v;
  };
  std::optional<T> eps;
  for (int t = 0; t < trials; ++t) {
    auto u = rnd(), v = rnd(), w = rnd(), z = rnd();
    T before = eval_f(F, u, v, w, z);
    T after = eval_f(F, M.apply(u), M.apply(v), M.apply(w), M.apply(z));
    if (is_zero(before)) {
      if (!is_zero(after)) return std::nullopt;
      continue;
    }
    T e = after / before;
    if (eps && *eps != e) return std::nullopt;
    eps = e;
  }
  return eps;
}

template <class Field>
Matrix<Field> transvection(const Field& F) {
  // x -> x + h(v, x) v with v = e_1 + e_6 preserves h but not f.
  const auto& forms = InvariantForms::get();
  auto T = Matrix<Field>::identity(F, kDim);
  const int v[] = {0, 5};
  for (int i : v)
    for (int j = 0; j < kDim; ++j)
      for (int k : v)
        if (forms.h(k, j)) T(i, j) += F.from_int(forms.h(k, j));
  return T;
}

}  // namespace

TEST_CASE("Lie algebra dimensions over F_2 and F_5") {
  for (long p : {2L, 5L}) {
    CAPTURE(p);
    PrimeField F(p);
    CHECK(lie_dim_GI(F).kernel_dim == 134);
    CHECK(lie_dim_fh(F, false).kernel_dim == 133);
    CHECK(lie_dim_fh(F, true).kernel_dim == 134);
  }
}

TEST_CASE("Lie algebra dimensions over Q") {
  RationalField Q;
  CHECK(lie_dim_GI(Q).kernel_dim == 134);
  auto fh = lie_dim_fh(Q, false);
  CHECK(fh.kernel_dim == 133);
  CHECK(fh.unknowns == kDim * kDim);
  auto ext = lie_dim_fh(Q, true);
  CHECK(ext.kernel_dim == 134);
  CHECK(ext.unknowns == kDim * kDim + kNumAux);
}

TEST_CASE("kernel contents") {
  PrimeField F(7);
  auto gi = build_gi_system(F);
  auto fh = build_fh_system(F, false);
  auto ext = build_fh_system(F, true);
  for (const Root& gamma : rs().e7_roots()) {
    CHECK(gi.annihilates(root_element(F, gamma)));
    CHECK(fh.annihilates(root_element(F, gamma)));
    CHECK(ext.annihilates(root_element(F, gamma, kNumAux)));
  }
  for (int i = 0; i < 7; ++i) {
    CHECK(gi.annihilates(coroot_element(F, i)));
    CHECK(fh.annihilates(coroot_element(F, i)));
  }
  // The identity lies in the extended algebras only.
  auto id = coroot_element(F, 0);
  for (auto& x : id) x = F.from_int(0);
  for (int a = 0; a < kDim; ++a) id[a * (kDim + 1)] = F.from_int(1);
  CHECK(gi.annihilates(id));
  CHECK_FALSE(fh.annihilates(id));

  // Entries between bar partners (distance 3) vanish on every solution.
  for (int a = 0; a < kDim; ++a) {
    const int b = kDim - 1 - a;
    CHECK(gi.implies({{a * kDim + b, F.from_int(1)}}));
    CHECK(fh.implies({{a * kDim + b, F.from_int(1)}}));
  }
  CHECK(fh.implies(diagonal_relation(F)));
  CHECK_FALSE(gi.implies(diagonal_relation(F)));
  CHECK_FALSE(fh.implies({{0, F.from_int(1)}}));
}

TEST_CASE("membership of group elements") {
  PrimeField F7(7);
  RationalField Q;
  auto I = Matrix<PrimeField>::identity(F7, kDim);
  auto v = membership_forms(I);
  CHECK(v.member);
  CHECK(*v.eps_h == F7.from_int(1));
  CHECK(membership_GI(I).member);

  WordOptions opts;
  opts.characteristic = 7;
  for (std::uint64_t s = 1; s <= 3; ++s) {
    auto M = evaluate_word(F7, random_word(s, 12, opts));
    auto f = membership_forms(M);
    CHECK(f.member);
    CHECK(membership_GI(M).member);
    auto oracle = f_multiplier(M, s, 6);
    REQUIRE(oracle);
    CHECK(*oracle == *f.eps_f);
    CHECK(*f.eps_f == *f.eps_h * *f.eps_h);
  }

  for (long e : {2L, 3L}) {
    auto vq = membership_forms(torus_weight(Q, Rational(e)));
    REQUIRE(vq.member);
    CHECK(*vq.eps_h == Rational(1, e));
    CHECK(*vq.eps_f == Rational(1, e * e));
  }
  for (const Root& gamma : {rs().e7_roots()[0], rs().e7_roots()[100]}) {
    auto vq = membership_forms(root_unipotent(Q, gamma, Rational(5, 2)));
    REQUIRE(vq.member);
    CHECK(*vq.eps_h == 1);
    CHECK(*vq.eps_f == 1);
    CHECK(membership_GI(root_unipotent(Q, gamma, Rational(-1, 3))).member);
  }
}

TEST_CASE("rejections carry a witness") {
  RationalField Q;
  PrimeField F7(7);
  auto d = near_miss(Q);
  auto gi = membership_GI(d);
  CHECK_FALSE(gi.member);
  CHECK(gi.witness_name.size() > 0);
  CHECK(gi.witness_detail.size() > 0);
  auto fo = membership_forms(d);
  CHECK_FALSE(fo.member);
  CHECK(fo.witness_name == "h");

  auto T = transvection(F7);
  auto ft = membership_forms(T);
  CHECK_FALSE(ft.member);
  CHECK(ft.witness_name == "f");
  CHECK_FALSE(membership_GI(T).member);
  CHECK_FALSE(f_multiplier(T, 9, 6).has_value());

  CHECK_THROWS_AS(membership_forms(Matrix<RationalField>(Q, kDim, kDim)), std::domain_error);
  CHECK_THROWS_AS(membership_GI(Matrix<PrimeField>(F7, kDim, kDim)), std::domain_error);
  CHECK_THROWS_AS(membership_GI(Matrix<PrimeField>(F7, 3, 3)), std::invalid_argument);
}

TEST_CASE("cross check on random invertible matrices") {
  PrimeField F7(7);
  std::vector<std::pair<std::string, Matrix<PrimeField>>> ms;
  for (std::uint64_t s = 0; s < 4; ++s) ms.emplace_back("random " + std::to_string(s), random_invertible(F7, s));
  WordOptions opts;
  opts.characteristic = 7;
  ms.emplace_back("word", evaluate_word(F7, random_word(42, 10, opts)));
  auto rep = cross_check(ms);
  CHECK(rep.ok());
  CHECK(rep.accepted == 1);
  CHECK(rep.rejected == 4);
}
