#include <doctest.h>

#include "e7/quadrics.hpp"

using namespace e7;

namespace {

const RootSystem& rs() { return RootSystem::get(); }

}  // namespace

TEST_CASE("monomial indexing") {
  CHECK(monomial_index(0, 0) == 0);
  CHECK(monomial_index(kDim - 1, kDim - 1) == kNumMonomials - 1);
  for (int m = 0; m < kNumMonomials; m += 37) {
    auto [i, j] = monomial_pair(m);
    CHECK(i <= j);
    CHECK(monomial_index(i, j) == m);
    CHECK(monomial_index(j, i) == m);
  }
}

TEST_CASE("square equations") {
  const auto& gens = generators();
  REQUIRE(gens.size() == kNumGenerators);
  for (int k = 0; k < 126; ++k) {
    const auto& g = gens[k];
    CHECK(g.is_square);
    CHECK(g.form.size() == 6);
    auto [r, s] = canonical_pair(g.alpha);
    CHECK(g.form.coeff(r.pos(), s.pos()) == 1);
    for (const auto& [key, c] : g.form.terms) {
      CHECK(std::abs(c) == 1);
      CHECK(key.first != key.second);
      CHECK(rs().distance(rs().weight(key.first + 1), rs().weight(key.second + 1)) == 2);
    }
  }
  // Any orthogonal pair in the square gives the same quadric up to sign.
  const Root& a = gens[17].alpha;
  auto sq = rs().maximal_square(a);
  for (auto [l, m] : sq.pairs) {
    IntForm q = square_equation(l, m);
    CHECK((q == gens[17].form || q == -gens[17].form));
  }
  WeightIndex w = rs().weight(1);
  CHECK_THROWS_AS(square_equation(w, w), std::invalid_argument);
  CHECK_THROWS_AS(square_equation(w, rs().bar(w)), std::invalid_argument);
}

TEST_CASE("g forms are additive and odd") {
  auto roots = rs().e7_roots();
  for (const Root& a : roots) {
    IntForm g = g_form(a);
    CHECK(g.size() == 12);
    CHECK(g_form(-a) == -g);
    for (const auto& [key, c] : g.terms) {
      CHECK(std::abs(c) == 1);
      CHECK(rs().bar(rs().weight(key.first + 1)).pos() == key.second);
    }
  }
  int sums = 0;
  for (std::size_t i = 0; i < roots.size(); i += 3)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      Root s = roots[i] + roots[j];
      if (!rs().is_e7_root(s)) continue;
      CHECK(g_form(s) == g_form(roots[i]) + g_form(roots[j]));
      ++sums;
    }
  CHECK(sums > 100);
}

TEST_CASE("generators have no square monomials") {
  for (const auto& g : generators())
    for (const auto& [key, c] : g.form.terms) CHECK(key.first != key.second);
}

TEST_CASE("generator rank is 133 over Q and small primes") {
  CHECK(QuadricBasis<RationalField>(RationalField{}).rank() == kNumGenerators);
  CHECK(QuadricBasis<IntegerRing>(IntegerRing{}).rank() == kNumGenerators);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    CAPTURE(p);
    CHECK(QuadricBasis<PrimeField>(PrimeField(p)).rank() == kNumGenerators);
  }
}

TEST_CASE("span membership and reduction") {
  RationalField Q;
  QuadricBasis<RationalField> basis(Q);
  for (const Root& a : rs().e7_roots()) CHECK(basis.contains_dense(dense(Q, lift(Q, g_form(a)))));
  const auto& gens = generators();
  for (int k = 0; k < kNumGenerators; k += 11) {
    auto red = basis.reduce(lift(Q, gens[k].form));
    CHECK(red.remainder.zero());
    for (int j = 0; j < kNumGenerators; ++j) CHECK(red.coords[j] == (j == k ? 1 : 0));
  }
  CHECK(basis.reduce(QuadraticForm<Rational>{}).remainder.zero());
  QuadraticForm<Rational> sq;
  sq.add(5, 5, Rational(1));
  auto red = basis.reduce(sq);
  CHECK_FALSE(red.remainder.zero());

  // Integer reduction: scale * q = sum coords * gen + remainder.
  IntegerRing Z;
  QuadricBasis<IntegerRing> zb(Z);
  IntForm mix = 3 * gens[2].form + (-5) * gens[130].form;
  auto zr = zb.reduce(lift(Z, mix));
  CHECK(zr.remainder.zero());
  std::vector<Integer> acc(kNumMonomials, 0);
  for (int j = 0; j < kNumGenerators; ++j)
    for (const auto& [key, c] : gens[j].form.terms) acc[monomial_index(key.first, key.second)] += zr.coords[j] * static_cast<long>(c);
  auto want = dense(Z, lift(Z, mix));
  for (auto& x : want) x *= zr.scale;
  CHECK(acc == want);
}

TEST_CASE("pullback is contravariant") {
  RationalField Q;
  auto roots = rs().e7_roots();
  auto A = root_unipotent(Q, roots[3], Rational(2));
  auto B = root_unipotent(Q, roots[90], Rational(-1));
  auto I = Matrix<RationalField>::identity(Q, kDim);
  for (int k : {0, 50, 127}) {
    auto q = lift(Q, generators()[k].form);
    CHECK(pullback(q, I) == q);
    CHECK(pullback(pullback(q, A), B) == pullback(q, A * B));
  }
  CHECK_THROWS_AS(pullback(lift(Q, generators()[0].form), Matrix<RationalField>(Q, 3, 3)), std::invalid_argument);
}

TEST_CASE("closed-form transformation rules") {
  auto roots = rs().e7_roots();
  InvarianceReport rep;
  for (std::size_t i = 0; i < roots.size(); i += 9)
    for (long long xi : {1LL, -1LL, 2LL, 3LL}) verify_invariance(roots[i], xi, &rep);
  // The g generators need gamma = +-alpha_k to reach the extreme cases.
  for (int k = 1; k <= 7; k += 3)
    for (const Root& g : {fundamental_root(k), -fundamental_root(k)}) verify_invariance(g, 2, &rep);
  CHECK(rep.ok());
  for (const auto& f : rep.failures) MESSAGE(f);
  // Every case of both families is exercised.
  for (int ip : {-2, -1, 0, 1, 2}) {
    CHECK(rep.square_cases[ip] > 0);
    CHECK(rep.g_cases[ip] > 0);
  }
  // The literal reading of the rules fails only for g_alpha under x_{-alpha}.
  CHECK(rep.stated_square_mismatch.empty());
  CHECK(rep.stated_g_mismatch.size() == 1);
  CHECK(rep.stated_g_mismatch.count(-2) == 1);
}

TEST_CASE("generators vanish on a basis vector") {
  PrimeField F5(5);
  for (int i = 0; i < kDim; ++i) {
    std::vector<Fp> e(kDim, F5.from_int(0));
    e[i] = F5.from_int(1);
    for (const auto& g : generators()) CHECK(is_zero(evaluate(F5, g.form, e)));
  }
}
