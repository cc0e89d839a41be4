#include <doctest.h>

#include <map>

#include "e7/rep56.hpp"

using namespace e7;

namespace {

const RationalField Q;
const PrimeField F5(5);

template <class Ring>
Matrix<Ring> commutator(const Matrix<Ring>& a, const Matrix<Ring>& b) {
  return a * b * inverse(a) * inverse(b);
}

Root reflect(const Root& beta, const Root& alpha) {
  Root r = beta;
  const int k = RootSystem::inner(beta, alpha);
  for (int i = 0; i < kRank; ++i) r.c[i] -= k * alpha.c[i];
  return r;
}

}  // namespace

TEST_CASE("root unipotents") {
  const auto& rs = RootSystem::get();
  for (const Root& g : rs.e7_roots()) {
    auto x = root_unipotent(Q, g, Rational(3));
    CHECK(x.off_diagonal_nonzeros() == 12);
    CHECK(x.off_diagonal_nonzeros() == static_cast<int>(rs.maximal_square(g).members.size()));
    CHECK(determinant(x) == 1);
    auto nil = x - Matrix<RationalField>::identity(Q, kDim);
    CHECK((nil * nil) == Matrix<RationalField>(Q, kDim, kDim));
    CHECK(root_unipotent(Q, g, Rational(0)).is_identity());
    CHECK(root_unipotent(Q, g, Rational(2)) * root_unipotent(Q, g, Rational(-5, 3)) == root_unipotent(Q, g, Rational(1, 3)));
  }
  CHECK_THROWS_AS(root_unipotent(Q, rs.highest_root(), Rational(1)), std::invalid_argument);
}

TEST_CASE("Chevalley commutator formula at the microweight") {
  const auto& rs = RootSystem::get();
  const auto& t = StructureTable::get();
  auto roots = rs.e7_roots();
  Lcg64 g(99);
  int with_sum = 0, without = 0;
  for (int n = 0; n < 400; ++n) {
    const Root& a = roots[draw(g, roots.size())];
    const Root& b = roots[draw(g, roots.size())];
    if (a + b == Root{}) continue;
    auto c = commutator(root_unipotent(Q, a, Rational(2)), root_unipotent(Q, b, Rational(3)));
    if (rs.is_root(a + b)) {
      ++with_sum;
      // [x_a(s), x_b(u)] = x_{a+b}(N_ab s u), all higher terms vanish in E7.
      CHECK(c == root_unipotent(Q, a + b, Rational(6 * t.n(a, b))));
    } else {
      ++without;
      CHECK(c.is_identity());
    }
  }
  CHECK(with_sum > 0);
  CHECK(without > 0);
}

TEST_CASE("torus weight elements") {
  const auto& rs = RootSystem::get();
  CHECK(torus_weight(Q, Rational(1)).is_identity());
  for (long e : {2L, 3L, -5L}) {
    Rational eta(e);
    CHECK(determinant(torus_weight(Q, eta)) == signed_power(Q, eta, -28));
  }
  // Exponents of h(eta^-1): -1 once, 0 and 1 each 27 times, 2 once.
  std::map<int, int> hist;
  for (WeightIndex w : rs.weights()) hist[-torus_exponent(w)]++;
  CHECK(hist == std::map<int, int>{{-1, 1}, {0, 27}, {1, 27}, {2, 1}});
  CHECK(torus_exponent(rs.weight(1)) == 1);
  CHECK_THROWS_AS(torus_weight(IntegerRing{}, Integer(2)), std::domain_error);
  CHECK_THROWS_AS(torus_weight(F5, F5.from_int(0)), std::domain_error);
  CHECK_FALSE(torus_weight(IntegerRing{}, Integer(-1)).is_identity());
}

TEST_CASE("Weyl elements") {
  const auto& rs = RootSystem::get();
  auto roots = rs.e7_roots();
  for (const Root& a : roots) {
    auto w = weyl_element(Q, a, Rational(1));
    for (int i = 0; i < kDim; ++i) {
      int row = 0, col = 0;
      for (int j = 0; j < kDim; ++j) {
        row += !is_zero(w(i, j));
        col += !is_zero(w(j, i));
      }
      CHECK(row == 1);
      CHECK(col == 1);
    }
    CHECK(power(w, 4).is_identity());
  }
  Lcg64 g(5);
  for (int n = 0; n < 60; ++n) {
    const Root& a = roots[draw(g, roots.size())];
    const Root& b = roots[draw(g, roots.size())];
    auto w = weyl_element(Q, a, Rational(1));
    auto conj = w * root_unipotent(Q, b, Rational(2)) * inverse(w);
    Root sb = reflect(b, a);
    bool plus = conj == root_unipotent(Q, sb, Rational(2));
    bool minus = conj == root_unipotent(Q, sb, Rational(-2));
    CHECK((plus || minus));
  }
  auto w = weyl_element(Q, roots[0], Rational(-2, 3));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const Rational& x = w(i, j);
      if (is_zero(x)) continue;
      bool ok = abs(x) == 1 || abs(x) == Rational(2, 3) || abs(x) == Rational(3, 2);
      CHECK(ok);
    }
  CHECK_THROWS_AS(weyl_element(Q, roots[0], Rational(0)), std::domain_error);
}

TEST_CASE("group words") {
  CHECK(evaluate_word(Q, {}).is_identity());
  const Root a = fundamental_root(3);
  GroupWord back{{TokenKind::RootUnipotent, a, 1}, {TokenKind::RootUnipotent, a, -1}};
  CHECK(evaluate_word(Q, back).is_identity());

  CHECK(random_word(42, 0).empty());
  CHECK(random_word(42, 30) == random_word(42, 30));
  CHECK(random_word(42, 30) != random_word(43, 30));
  CHECK(to_string(random_word(7, 5)) == to_string(random_word(7, 5)));

  // Determinant over Q: only torus tokens contribute, as eta^-28.
  for (std::uint64_t s = 1; s <= 5; ++s) {
    auto w = random_word(s, 12);
    Rational expect = 1;
    for (const auto& tok : w)
      if (tok.kind == TokenKind::TorusWeight) expect *= signed_power(Q, tok.param, -28);
    CHECK(determinant(evaluate_word(Q, w)) == expect);
  }

  WordOptions opts;
  opts.characteristic = 5;
  auto m = evaluate_word(F5, random_word(11, 50, opts));
  CHECK(!is_zero(determinant(m)));

  // apply_word agrees with the evaluated product.
  std::vector<Fp> v(kDim);
  Lcg64 g(1);
  for (auto& x : v) x = F5.from_int(static_cast<long long>(draw(g, 5)));
  auto w = random_word(12, 25, opts);
  CHECK(apply_word(F5, w, v) == evaluate_word(F5, w).apply(v));
}

TEST_CASE("matrix entries of generators over the integers") {
  IntegerRing Z;
  for (const Root& g : RootSystem::get().e7_roots()) {
    auto x = root_unipotent(Z, g, Integer(5));
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) {
        const Integer& e = x(i, j);
        bool ok = e == 0 || (i == j && e == 1) || (i != j && (e == 5 || e == -5));
        CHECK(ok);
      }
  }
}
