#include "e7/quadrics.hpp"

#include <stdexcept>

namespace e7 {

std::pair<int, int> monomial_pair(int index) {
  static const std::vector<std::pair<int, int>> table = [] {
    std::vector<std::pair<int, int>> t;
    for (int i = 0; i < kDim; ++i)
      for (int j = i; j < kDim; ++j) t.emplace_back(i, j);
    return t;
  }();
  return table.at(index);
}

IntForm operator+(const IntForm& a, const IntForm& b) {
  IntForm out = a;
  for (const auto& [k, v] : b.terms) out.add(k.first, k.second, v);
  return out;
}

IntForm operator*(long long k, const IntForm& a) {
  IntForm out;
  if (k == 0) return out;
  for (const auto& [key, v] : a.terms) out.terms.emplace(key, k * v);
  return out;
}

namespace {

const RootSystem& rs() { return RootSystem::get(); }
int N(const Root& a, const Root& b) { return StructureTable::get().n(a, b); }
const Root& root(WeightIndex w) { return rs().root_of(w); }
WeightIndex weight(const Root& r) {
  auto w = rs().weight_of(r);
  if (!w) throw std::logic_error("expected a weight: " + r.str());
  return *w;
}

std::string pair_name(WeightIndex a, WeightIndex b) {
  return "f[" + std::to_string(a.ordinal()) + "," + std::to_string(b.ordinal()) + "]";
}

}  // namespace

IntForm square_equation(WeightIndex rho, WeightIndex sigma) {
  if (rs().distance(rho, sigma) != 2)
    throw std::invalid_argument("square_equation: weights " + std::to_string(rho.ordinal()) + " and " + std::to_string(sigma.ordinal()) +
                                " are not orthogonal");
  const Root alpha = root(rho) + root(sigma) - rs().highest_root();
  MaximalSquare sq = rs().maximal_square(alpha);
  IntForm q;
  q.add(rho.pos(), sigma.pos(), 1);
  for (auto [l, m] : sq.pairs) {
    if ((l == rho && m == sigma) || (l == sigma && m == rho)) continue;
    q.add(l.pos(), m.pos(), -N(root(rho), -root(l)) * N(root(sigma), -root(m)));
  }
  return q;
}

IntForm g_form(const Root& alpha) {
  MaximalSquare sq = rs().maximal_square(alpha);
  IntForm q;
  for (WeightIndex l : sq.members) q.add(l.pos(), rs().bar(l).pos(), N(root(l), root(rs().bar(l))));
  return q;
}

std::pair<WeightIndex, WeightIndex> canonical_pair(const Root& alpha) {
  MaximalSquare sq = rs().maximal_square(alpha);
  return sq.pairs.front();  // pairs are listed by their first member, first < second
}

const std::vector<Generator>& generators() {
  static const std::vector<Generator> gens = [] {
    std::vector<Generator> out;
    for (const Root& a : rs().e7_roots()) {
      auto [r, s] = canonical_pair(a);
      out.push_back({pair_name(r, s), a, true, square_equation(r, s)});
    }
    for (int k = 1; k <= 7; ++k) {
      Root a = fundamental_root(k);
      out.push_back({"g[" + std::to_string(k) + "]", a, false, g_form(a)});
    }
    return out;
  }();
  return gens;
}

IntForm predicted_pullback(const Generator& q, const Root& gamma, long long xi, PullbackRules rules) {
  const int ip = RootSystem::inner(q.alpha, gamma);
  const IntForm& base = q.form;
  if (q.is_square) {
    auto [rho, sigma] = canonical_pair(q.alpha);
    if (ip <= 0) return base;
    if (ip == 1) {
      if (RootSystem::inner(root(rho), gamma) == 1) {
        WeightIndex r2 = weight(root(rho) - gamma);
        return base + (xi * N(gamma, root(r2))) * square_equation(r2, sigma);
      }
      WeightIndex s2 = weight(root(sigma) - gamma);
      return base + (xi * N(gamma, root(s2))) * square_equation(rho, s2);
    }
    // gamma = alpha
    WeightIndex r2 = weight(root(rho) - gamma), s2 = weight(root(sigma) - gamma);
    IntForm out = base + (xi * N(gamma, root(s2)) * N(root(rho), root(s2))) * g_form(q.alpha);
    return out + (xi * xi * N(gamma, root(r2)) * N(gamma, root(s2))) * square_equation(r2, s2);
  }

  if (ip == 0) return base;
  if (ip == -2 && rules == PullbackRules::AsStated) return base;
  if (ip == 2 || ip == -2) {
    // gamma = -alpha is the gamma = alpha rule applied to g_{-alpha} = -g_alpha:
    // the partner coordinates x_{bar l} do move, so g_alpha is not fixed.
    const Root a = ip == 2 ? q.alpha : -q.alpha;
    const long long sign = ip == 2 ? 1 : -1;
    WeightIndex l0 = rs().maximal_square(a).members.front();
    WeightIndex rho = weight(root(l0) - gamma), sigma = rs().bar(l0);
    return base + (sign * 2 * xi * N(root(rho) + gamma, root(sigma)) * N(gamma, root(rho))) * square_equation(rho, sigma);
  }
  // (alpha, gamma) = +-1; for -1 use g_alpha = -g_{-alpha}.
  const Root a = ip == 1 ? q.alpha : -q.alpha;
  const long long sign = ip == 1 ? 1 : -1;
  for (WeightIndex l : rs().maximal_square(a).members) {
    if (RootSystem::inner(root(l), gamma) != 1) continue;
    WeightIndex rho = weight(root(l) - gamma), sigma = rs().bar(l);
    return base + (sign * xi * N(root(rho) + gamma, root(sigma)) * N(gamma, root(rho))) * square_equation(rho, sigma);
  }
  throw std::logic_error("predicted_pullback: empty half-square");
}

InvarianceReport verify_invariance(const Root& gamma, long long xi, InvarianceReport* accumulate) {
  static const QuadricBasis<IntegerRing> basis{IntegerRing{}};
  IntegerRing Z;
  InvarianceReport local;
  InvarianceReport& rep = accumulate ? *accumulate : local;
  auto M = root_unipotent(Z, gamma, Integer(static_cast<long>(xi)));
  for (const auto& g : generators()) {
    ++rep.generators_checked;
    const int ip = RootSystem::inner(g.alpha, gamma);
    (g.is_square ? rep.square_cases : rep.g_cases)[ip]++;
    auto pulled = pullback_dense(g.form, M);
    auto describe = [&](const std::string& what) {
      if (rep.failures.size() < 20)
        rep.failures.push_back(what + ": " + g.name + " under x" + gamma.str() + "(" + std::to_string(xi) + "), case " + std::to_string(ip));
    };
    if (!basis.contains_dense(pulled)) {
      ++rep.span_failures;
      describe("outside span");
    }
    auto expected = dense(Z, lift(Z, predicted_pullback(g, gamma, xi, PullbackRules::Derived)));
    if (expected != pulled) {
      ++rep.identity_failures;
      describe("closed form mismatch");
    }
    auto stated = dense(Z, lift(Z, predicted_pullback(g, gamma, xi, PullbackRules::AsStated)));
    if (stated != pulled) (g.is_square ? rep.stated_square_mismatch : rep.stated_g_mismatch)[ip]++;
  }
  return rep;
}

}  // namespace e7
