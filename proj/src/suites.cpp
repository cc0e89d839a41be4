#include "e7/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "e7/forms.hpp"
#include "e7/membership.hpp"
#include "e7/quadrics.hpp"
#include "e7/rep56.hpp"
#include "e7/stabilizer.hpp"

namespace e7 {

namespace {

constexpr long kInvarianceParams[] = {1, -1, 2, 3};

std::string half_case(int ip) {
  switch (ip) {
    case -2: return "-1";
    case -1: return "-1/2";
    case 0: return "0";
    case 1: return "1/2";
    case 2: return "1";
  }
  return std::to_string(ip) + "/2";
}

std::string field_tag(const RationalField&) { return "rat"; }
std::string field_tag(const PrimeField& F) { return "fp" + std::to_string(F.p); }

template <class Field>
bool vanishes_on(const Field& F, const std::vector<typename Field::value_type>& v) {
  for (const auto& g : generators())
    if (!is_zero(evaluate(F, g.form, v))) return false;
  return true;
}

template <class Field>
std::vector<typename Field::value_type> basis_vector(const Field& F, int pos) {
  std::vector<typename Field::value_type> v(kDim, F.from_int(0));
  v[pos] = F.from_int(1);
  return v;
}

template <class Field>
void span_check(SuiteReport& rep, const Field& F, const std::string& what, const std::vector<std::pair<std::string, Matrix<Field>>>& ms) {
  const auto& basis = shared_basis(F);
  int failures = 0;
  Json bad = Json::array();
  for (const auto& [label, M] : ms)
    for (const auto& g : generators())
      if (!basis.contains_dense(pullback_dense(g.form, M))) {
        ++failures;
        if (bad.size() < 5) bad.push_back(g.name + " under " + label);
      }
  Check c{"span stable under " + what, field_tag(F), failures == 0};
  c.detail["elements"] = ms.size();
  c.detail["failures"] = failures;
  if (!bad.empty()) c.detail["examples"] = bad;
  rep.checks.push_back(std::move(c));
}

template <class Field>
void form_invariance_check(SuiteReport& rep, const Field& F, const Config& cfg) {
  WordOptions opts;
  opts.torus = false;
  opts.characteristic = F.characteristic();
  int bad = 0;
  constexpr int kWords = 20;
  for (int k = 0; k < kWords; ++k) {
    auto v = membership_forms(evaluate_word(F, random_word(cfg.seed + k, cfg.word_length, opts)));
    if (!v.member || *v.eps_h != F.from_int(1) || *v.eps_f != F.from_int(1)) ++bad;
  }
  Check c{"f and h invariant under elementary words", field_tag(F), bad == 0};
  c.detail["words"] = kWords;
  c.detail["failures"] = bad;
  rep.checks.push_back(std::move(c));
}

template <class Field>
void lie_checks(SuiteReport& rep, const Field& F) {
  using ER = typename ElimRingOf<Field>::type;
  const ER R = ElimRingOf<Field>::make(F);
  auto add = [&](const std::string& name, const LieSolveReport& r, int expected) {
    Check c{name, field_tag(F), r.kernel_dim == expected};
    c.detail["unknowns"] = r.unknowns;
    c.detail["rank"] = r.rank;
    c.detail["kernel_dim"] = r.kernel_dim;
    c.detail["expected"] = expected;
    c.detail["rows"] = r.rows;
    rep.checks.push_back(std::move(c));
  };
  {
    auto sys = build_gi_system(F);
    add("dim Lie(G_I)", make_report(F, sys, false), 134);
    int missing = 0;
    for (const Root& g : RootSystem::get().e7_roots())
      if (!sys.annihilates(root_element(R, g))) ++missing;
    for (int i = 0; i < kRank; ++i)
      if (!sys.annihilates(coroot_element(R, i))) ++missing;
    Check c{"Lie(G_I) contains root elements and coroots", field_tag(F), missing == 0};
    c.detail["elements"] = 126 + kRank;
    c.detail["missing"] = missing;
    rep.checks.push_back(std::move(c));
  }
  {
    auto sys = build_fh_system(F, false);
    add("dim Lie(G_(f,h))", make_report(F, sys, false), 133);
    Check c{"diagonal relation on Lie(G_(f,h))", field_tag(F), sys.implies(diagonal_relation(R))};
    Json mu = Json::array();
    for (WeightIndex w : diagonal_relation_weights()) mu.push_back(w.ordinal());
    c.detail["weights"] = mu;
    rep.checks.push_back(std::move(c));
  }
  add("dim Lie(extended G_(f,h))", lie_dim_fh(F, true), 134);
}

template <class Field>
OrbitClass class_of(const Field& F, const std::vector<typename Field::value_type>& v) {
  return orbit_class(F, v);
}

template <class Field>
void cross_checks(SuiteReport& rep, const Field& F, const Config& cfg, std::uint64_t salt) {
  using S = typename Field::value_type;
  WordOptions opts;
  opts.characteristic = F.characteristic();
  std::vector<std::pair<std::string, Matrix<Field>>> words;
  for (int k = 0; k < cfg.samples; ++k) {
    auto w = random_word(cfg.seed + salt + k, cfg.word_length, opts);
    words.emplace_back(to_string(w), evaluate_word(F, w));
  }
  auto wr = cross_check(words);
  {
    Check c{"random words accepted by both methods", field_tag(F), wr.ok() && wr.accepted == static_cast<int>(words.size())};
    c.detail["words"] = words.size();
    c.detail["accepted"] = wr.accepted;
    c.detail["disagreements"] = wr.disagreements;
    int square = 0;
    for (const auto& e : wr.entries)
      if (e.forms.member && *e.forms.eps_f == *e.forms.eps_h * *e.forms.eps_h) ++square;
    c.detail["eps_f_is_eps_h_squared"] = square;
    c.pass = c.pass && square == static_cast<int>(words.size());
    rep.checks.push_back(std::move(c));
  }
  if (F.characteristic() != 2) {
    std::vector<std::pair<std::string, Matrix<Field>>> nm{{"diag(2,1,...,1)", near_miss(F)}};
    auto r = cross_check(nm);
    const auto& e = r.entries.front();
    Check c{"diag(2,1,...,1) rejected by both methods", field_tag(F),
            r.ok() && r.rejected == 1 && !e.ideal.witness_name.empty() && !e.forms.witness_name.empty()};
    c.detail["ideal_witness"] = e.ideal.witness_name + ": " + e.ideal.witness_detail;
    c.detail["forms_witness"] = e.forms.witness_name + ": " + e.forms.witness_detail;
    rep.checks.push_back(std::move(c));
  }
  if constexpr (std::is_same_v<Field, PrimeField>) {
    std::vector<std::pair<std::string, Matrix<Field>>> rnd;
    for (int k = 0; k < cfg.samples; ++k) rnd.emplace_back("random " + std::to_string(k), random_invertible(F, cfg.seed + salt + 7919 * (k + 1)));
    auto r = cross_check(rnd);
    int witnessed = 0;
    for (const auto& e : r.entries)
      if (!e.ideal.member && !e.ideal.witness_name.empty() && !e.forms.witness_name.empty()) ++witnessed;
    Check c{"random invertible matrices: methods agree", field_tag(F), r.ok() && witnessed == r.rejected};
    c.detail["matrices"] = rnd.size();
    c.detail["accepted"] = r.accepted;
    c.detail["rejected"] = r.rejected;
    c.detail["disagreements"] = r.disagreements;
    rep.checks.push_back(std::move(c));
  }
  {
    // M x_gamma(xi) M^-1 for members M lies in the group with trivial multipliers.
    const auto roots = RootSystem::get().e7_roots();
    Lcg64 g(cfg.seed + salt + 17);
    int bad = 0;
    const int n = std::min(cfg.samples, 5);
    for (int k = 0; k < n; ++k) {
      const auto& M = words[k % words.size()].second;
      auto X = root_unipotent(F, roots[draw(g, roots.size())], F.from_int(1 + static_cast<long long>(draw(g, 3))));
      auto v = membership_forms(M * X * inverse(M));
      if (!v.member || *v.eps_h != S(F.from_int(1)) || *v.eps_f != S(F.from_int(1))) ++bad;
    }
    Check c{"conjugates of root elements by members are in the group", field_tag(F), bad == 0};
    c.detail["samples"] = n;
    c.detail["failures"] = bad;
    rep.checks.push_back(std::move(c));
  }
}

}  // namespace

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json SuiteReport::to_json(const Config& cfg) const {
  Json j;
  j["build"] = build_id();
  j["suite"] = suite;
  std::vector<std::string> rings;
  for (const auto& c : checks)
    if (std::find(rings.begin(), rings.end(), c.ring) == rings.end()) rings.push_back(c.ring);
  j["ring"] = rings;
  j["primes"] = cfg.primes;
  j["seed"] = cfg.seed;
  j["word_length"] = cfg.word_length;
  j["samples"] = cfg.samples;
  j["status"] = ok() ? "pass" : "fail";
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json x;
    x["name"] = c.name;
    x["ring"] = c.ring;
    x["pass"] = c.pass;
    x["detail"] = c.detail;
    arr.push_back(std::move(x));
  }
  j["checks"] = std::move(arr);
  return j;
}

std::string SuiteReport::to_text(const Config& cfg) const {
  std::ostringstream os;
  os << "suite " << suite << " (" << build_id() << ", seed " << cfg.seed << ", primes";
  for (auto p : cfg.primes) os << " " << p;
  os << ")\n";
  for (const auto& c : checks) os << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.ring << "] " << c.detail.dump() << "\n";
  os << (ok() ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"invariance", "identities", "lie-dims", "scaling", "orbit-vanish", "cross-check"};
  return names;
}

SuiteReport run_suite(const std::string& name, const Config& cfg) {
  static const std::map<std::string, std::function<SuiteReport(const Config&)>> table{
      {"invariance", suite_invariance}, {"identities", suite_identities}, {"lie-dims", suite_lie_dims},
      {"scaling", suite_scaling},       {"orbit-vanish", suite_orbit_vanish}, {"cross-check", suite_cross_check}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite " + name);
  return it->second(cfg);
}

Matrix<PrimeField> random_invertible(const PrimeField& F, std::uint64_t seed) {
  Lcg64 g(seed);
  for (;;) {
    Matrix<PrimeField> m(F, kDim, kDim);
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) m(i, j) = F.from_int(static_cast<long long>(draw(g, F.p)));
    if (!is_zero(determinant(m))) return m;
  }
}

SuiteReport suite_invariance(const Config& cfg) {
  SuiteReport rep{"invariance", {}};
  const auto roots = RootSystem::get().e7_roots();
  for (long xi : kInvarianceParams) {
    InvarianceReport r;
    for (const Root& g : roots) verify_invariance(g, xi, &r);
    Check c{"span stable under x_gamma(" + std::to_string(xi) + ") for all gamma", "int", r.span_failures == 0};
    c.detail["pullbacks"] = r.generators_checked;
    c.detail["failures"] = r.span_failures;
    rep.checks.push_back(std::move(c));
  }
  RationalField Q;
  std::vector<std::pair<std::string, Matrix<RationalField>>> tori, weyl;
  for (const Rational& eta : {Rational(2), Rational(3), Rational(-1), Rational(1, 2), Rational(-2, 3)})
    tori.emplace_back("h[" + to_string(eta) + "]", torus_weight(Q, eta));
  for (const Root& a : roots) weyl.emplace_back("w" + a.str(), weyl_element(Q, a, Rational(1)));
  span_check(rep, Q, "torus elements", tori);
  span_check(rep, Q, "Weyl elements", weyl);
  form_invariance_check(rep, Q, cfg);
  for (auto p : cfg.primes) form_invariance_check(rep, PrimeField(p), cfg);
  return rep;
}

SuiteReport suite_identities(const Config&) {
  SuiteReport rep{"identities", {}};
  const auto roots = RootSystem::get().e7_roots();
  InvarianceReport total;
  for (long xi : kInvarianceParams) {
    InvarianceReport r;
    for (const Root& g : roots) verify_invariance(g, xi, &r);
    Check c{"closed-form pullbacks, xi=" + std::to_string(xi), "int", r.identity_failures == 0};
    c.detail["pullbacks"] = r.generators_checked;
    c.detail["mismatches"] = r.identity_failures;
    if (!r.failures.empty()) c.detail["examples"] = r.failures;
    rep.checks.push_back(std::move(c));
    for (const auto& [k, n] : r.square_cases) total.square_cases[k] += n;
    for (const auto& [k, n] : r.g_cases) total.g_cases[k] += n;
    for (const auto& [k, n] : r.stated_square_mismatch) total.stated_square_mismatch[k] += n;
    for (const auto& [k, n] : r.stated_g_mismatch) total.stated_g_mismatch[k] += n;
  }
  // The literal closed-form rules, case by case.
  auto stated = [&](const std::string& family, const std::map<int, int>& cases, const std::map<int, int>& mismatch) {
    for (int ip = -2; ip <= 2; ++ip) {
      auto n = cases.count(ip) ? cases.at(ip) : 0;
      auto bad = mismatch.count(ip) ? mismatch.at(ip) : 0;
      Check c{family + " rule as stated, (alpha,gamma)=" + half_case(ip), "int", n > 0 && bad == 0};
      c.detail["cases"] = n;
      c.detail["mismatches"] = bad;
      rep.checks.push_back(std::move(c));
    }
  };
  stated("square equation", total.square_cases, total.stated_square_mismatch);
  stated("g_alpha", total.g_cases, total.stated_g_mismatch);
  return rep;
}

SuiteReport suite_lie_dims(const Config& cfg) {
  SuiteReport rep{"lie-dims", {}};
  lie_checks(rep, RationalField{});
  for (auto p : cfg.primes) lie_checks(rep, PrimeField(p));
  return rep;
}

SuiteReport suite_scaling(const Config&) {
  SuiteReport rep{"scaling", {}};
  RationalField Q;
  const auto& forms = InvariantForms::get();
  for (long e : {2L, 3L}) {
    const Rational eta(e);
    const std::string tag = "eta=" + std::to_string(e);
    auto T = torus_weight(Q, eta);
    {
      Rational det = determinant(T), want = signed_power(Q, eta, -28);
      Check c{"det torus = eta^-28, " + tag, "rat", det == want};
      c.detail["det"] = to_string(det);
      rep.checks.push_back(std::move(c));
    }
    // Direct multipliers: T is diagonal, so every h pair and f entry scales by a product of entries.
    std::optional<Rational> eh, ef;
    bool h_similar = true, f_similar = true;
    for (int a = 0; a < kDim; ++a) {
      Rational r = T(a, a) * T(kDim - 1 - a, kDim - 1 - a);
      if (!eh) eh = r;
      h_similar = h_similar && r == *eh;
    }
    for (const auto& x : forms.support()) {
      Rational r = T(x.pos[0], x.pos[0]) * T(x.pos[1], x.pos[1]) * T(x.pos[2], x.pos[2]) * T(x.pos[3], x.pos[3]);
      if (!ef) ef = r;
      f_similar = f_similar && r == *ef;
    }
    Check sim{"torus is a similitude of h and f, " + tag, "rat", h_similar && f_similar};
    sim.detail["eps_h"] = to_string(*eh);
    sim.detail["eps_f"] = to_string(*ef);
    rep.checks.push_back(std::move(sim));
    Check sq{"eps_f = eps_h^2, " + tag, "rat", *ef == *eh * *eh};
    rep.checks.push_back(std::move(sq));
    Check sh{"h scales by eta, " + tag, "rat", *eh == eta};
    sh.detail["eps_h"] = to_string(*eh);
    rep.checks.push_back(std::move(sh));
    Check sf{"f scales by eta^2, " + tag, "rat", *ef == eta * eta};
    sf.detail["eps_f"] = to_string(*ef);
    rep.checks.push_back(std::move(sf));
  }
  return rep;
}

SuiteReport suite_orbit_vanish(const Config& cfg) {
  SuiteReport rep{"orbit-vanish", {}};
  constexpr int kWords = 100, kWeights = 10;
  for (auto p : cfg.primes) {
    PrimeField F(p);
    WordOptions opts;
    opts.characteristic = p;
    Lcg64 g(cfg.seed + p);
    int bad = 0;
    for (int k = 0; k < kWords; ++k) {
      auto w = random_word(cfg.seed + 1000 * p + k, cfg.word_length, opts);
      for (int j = 0; j < kWeights; ++j)
        if (!vanishes_on(F, apply_word(F, w, basis_vector(F, static_cast<int>(draw(g, kDim)))))) ++bad;
    }
    Check c{"generators vanish on the highest-weight orbit", field_tag(F), bad == 0};
    c.detail["words"] = kWords;
    c.detail["weights_per_word"] = kWeights;
    c.detail["failures"] = bad;
    rep.checks.push_back(std::move(c));
  }
  for (auto p : cfg.primes) {
    if (p == 2 || p == 3) continue;
    PrimeField F(p);
    int non_singular = 0;
    for (int a = 0; a < kDim; ++a)
      if (class_of(F, basis_vector(F, a)) != OrbitClass::Singular) ++non_singular;
    Check b{"basis vectors are singular", field_tag(F), non_singular == 0};
    b.detail["failures"] = non_singular;
    rep.checks.push_back(std::move(b));

    // Partial sums along a tetrad, and a random vector.
    const auto t = RootSystem::get().tetrads().front();
    std::vector<std::vector<Fp>> samples;
    std::vector<Fp> acc(kDim, F.from_int(0));
    for (WeightIndex w : t) {
      acc[w.pos()] = F.from_int(1);
      samples.push_back(acc);
    }
    Lcg64 g(cfg.seed + 31 * p);
    std::vector<Fp> rnd(kDim);
    for (auto& x : rnd) x = F.from_int(static_cast<long long>(draw(g, p)));
    samples.push_back(rnd);
    Json classes = Json::array();
    std::vector<OrbitClass> base;
    for (const auto& v : samples) {
      base.push_back(class_of(F, v));
      classes.push_back(to_string(base.back()));
    }
    WordOptions opts;
    opts.characteristic = p;
    int changed = 0;
    for (int k = 0; k < cfg.samples; ++k) {
      auto w = random_word(cfg.seed + 5000 * p + k, cfg.word_length, opts);
      for (std::size_t i = 0; i < samples.size(); ++i)
        if (class_of(F, apply_word(F, w, samples[i])) != base[i]) ++changed;
    }
    Check c{"orbit classes constant along random words", field_tag(F), changed == 0};
    c.detail["vectors"] = classes;
    c.detail["words"] = cfg.samples;
    c.detail["changes"] = changed;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

SuiteReport suite_cross_check(const Config& cfg) {
  SuiteReport rep{"cross-check", {}};
  for (auto p : cfg.primes) cross_checks(rep, PrimeField(p), cfg, 100000ULL * p);
  cross_checks(rep, RationalField{}, cfg, 0);
  return rep;
}

}  // namespace e7
