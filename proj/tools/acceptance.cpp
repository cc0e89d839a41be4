// Acceptance runner: one PASS/FAIL line per criterion, followed by the
// individual checks. Exit status is nonzero when any selected criterion fails.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>

#include "e7/chevalley.hpp"
#include "e7/io.hpp"
#include "e7/membership.hpp"
#include "e7/quadrics.hpp"
#include "e7/suites.hpp"

using namespace e7;

namespace {

struct Sub {
  std::string name;
  bool pass;
  std::string note;
  bool skipped = false;  // excluded from the verdict
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<std::vector<Sub>(bool skip_conflicts)> run;
};

std::vector<Sub> from_report(const SuiteReport& rep, const std::function<bool(const Check&)>& keep = nullptr) {
  std::vector<Sub> out;
  for (const auto& c : rep.checks)
    if (!keep || keep(c)) out.push_back({c.name + " [" + c.ring + "]", c.pass, c.detail.empty() ? "" : c.detail.dump()});
  return out;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::vector<Sub> ac1(bool) {
  const auto& rs = RootSystem::get();
  std::vector<Sub> out;
  auto count = [&](const std::string& what, long got, long want) {
    out.push_back({what, got == want, std::to_string(got) + " (expected " + std::to_string(want) + ")"});
  };
  count("E8 roots", static_cast<long>(rs.roots().size()), 240);
  count("E7 roots", static_cast<long>(rs.e7_roots().size()), 126);
  count("weights", static_cast<long>(rs.weights().size()), 56);
  std::set<std::vector<WeightIndex>> squares;
  long bad_size = 0;
  for (const Root& a : rs.e7_roots()) {
    auto sq = rs.maximal_square(a);
    if (sq.members.size() != 12) ++bad_size;
    squares.insert(sq.members);
  }
  count("distinct maximal squares", static_cast<long>(squares.size()), 126);
  count("squares without 12 members", bad_size, 0);
  count("unordered tetrads", static_cast<long>(rs.tetrads().size()), 630);
  // Ordered tetrads by direct enumeration of pairwise orthogonal quadruples.
  auto ws = rs.weights();
  auto orth = [&](WeightIndex a, WeightIndex b) { return rs.distance(a, b) == 2; };
  long ordered = 0;
  for (auto a : ws)
    for (auto b : ws) {
      if (!orth(a, b)) continue;
      for (auto c : ws) {
        if (!orth(a, c) || !orth(b, c)) continue;
        for (auto d : ws) ordered += orth(a, d) && orth(b, d) && orth(c, d);
      }
    }
  count("ordered tetrads", ordered, 15120);
  return out;
}

std::vector<Sub> ac2(bool) {
  auto r = StructureTable::get().check();
  std::vector<Sub> out;
  std::string v = r.violations.empty() ? "" : "first violation: " + r.violations.front();
  out.push_back({"antisymmetry", r.ok() && r.antisymmetry > 0, std::to_string(r.antisymmetry) + " pairs" + (v.empty() ? "" : "; " + v)});
  out.push_back({"sign symmetries under negation", r.ok() && r.negation > 0, std::to_string(r.negation) + " pairs"});
  out.push_back({"triple-sum symmetry", r.ok() && r.triple > 0, std::to_string(r.triple) + " triples"});
  out.push_back({"cocycle identity", r.ok() && r.cocycle > 0, std::to_string(r.cocycle) + " quadruples"});
  return out;
}

std::vector<Sub> ac3(bool) {
  std::vector<Sub> out;
  auto add = [&](const std::string& ring, int rank) { out.push_back({"rank over " + ring, rank == kNumGenerators, std::to_string(rank)}); };
  add("Q", QuadricBasis<RationalField>(RationalField{}).rank());
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) add("F_" + std::to_string(p), QuadricBasis<PrimeField>(PrimeField(p)).rank());
  return out;
}

std::vector<Sub> ac4(bool skip_conflicts) {
  InvarianceReport rep;
  for (long long xi : {1LL, -1LL, 2LL, 3LL})
    for (const Root& g : RootSystem::get().e7_roots()) verify_invariance(g, xi, &rep);
  std::vector<Sub> out;
  out.push_back({"every pullback reduces to zero remainder", rep.span_failures == 0,
                 std::to_string(rep.generators_checked) + " pullbacks, " + std::to_string(rep.span_failures) + " failures"});
  out.push_back({"derived closed forms, all cases", rep.identity_failures == 0, std::to_string(rep.identity_failures) + " mismatches"});
  static const char* kCase[] = {"-1", "-1/2", "0", "1/2", "1"};
  for (int family = 0; family < 2; ++family) {
    const auto& cases = family ? rep.g_cases : rep.square_cases;
    const auto& bad = family ? rep.stated_g_mismatch : rep.stated_square_mismatch;
    for (int ip = -2; ip <= 2; ++ip) {
      int n = cases.count(ip) ? cases.at(ip) : 0;
      int m = bad.count(ip) ? bad.at(ip) : 0;
      Sub s{std::string(family ? "g_alpha" : "square equation") + " rule as stated, (alpha,gamma)=" + kCase[ip + 2], n > 0 && m == 0,
            std::to_string(n) + " cases, " + std::to_string(m) + " mismatches"};
      // The stated rule leaves g_alpha fixed under x_{-alpha}; the pullback moves it.
      if (skip_conflicts && family == 1 && ip == -2 && m > 0) {
        s.skipped = true;
        s.note += "; known conflict, covered by the derived rule";
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

template <class Field>
Sub word_invariance(const Field& F, const std::string& tag) {
  WordOptions opts;
  opts.torus = false;
  opts.characteristic = F.characteristic();
  int bad = 0;
  for (int k = 0; k < 20; ++k) {
    auto v = membership_forms(evaluate_word(F, random_word(1 + k, 20, opts)));
    if (!v.member || *v.eps_h != F.from_int(1) || *v.eps_f != F.from_int(1)) ++bad;
  }
  return {"f and h invariant under 20 elementary words over " + tag, bad == 0, std::to_string(bad) + " failures"};
}

std::vector<Sub> ac5(bool skip_conflicts) {
  std::vector<Sub> out;
  out.push_back(word_invariance(RationalField{}, "Q"));
  out.push_back(word_invariance(PrimeField(5), "F_5"));
  for (auto& s : from_report(suite_scaling(Config{}))) {
    // The stated multipliers contradict det = eta^-28; the measured ones are eta^-1 and eta^-2.
    if (skip_conflicts && (contains(s.name, "h scales by eta") || contains(s.name, "f scales by eta^2")) && !s.pass) {
      s.skipped = true;
      s.note += "; known conflict with the determinant";
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Sub> ac6(bool) {
  Config cfg;
  cfg.primes = {2, 3, 5, 7};
  return from_report(suite_lie_dims(cfg), [](const Check& c) { return c.name.rfind("dim ", 0) == 0; });
}

std::vector<Sub> ac7(bool) {
  Config cfg;
  cfg.primes = {5};
  return from_report(suite_orbit_vanish(cfg), [](const Check& c) { return contains(c.name, "vanish"); });
}

std::vector<Sub> ac8(bool) {
  Config cfg;
  cfg.primes = {7};
  return from_report(suite_cross_check(cfg), [](const Check& c) { return !contains(c.name, "conjugates"); });
}

std::vector<Sub> ac9(bool) {
  Config cfg;
  cfg.primes = {5, 7};
  return from_report(suite_orbit_vanish(cfg), [](const Check& c) { return !contains(c.name, "vanish"); });
}

std::vector<Sub> ac10(bool) {
  std::vector<Sub> out;
  for (const char* t : {"roots", "weights", "constants", "quadrics", "form-f", "form-h"}) {
    std::string a = dump_text(t), b = dump_text(t);
    out.push_back({std::string("dump ") + t + " is byte-identical", a == b, std::to_string(a.size()) + " bytes"});
  }
  auto j1 = dump_quadrics().dump(), j2 = dump_quadrics().dump();
  out.push_back({"quadrics JSON is byte-identical", j1 == j2, std::to_string(j1.size()) + " bytes"});
  Config cfg;
  auto r1 = suite_scaling(cfg).to_json(cfg).dump(), r2 = suite_scaling(cfg).to_json(cfg).dump();
  out.push_back({"scaling report is byte-identical", r1 == r2, std::to_string(r1.size()) + " bytes"});
  WordOptions opts;
  opts.characteristic = 7;
  PrimeField F(7);
  auto w1 = to_json(evaluate_word(F, random_word(9, 20, opts))).dump();
  auto w2 = to_json(evaluate_word(F, random_word(9, 20, opts))).dump();
  out.push_back({"seeded word matrix is byte-identical", w1 == w2, std::to_string(w1.size()) + " bytes"});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria AC1-AC10"};
  std::vector<int> selected;
  bool skip_conflicts = false, verbose = true;
  app.add_option("--criterion", selected, "Criterion number (repeatable; default all)")->check(CLI::Range(1, 10));
  app.add_flag("--skip-conflicts", skip_conflicts, "Leave checks that contradict the closed-form data out of the verdict");
  app.add_flag("!--quiet", verbose, "Print only the criterion lines");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, "cardinalities", 1, ac1},
      {2, "structure constant identities", 10, ac2},
      {3, "generator independence", 5, ac3},
      {4, "invariance of the quadric span and closed forms", 120, ac4},
      {5, "form invariance and torus scaling", 60, ac5},
      {6, "Lie algebra dimensions", 600, ac6},
      {7, "highest-weight orbit vanishing", 60, ac7},
      {8, "membership cross-check", 120, ac8},
      {9, "orbit classes", 60, ac9},
      {10, "determinism", 1, ac10},
  };
  bool all_ok = true;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    auto subs = c.run(skip_conflicts);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = secs < c.limit_s;
    int skipped = 0;
    for (const auto& s : subs) {
      if (s.skipped) ++skipped;
      else ok = ok && s.pass;
    }
    all_ok = all_ok && ok;
    std::cout << "AC" << c.id << " " << (ok ? "PASS" : "FAIL") << " " << c.title << " (" << std::fixed << std::setprecision(2) << secs
              << " s, limit " << std::setprecision(0) << c.limit_s << " s";
    if (skipped) std::cout << ", " << skipped << " conflicting check" << (skipped > 1 ? "s" : "") << " skipped";
    std::cout << ")\n";
    if (verbose)
      for (const auto& s : subs)
        std::cout << "    " << (s.skipped ? "SKIP" : s.pass ? "pass" : "FAIL") << "  " << s.name << (s.note.empty() ? "" : ": " + s.note) << "\n";
    std::cout.flush();
  }
  return all_ok ? 0 : 1;
}
