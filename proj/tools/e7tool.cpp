// Command-line front end: table dumps, verification suites, membership tests
// and matrix emission.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "e7/io.hpp"
#include "e7/membership.hpp"
#include "e7/rep56.hpp"
#include "e7/suites.hpp"

using namespace e7;

namespace {

constexpr int kExitUsage = 2;

std::string scalar_json_str(const Rational& x) { return to_string(x); }
std::string scalar_json_str(const Fp& x) { return std::to_string(x.value()); }

template <class Field>
Json verdict_json(const MembershipVerdict<typename Field::value_type>& v, const std::string& method, const Field& F) {
  Json j;
  j["build"] = build_id();
  j["method"] = method;
  j["ring"] = F.tag();
  if (F.characteristic()) j["p"] = F.characteristic();
  j["member"] = v.member;
  if (v.eps_h) j["eps_h"] = scalar_json_str(*v.eps_h);
  if (v.eps_f) j["eps_f"] = scalar_json_str(*v.eps_f);
  if (!v.member) {
    j["witness"]["name"] = v.witness_name;
    j["witness"]["detail"] = v.witness_detail;
  }
  return j;
}

template <class Field>
int run_membership(const Matrix<Field>& M, const std::string& method, const std::string& format) {
  auto v = method == "ideal" ? membership_GI(M) : membership_forms(M);
  auto j = verdict_json(v, method, M.ring());
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (v.member ? "member" : "non-member") << " (" << method << ", " << M.ring().tag() << ")\n";
    if (v.eps_h) std::cout << "eps_h = " << scalar_json_str(*v.eps_h) << "\neps_f = " << scalar_json_str(*v.eps_f) << "\n";
    if (!v.member) std::cout << "witness " << v.witness_name << ": " << v.witness_detail << "\n";
  }
  return v.member ? 0 : 1;
}

Matrix<RationalField> to_rational(const Matrix<IntegerRing>& m) {
  Matrix<RationalField> out(RationalField{}, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

template <class Ring>
Json emit_matrix(const Ring& R, const std::string& kind, const Rational& eta, std::uint64_t seed, int length) {
  if (kind == "identity") return to_json(Matrix<Ring>::identity(R, kDim));
  if (kind == "torus") return to_json(torus_weight(R, R.from_rational(eta)));
  if (kind == "diag") return to_json(near_miss(R));
  if (kind == "word") {
    WordOptions opts;
    opts.characteristic = R.characteristic();
    if constexpr (!Ring::is_field) opts.torus = false;
    return to_json(evaluate_word(R, random_word(seed, length, opts)));
  }
  if (kind == "random") {
    if constexpr (std::is_same_v<Ring, PrimeField>) return to_json(random_invertible(R, seed));
    throw std::invalid_argument("emit random: only over fp");
  }
  throw std::invalid_argument("unknown matrix kind " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the 56-dimensional E7 module"};
  app.require_subcommand(1);

  Config cfg;
  std::vector<std::uint32_t> primes;
  std::string format = "json";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* dump = app.add_subcommand("dump", "Dump a table");
  std::string target;
  dump->add_option("target", target, "roots|weights|constants|quadrics|form-f|form-h")->required();
  add_common(dump);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--prime", primes, "Prime for modular checks (repeatable)");
  verify->add_option("--seed", cfg.seed, "PRNG seed");
  verify->add_option("--length", cfg.word_length, "Random word length")->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", cfg.samples, "Samples per randomized check")->check(CLI::PositiveNumber);
  add_common(verify);

  auto* member = app.add_subcommand("membership", "Decide membership of a 56x56 matrix");
  std::string matrix_path, method = "ideal";
  member->add_option("--matrix", matrix_path, "Matrix JSON file")->required();
  member->add_option("--method", method, "ideal|forms")->check(CLI::IsMember({"ideal", "forms"}));
  add_common(member);

  auto* emit = app.add_subcommand("emit", "Write a matrix file");
  std::string kind, ring = "rat", out_path, eta_str = "2";
  std::uint32_t emit_p = 7;
  std::uint64_t emit_seed = 1;
  int emit_length = 20;
  emit->add_option("kind", kind, "identity|torus|diag|word|random")->required();
  emit->add_option("--ring", ring, "int|rat|fp")->check(CLI::IsMember({"int", "rat", "fp"}));
  emit->add_option("--p", emit_p, "Prime for ring fp");
  emit->add_option("--eta", eta_str, "Torus parameter");
  emit->add_option("--seed", emit_seed, "PRNG seed");
  emit->add_option("--length", emit_length, "Word length")->check(CLI::NonNegativeNumber);
  emit->add_option("-o,--output", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*dump) {
      static const std::vector<std::string> targets{"roots", "weights", "constants", "quadrics", "form-f", "form-h"};
      if (std::find(targets.begin(), targets.end(), target) == targets.end()) {
        std::cerr << "unknown dump target " << target << "\n";
        return kExitUsage;
      }
      if (format == "text") {
        std::cout << dump_text(target);
        return 0;
      }
      Json j;
      j["build"] = build_id();
      j["target"] = target;
      if (target == "roots") j["records"] = dump_roots();
      else if (target == "weights") j["records"] = dump_weights();
      else if (target == "constants") j["records"] = dump_constants();
      else if (target == "quadrics") j["records"] = dump_quadrics();
      else if (target == "form-f") j["records"] = dump_form_f();
      else j["records"] = dump_form_h();
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (*verify) {
      if (!primes.empty()) cfg.primes = primes;
      for (auto p : cfg.primes)
        if (p >= (1u << 31) || !is_prime(p)) {
          std::cerr << "--prime " << p << " is not a supported prime\n";
          return kExitUsage;
        }
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite " << suite << "\n";
        return kExitUsage;
      }
      auto rep = run_suite(suite, cfg);
      if (format == "json") std::cout << rep.to_json(cfg).dump(2) << "\n";
      else std::cout << rep.to_text(cfg);
      return rep.ok() ? 0 : 1;
    }

    if (*member) {
      AnyMatrix m;
      try {
        m = read_matrix_file(matrix_path);
      } catch (const ParseError& e) {
        std::cerr << "cannot read matrix: " << e.what() << "\n";
        return kExitUsage;
      }
      return std::visit(
          [&](const auto& M) -> int {
            using R = std::decay_t<decltype(M.ring())>;
            if (M.rows() != kDim || M.cols() != kDim) throw std::invalid_argument("matrix must be 56x56");
            if constexpr (std::is_same_v<R, IntegerRing>) return run_membership(to_rational(M), method, format);
            else return run_membership(M, method, format);
          },
          m);
    }

    if (*emit) {
      Rational eta = parse_rational(eta_str);
      Json j;
      if (ring == "int") j = emit_matrix(IntegerRing{}, kind, eta, emit_seed, emit_length);
      else if (ring == "rat") j = emit_matrix(RationalField{}, kind, eta, emit_seed, emit_length);
      else j = emit_matrix(PrimeField(emit_p), kind, eta, emit_seed, emit_length);
      if (out_path.empty()) {
        std::cout << j.dump() << "\n";
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "cannot write " << out_path << "\n";
          return kExitUsage;
        }
        out << j.dump() << "\n";
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
