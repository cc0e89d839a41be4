#pragma once

// Verification suites shared by the command-line tool and the acceptance
// runner. Reports are deterministic for a fixed configuration.

#include <cstdint>
#include <string>
#include <vector>

#include "e7/io.hpp"
#include "e7/root_system.hpp"

namespace e7 {

struct Config {
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  std::uint64_t seed = 1;
  int word_length = 20;
  int samples = 50;
};

struct Check {
  std::string name;
  std::string ring;
  bool pass = false;
  Json detail = Json::object();
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool ok() const;
  Json to_json(const Config& cfg) const;
  std::string to_text(const Config& cfg) const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const Config& cfg);

SuiteReport suite_invariance(const Config& cfg);
SuiteReport suite_identities(const Config& cfg);
SuiteReport suite_lie_dims(const Config& cfg);
SuiteReport suite_scaling(const Config& cfg);
SuiteReport suite_orbit_vanish(const Config& cfg);
SuiteReport suite_cross_check(const Config& cfg);

/// Entries drawn with Lcg64 until the matrix is invertible.
Matrix<PrimeField> random_invertible(const PrimeField& F, std::uint64_t seed);

/// diag(2, 1, ..., 1).
template <class Ring>
Matrix<Ring> near_miss(const Ring& R) {
  auto m = Matrix<Ring>::identity(R, kDim);
  m(0, 0) = R.from_int(2);
  return m;
}

}  // namespace e7
