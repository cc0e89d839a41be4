#pragma once

// Generators of the extended Chevalley group of type E7 acting on the
// 56-dimensional module, as exact matrices over a chosen ring.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "e7/chevalley.hpp"
#include "e7/matrix.hpp"
#include "e7/root_system.hpp"

namespace e7 {

/// Exponent of eta on the basis vector e_lambda in torus_weight(eta).
/// The highest weight gets +1, the lowest -2; the determinant is eta^-28.
inline int torus_exponent(WeightIndex w) { return RootSystem::get().root_of(w).c[6] - 2; }

template <class Ring>
typename Ring::value_type signed_power(const Ring& R, const typename Ring::value_type& x, int k) {
  using T = typename Ring::value_type;
  T base = x;
  if (k < 0) {
    if constexpr (Ring::is_field) {
      base = inverse(x);
    } else {
      if (x != R.from_int(1) && x != R.from_int(-1)) throw std::domain_error("negative power of a non-unit integer");
    }
    k = -k;
  }
  T acc = R.from_int(1);
  for (int i = 0; i < k; ++i) acc *= base;
  return acc;
}

template <class Ring>
bool is_unit(const Ring& R, const typename Ring::value_type& x) {
  if constexpr (Ring::is_field) return !is_zero(x);
  else return x == R.from_int(1) || x == R.from_int(-1);
}

/// x_gamma(xi): identity plus xi * N_{gamma, lambda-gamma} at (lambda, lambda-gamma).
template <class Ring>
Matrix<Ring> root_unipotent(const Ring& R, const Root& gamma, const typename Ring::value_type& xi) {
  const auto& rs = RootSystem::get();
  if (!rs.is_e7_root(gamma)) throw std::invalid_argument("root_unipotent: " + gamma.str() + " is not an E7 root");
  const auto& t = StructureTable::get();
  Matrix<Ring> m = Matrix<Ring>::identity(R, kDim);
  for (WeightIndex lam : rs.weights()) {
    auto src = rs.weight_of(rs.root_of(lam) - gamma);
    if (!src) continue;
    m(lam.pos(), src->pos()) = R.from_int(t.n(gamma, rs.root_of(*src))) * xi;
  }
  return m;
}

/// The weight element h_{varpi_7}(eta), diagonal with entries eta^{torus_exponent}.
template <class Ring>
Matrix<Ring> torus_weight(const Ring& R, const typename Ring::value_type& eta) {
  if (!is_unit(R, eta)) throw std::domain_error("torus_weight: parameter is not invertible");
  const auto& rs = RootSystem::get();
  Matrix<Ring> m(R, kDim, kDim);
  for (WeightIndex lam : rs.weights()) m(lam.pos(), lam.pos()) = signed_power(R, eta, torus_exponent(lam));
  return m;
}

/// w_alpha(eps) = x_alpha(eps) x_{-alpha}(-eps^-1) x_alpha(eps).
template <class Ring>
Matrix<Ring> weyl_element(const Ring& R, const Root& alpha, const typename Ring::value_type& eps) {
  if (!is_unit(R, eps)) throw std::domain_error("weyl_element: parameter is not invertible");
  auto x = root_unipotent(R, alpha, eps);
  return x * root_unipotent(R, -alpha, -signed_power(R, eps, -1)) * x;
}

enum class TokenKind { RootUnipotent, TorusWeight, WeylElem };

struct WordToken {
  TokenKind kind = TokenKind::RootUnipotent;
  Root root;        // unused for TorusWeight
  Rational param;   // xi, eta or eps
  friend bool operator==(const WordToken&, const WordToken&) = default;
  std::string str() const;
};

using GroupWord = std::vector<WordToken>;

template <class Ring>
Matrix<Ring> token_matrix(const Ring& R, const WordToken& tok) {
  auto v = R.from_rational(tok.param);
  switch (tok.kind) {
    case TokenKind::RootUnipotent: return root_unipotent(R, tok.root, v);
    case TokenKind::TorusWeight: return torus_weight(R, v);
    case TokenKind::WeylElem: return weyl_element(R, tok.root, v);
  }
  throw std::logic_error("unknown token kind");
}

/// Ordered product of the generator matrices, leftmost token first.
template <class Ring>
Matrix<Ring> evaluate_word(const Ring& R, const GroupWord& w) {
  Matrix<Ring> acc = Matrix<Ring>::identity(R, kDim);
  for (const auto& tok : w) acc = acc * token_matrix(R, tok);
  return acc;
}

/// g * v for the word's product g, applied factor by factor from the right.
template <class Ring>
std::vector<typename Ring::value_type> apply_word(const Ring& R, const GroupWord& w, std::vector<typename Ring::value_type> v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = token_matrix(R, *it).apply(v);
  return v;
}

/// 64-bit LCG x -> 6364136223846793005 x + 1442695040888963407 mod 2^64.
using Lcg64 = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;

/// Uniform-ish draw in [0, bound) from the high bits of the state.
inline std::uint64_t draw(Lcg64& g, std::uint64_t bound) { return (g() >> 16) % bound; }

struct WordOptions {
  bool torus = true;
  bool weyl = true;
  /// Parameters that vanish modulo this characteristic are never drawn (0: none).
  std::uint32_t characteristic = 0;
};

/// Reproducible pseudo-random word driven by Lcg64.
GroupWord random_word(std::uint64_t seed, int length, const WordOptions& opts = {});

std::string to_string(const GroupWord& w);

}  // namespace e7
