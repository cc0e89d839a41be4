#pragma once

// The E8 root system, its E7 subsystem (alpha_8-height 0) and the 56 weights
// of the minimal E7 module, realized as the E8 roots of alpha_8-height 1.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace e7 {

inline constexpr int kRank = 8;
inline constexpr int kNumRoots = 240;
inline constexpr int kNumE7Roots = 126;
inline constexpr int kDim = 56;

/// Element of the E8 root lattice, as coefficients over the fundamental
/// roots alpha_1..alpha_8 (Bourbaki numbering).
struct Root {
  std::array<int, kRank> c{};

  int height() const;
  /// Coefficient of alpha_8; the grading degree in the 5-grading of E8.
  int grade() const { return c[7]; }

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend auto operator<=>(const Root&, const Root&) = default;

  std::string str() const;
};

Root fundamental_root(int i);  // i in 1..8

/// Handle to one of the 56 weights. Only RootSystem hands these out, so a
/// WeightIndex is always valid.
class WeightIndex {
 public:
  int ordinal() const { return ordinal_; }
  /// Zero-based position, convenient for array indexing.
  int pos() const { return ordinal_ - 1; }
  /// Signed label 1..28, -28..-1 in the symmetric numbering.
  int label() const { return ordinal_ <= 28 ? ordinal_ : ordinal_ - 57; }

  friend auto operator<=>(const WeightIndex&, const WeightIndex&) = default;

 private:
  friend class RootSystem;
  explicit WeightIndex(int ordinal) : ordinal_(ordinal) {}
  int ordinal_ = 1;
};

struct MaximalSquare {
  Root alpha;
  std::vector<WeightIndex> members;                      // 12, by ordinal
  std::vector<std::pair<WeightIndex, WeightIndex>> pairs;  // 6 orthogonal pairs, first < second
};

using Tetrad = std::array<WeightIndex, 4>;

class RootSystem {
 public:
  /// The process-wide immutable instance; built on first use.
  static const RootSystem& get();

  std::span<const Root> roots() const { return roots_; }
  /// Index into roots(), or -1 when r is not a root.
  int index_of(const Root& r) const;
  bool is_root(const Root& r) const { return index_of(r) >= 0; }
  const Root& root(int index) const { return roots_.at(index); }

  /// Lattice pairing normalized so that every root has (a, a) = 2.
  static int inner(const Root& a, const Root& b);

  const Root& highest_root() const { return roots_[highest_]; }
  int highest_index() const { return highest_; }

  /// Indices (into roots()) of the 126 roots of alpha_8-height 0.
  std::span<const int> e7_root_indices() const { return e7_; }
  std::vector<Root> e7_roots() const;
  bool is_e7_root(const Root& r) const { return r.grade() == 0 && is_root(r); }

  // Weights ------------------------------------------------------------
  std::vector<WeightIndex> weights() const;
  WeightIndex weight(int ordinal) const;  // throws std::out_of_range
  std::optional<WeightIndex> weight_of(const Root& r) const;
  const Root& root_of(WeightIndex w) const { return weight_roots_[w.pos()]; }
  /// Index into roots() of the E8 root carrying this weight.
  int root_index_of(WeightIndex w) const { return weight_root_index_[w.pos()]; }

  /// Weight-graph distance in {0, 1, 2, 3}.
  int distance(WeightIndex a, WeightIndex b) const { return distance_[a.pos()][b.pos()]; }
  /// The unique weight at distance 3, delta - lambda.
  WeightIndex bar(WeightIndex w) const { return WeightIndex(kDim + 1 - w.ordinal()); }

  /// Omega(alpha) = { lambda | lambda - alpha is a weight }; alpha must be an E7 root.
  MaximalSquare maximal_square(const Root& alpha) const;

  /// All 630 unordered tetrads (pairwise orthogonal quadruples), each sorted.
  std::vector<Tetrad> tetrads() const;

 private:
  RootSystem();

  std::vector<Root> roots_;
  std::unordered_map<unsigned long long, int> index_;
  int highest_ = -1;
  std::vector<int> e7_;
  std::vector<Root> weight_roots_;      // by ordinal - 1
  std::vector<int> weight_root_index_;  // by ordinal - 1
  std::array<std::array<int, kDim>, kDim> distance_{};
};

}  // namespace e7
