#pragma once

// Incremental row echelon forms. Over fields the pivots are normalized to 1;
// over the integers elimination is fraction-free and rows are kept primitive.
// Optionally records how each stored row combines the inserted rows.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "e7/numeric.hpp"

namespace e7 {

namespace detail {

inline void gcd_into(Integer& g, const Integer& x) {
  if (!is_zero(x)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
}

}  // namespace detail

template <class Ring>
class RowEchelon {
 public:
  using T = typename Ring::value_type;

  /// width: number of columns; tracked: number of inserted rows whose
  /// combinations are recorded (0 disables the bookkeeping).
  RowEchelon(Ring R, int width, int tracked = 0) : R_(R), width_(width), tracked_(tracked) {}

  struct Reduced {
    std::vector<T> remainder;
    std::vector<T> coeffs;  // size tracked
    T scale;                // scale * v = sum coeffs[i] * row_i + remainder (scale = 1 over fields)
    bool zero() const {
      for (const auto& x : remainder)
        if (!is_zero(x)) return false;
      return true;
    }
  };

  Reduced reduce(std::vector<T> v) const {
    if (static_cast<int>(v.size()) != width_) throw std::invalid_argument("RowEchelon: width mismatch");
    Reduced out{std::move(v), std::vector<T>(tracked_, R_.from_int(0)), R_.from_int(1)};
    for (const Row& r : rows_) {
      T a = out.remainder[r.pivot];
      if (is_zero(a)) continue;
      if constexpr (Ring::is_field) {
        for (int j : r.nz) out.remainder[j] -= a * r.vals[j];
        for (int j = 0; j < tracked_; ++j)
          if (!is_zero(r.trans[j])) out.coeffs[j] += a * r.trans[j];
      } else {
        Integer g = gcd(a, r.vals[r.pivot]);
        Integer m = r.vals[r.pivot] / g, k = a / g;
        if (m != 1) {
          for (auto& x : out.remainder)
            if (!is_zero(x)) x *= m;
          for (auto& x : out.coeffs)
            if (!is_zero(x)) x *= m;
          out.scale *= m;
        }
        for (int j : r.nz) out.remainder[j] -= k * r.vals[j];
        for (int j = 0; j < tracked_; ++j)
          if (!is_zero(r.trans[j])) out.coeffs[j] += k * r.trans[j];
      }
    }
    return out;
  }

  /// Inserts v; returns false if it was dependent on the stored rows.
  /// origin is the index of v among the tracked rows (ignored when untracked).
  bool add(std::vector<T> v, int origin = -1) {
    Reduced red = reduce(std::move(v));
    int pivot = -1;
    for (int j = 0; j < width_; ++j)
      if (!is_zero(red.remainder[j])) {
        pivot = j;
        break;
      }
    if (pivot < 0) return false;
    Row row;
    row.pivot = pivot;
    row.vals = std::move(red.remainder);
    if (tracked_) {
      if (origin < 0 || origin >= tracked_) throw std::invalid_argument("RowEchelon: origin out of range");
      row.trans.assign(tracked_, R_.from_int(0));
      for (int j = 0; j < tracked_; ++j) row.trans[j] = -red.coeffs[j];
      row.trans[origin] += red.scale;
    }
    normalize(row);
    for (int j = pivot; j < width_; ++j)
      if (!is_zero(row.vals[j])) row.nz.push_back(j);
    rows_.push_back(std::move(row));
    return true;
  }

  bool contains(std::vector<T> v) const { return reduce(std::move(v)).zero(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  bool full() const { return rank() == width_; }
  std::vector<int> pivots() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(r.pivot);
    return p;
  }
  const std::vector<T>& row(int i) const { return rows_.at(i).vals; }

 private:
  struct Row {
    int pivot = -1;
    std::vector<T> vals;
    std::vector<T> trans;
    std::vector<int> nz;
  };

  void normalize(Row& row) const {
    if constexpr (Ring::is_field) {
      T inv = inverse(row.vals[row.pivot]);
      for (auto& x : row.vals) x *= inv;
      for (auto& x : row.trans) x *= inv;
    } else {
      Integer g = 0;
      for (const auto& x : row.vals) detail::gcd_into(g, x);
      for (const auto& x : row.trans) detail::gcd_into(g, x);
      if (sgn(row.vals[row.pivot]) < 0) g = -g;
      if (g != 1) {
        for (auto& x : row.vals) x /= g;
        for (auto& x : row.trans) x /= g;
      }
    }
  }

  Ring R_;
  int width_;
  int tracked_;
  std::vector<Row> rows_;
};

/// Rank of a list of rows (fraction-free over the integers).
template <class Ring>
int rank_of(const Ring& R, const std::vector<std::vector<typename Ring::value_type>>& rows, int width) {
  RowEchelon<Ring> e(R, width);
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

}  // namespace e7
