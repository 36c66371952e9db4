#pragma once

// Exact incremental row echelon basis over Q, kept fraction-free: every
// stored row is an integer vector divided through by its content. Rows are
// sparse since the vectors fed in by the word closure are flattened 0/1
// matrices with at most d nonzeros out of d^2.

#include <Eigen/Core>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gerst/error.hpp"

namespace gerst {

using BigInt = boost::multiprecision::cpp_int;

/// Arithmetic used by RowSpace. The int64 specialization is checked and
/// throws Overflow instead of wrapping.
template <typename Scalar>
struct ExactOps;

template <>
struct ExactOps<std::int64_t> {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "int64 product");
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "int64 difference");
    return r;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
};

template <>
struct ExactOps<BigInt> {
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
};

template <typename Scalar>
class RowSpace {
 public:
  using Index = Eigen::Index;
  using SparseRow = std::vector<std::pair<Index, Scalar>>;  // sorted, no zeros

  RowSpace() = default;

  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Adds `v` if it is independent of the current rows. Returns whether the
  /// rank grew.
  bool insert(SparseRow v) {
    using Ops = ExactOps<Scalar>;
    while (!v.empty()) {
      const auto it = pivot_row_.find(v.front().first);
      if (it == pivot_row_.end()) {
        make_primitive(v);
        pivot_row_.emplace(v.front().first, rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      const SparseRow& r = rows_[it->second];
      const Scalar a = r.front().second;
      const Scalar b = v.front().second;
      // v <- a*v - b*r cancels the leading entry.
      SparseRow next;
      next.reserve(v.size() + r.size());
      auto i = v.begin();
      auto j = r.begin();
      while (i != v.end() || j != r.end()) {
        if (j == r.end() || (i != v.end() && i->first < j->first)) {
          next.emplace_back(i->first, Ops::mul(a, i->second));
          ++i;
        } else if (i == v.end() || j->first < i->first) {
          next.emplace_back(j->first, Ops::sub(Scalar(0), Ops::mul(b, j->second)));
          ++j;
        } else {
          Scalar x = Ops::sub(Ops::mul(a, i->second), Ops::mul(b, j->second));
          if (x != 0) next.emplace_back(i->first, std::move(x));
          ++i;
          ++j;
        }
      }
      make_primitive(next);
      v = std::move(next);
    }
    return false;
  }

  /// Dense convenience: inserts `v` read in storage order.
  template <typename Derived>
  bool insert_dense(const Eigen::DenseBase<Derived>& v) {
    SparseRow row;
    const auto flat = v.reshaped();
    for (Index k = 0; k < flat.size(); ++k) {
      if (flat(k) != 0) row.emplace_back(k, Scalar(flat(k)));
    }
    return insert(std::move(row));
  }

 private:
  static void make_primitive(SparseRow& v) {
    if (v.empty()) return;
    Scalar g(0);
    for (const auto& [k, x] : v) {
      g = ExactOps<Scalar>::gcd(g, x < 0 ? Scalar(-x) : x);
      if (g == 1) break;
    }
    if (v.front().second < 0) g = -g;
    if (g != 1) {
      for (auto& [k, x] : v) x /= g;
    }
  }

  std::vector<SparseRow> rows_;
  std::unordered_map<Index, std::size_t> pivot_row_;
};

/// Rank over Q of the rows of an integer matrix.
template <typename Scalar, typename Derived>
Eigen::Index exact_rank(const Eigen::DenseBase<Derived>& m) {
  RowSpace<Scalar> space;
  for (Eigen::Index i = 0; i < m.rows(); ++i) space.insert_dense(m.row(i));
  return space.rank();
}

}  // namespace gerst
