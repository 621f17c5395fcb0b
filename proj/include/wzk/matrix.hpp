#pragma once

#include "wzk/numeric.hpp"

#include <stdexcept>
#include <vector>

namespace wzk {

/// Dense square matrix of exact rationals.  Sized for root data (rank <= 64),
/// so no attempt at sparsity or blocking is made.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }

  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  RationalMatrix operator*(const RationalMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix size mismatch");
    RationalMatrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const Rational& aik = (*this)(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
      }
    return out;
  }

  bool operator==(const RationalMatrix& rhs) const {
    if (n_ != rhs.n_) return false;
    for (size_t x = 0; x < a_.size(); ++x)
      if (a_[x] != rhs.a_[x]) return false;
    return true;
  }

  /// Exact inverse by Gauss-Jordan elimination with row pivoting.
  RationalMatrix inverse() const {
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
      int pivot = -1;
      for (int r = col; r < n_; ++r)
        if (a(r, col) != 0) { pivot = r; break; }
      if (pivot < 0) throw std::domain_error("singular matrix");
      if (pivot != col)
        for (int j = 0; j < n_; ++j) {
          swap(a(pivot, j), a(col, j));
          swap(inv(pivot, j), inv(col, j));
        }
      Rational d = a(col, col);
      for (int j = 0; j < n_; ++j) {
        a(col, j) /= d;
        inv(col, j) /= d;
      }
      for (int r = 0; r < n_; ++r) {
        if (r == col || a(r, col) == 0) continue;
        Rational f = a(r, col);
        for (int j = 0; j < n_; ++j) {
          a(r, j) -= f * a(col, j);
          inv(r, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

using IntMatrix = std::vector<std::vector<long long>>;

}  // namespace wzk
