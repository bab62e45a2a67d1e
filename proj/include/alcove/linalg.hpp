#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

// Dense matrix over exact rationals. Row-major.
class RatMat {
 public:
  RatMat() : r_(0), c_(0) {}
  RatMat(int r, int c) : r_(r), c_(c), d_(static_cast<size_t>(r) * c, Rat(0)) {}

  static RatMat identity(int n);
  static RatMat zero(int r, int c) { return RatMat(r, c); }

  int rows() const { return r_; }
  int cols() const { return c_; }

  Rat& at(int i, int j) { return d_[static_cast<size_t>(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return d_[static_cast<size_t>(i) * c_ + j]; }

  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator*(const Rat& s) const;
  bool operator==(const RatMat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }

  RatMat transpose() const;
  bool is_zero() const;
  RatMat pow(long k) const;

  // Columns of `o` appended on the right.
  RatMat hcat(const RatMat& o) const;

 private:
  int r_, c_;
  std::vector<Rat> d_;
};

// Rank by fraction-free (Bareiss) elimination on the integer matrix obtained
// by clearing denominators row by row.
int rank_bareiss(const RatMat& m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMat& m);

int rank_rref(const RatMat& m);

// Basis of the right kernel, as columns of the returned matrix.
RatMat kernel_basis(const RatMat& m);

// Solves m x = b; empty optional if inconsistent.
std::optional<RatMat> solve(const RatMat& m, const RatMat& b);

std::optional<RatMat> inverse(const RatMat& m);

Rat det(const RatMat& m);

// Characteristic polynomial coefficients c_0..c_n with
// det(tI - m) = sum_k c_k t^k (Faddeev-LeVerrier).
RatVec char_poly(const RatMat& m);

// Column span helpers used by the subspace computations in the quiver module.
// Subspaces are represented by matrices whose columns form a basis.
RatMat column_space_basis(const RatMat& m);
RatMat intersect_columns(const RatMat& a, const RatMat& b);
bool contains_columns(const RatMat& space, const RatMat& vecs);

}  // namespace alcove
