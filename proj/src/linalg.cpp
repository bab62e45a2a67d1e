#include "alcove/linalg.hpp"

#include <stdexcept>

namespace alcove {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
  assert(r_ == o.r_ && c_ == o.c_);
  RatMat m(r_, c_);
  for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] + o.d_[i];
  return m;
}

RatMat RatMat::operator-(const RatMat& o) const {
  assert(r_ == o.r_ && c_ == o.c_);
  RatMat m(r_, c_);
  for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] - o.d_[i];
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  assert(c_ == o.r_);
  RatMat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.c_; ++j) {
        if (o.at(k, j) == 0) continue;
        m.at(i, j) += a * o.at(k, j);
      }
    }
  return m;
}

RatMat RatMat::operator*(const Rat& s) const {
  RatMat m(r_, c_);
  for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i] * s;
  return m;
}

RatMat RatMat::transpose() const {
  RatMat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool RatMat::is_zero() const {
  for (const auto& x : d_)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::pow(long k) const {
  assert(r_ == c_);
  RatMat acc = identity(r_), base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

RatMat RatMat::hcat(const RatMat& o) const {
  assert(r_ == o.r_);
  RatMat m(r_, c_ + o.c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
    for (int j = 0; j < o.c_; ++j) m.at(i, c_ + j) = o.at(i, j);
  }
  return m;
}

int rank_bareiss(const RatMat& m) {
  int r = m.rows(), c = m.cols();
  if (r == 0 || c == 0) return 0;
  // Clear denominators per row: rank is unchanged by row scaling.
  std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(c));
  for (int i = 0; i < r; ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < c; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < c; ++j) {
      Rat v = m.at(i, j) * Rat(lcm);
      assert(v.get_den() == 1);
      a[i][j] = v.get_num();
    }
  }
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int i = rank + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j) {
        mpz_class num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = q;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  int r = m.rows(), c = m.cols(), row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int piv = -1;
    for (int i = row; i < r; ++i)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < c; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < c; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < c; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank_rref(const RatMat& m) {
  RatMat cp = m;
  return static_cast<int>(rref(cp).size());
}

RatMat kernel_basis(const RatMat& m) {
  RatMat cp = m;
  std::vector<int> piv = rref(cp);
  int c = m.cols();
  std::vector<bool> is_piv(c, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < c; ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  RatMat ker(c, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ker.at(fc, static_cast<int>(k)) = 1;
    for (size_t i = 0; i < piv.size(); ++i) ker.at(piv[i], static_cast<int>(k)) = -cp.at(static_cast<int>(i), fc);
  }
  return ker;
}

std::optional<RatMat> solve(const RatMat& m, const RatMat& b) {
  assert(m.rows() == b.rows());
  RatMat aug = m.hcat(b);
  std::vector<int> piv = rref(aug);
  for (int p : piv)
    if (p >= m.cols()) return std::nullopt;  // pivot in the RHS block
  RatMat x(m.cols(), b.cols());
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(piv[i], j) = aug.at(static_cast<int>(i), m.cols() + j);
  return x;
}

std::optional<RatMat> inverse(const RatMat& m) {
  assert(m.rows() == m.cols());
  RatMat aug = m.hcat(RatMat::identity(m.rows()));
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) != m.rows()) return std::nullopt;
  RatMat inv(m.rows(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) inv.at(i, j) = aug.at(i, m.cols() + j);
  return inv;
}

Rat det(const RatMat& m) {
  assert(m.rows() == m.cols());
  RatMat a = m;
  int n = a.rows();
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      d = -d;
    }
    d *= a.at(col, col);
    Rat inv = 1 / a.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      Rat f = a.at(i, col) * inv;
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return d;
}

RatVec char_poly(const RatMat& m) {
  int n = m.rows();
  assert(n == m.cols());
  // Faddeev-LeVerrier: M_1 = A, c_{n-k} built from traces.
  RatVec c(n + 1, Rat(0));
  c[n] = 1;
  RatMat M = RatMat::zero(n, n);
  for (int k = 1; k <= n; ++k) {
    M = m * M;
    for (int i = 0; i < n; ++i) M.at(i, i) += c[n - k + 1];
    RatMat AM = m * M;
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += AM.at(i, i);
    c[n - k] = -tr / k;
  }
  // The recurrence above computes det(tI - m) directly.
  return c;
}

RatMat column_space_basis(const RatMat& m) {
  RatMat t = m.transpose();
  std::vector<int> piv = rref(t);
  RatMat out(m.rows(), static_cast<int>(piv.size()));
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < m.rows(); ++j) out.at(j, static_cast<int>(i)) = t.at(static_cast<int>(i), j);
  return out;
}

RatMat intersect_columns(const RatMat& a, const RatMat& b) {
  assert(a.rows() == b.rows());
  if (a.cols() == 0 || b.cols() == 0) return RatMat(a.rows(), 0);
  // Solve a x = b y: kernel of [a | -b].
  RatMat sys = a.hcat(b * Rat(-1));
  RatMat ker = kernel_basis(sys);
  RatMat xs(a.cols(), ker.cols());
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < ker.cols(); ++j) xs.at(i, j) = ker.at(i, j);
  return column_space_basis(a * xs);
}

bool contains_columns(const RatMat& space, const RatMat& vecs) {
  if (vecs.cols() == 0) return true;
  return rank_rref(space.hcat(vecs)) == rank_rref(space);
}

}  // namespace alcove
