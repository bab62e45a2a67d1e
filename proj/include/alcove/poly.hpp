#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

// Sparse multivariate polynomial over exact rationals.
// The number of variables is fixed per polynomial; exponent vectors are dense.
class Poly {
 public:
  using Mono = std::vector<int>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int idx, int exp = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  void add_term(const Mono& m, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  Poly operator-() const { return *this * Rat(-1); }
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  int total_degree() const;

  // Substitutes variable i by images[i]; all images share this->nvars() vars.
  Poly substitute(const std::vector<Poly>& images) const;

  // Affine substitution: var i -> sum_j a[i][j] var_j + b[i]. Exact.
  Poly substitute_affine(const std::vector<std::vector<Rat>>& a, const RatVec& b) const;

  Rat eval(const RatVec& point) const;

  // Exact division by an affine-linear polynomial; throws if not divisible.
  Poly divide_by_affine(const Poly& linear) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Mono, Rat> terms_;
};

// All monomials in `nvars` variables of total degree <= d (lex order).
std::vector<Poly::Mono> monomials_up_to(int nvars, int d);

}  // namespace alcove
