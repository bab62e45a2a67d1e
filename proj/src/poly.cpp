#include "alcove/poly.hpp"

#include <cassert>
#include <stdexcept>

namespace alcove {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  if (c != 0) p.terms_[Mono(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(int nvars, int idx, int exp) {
  assert(idx >= 0 && idx < nvars);
  Poly p(nvars);
  Mono m(nvars, 0);
  m[idx] = exp;
  p.terms_[m] = 1;
  return p;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  assert(static_cast<int>(m.size()) == nvars_);
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly p = *this;
  for (const auto& [m, c] : o.terms_) p.add_term(m, c);
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly p = *this;
  for (const auto& [m, c] : o.terms_) p.add_term(m, -c);
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly p(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Mono m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
      p.add_term(m, c1 * c2);
    }
  return p;
}

Poly Poly::operator*(const Rat& s) const {
  Poly p(nvars_);
  if (s == 0) return p;
  for (const auto& [m, c] : terms_) p.terms_[m] = c * s;
  return p;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (int e : m) t += e;
    if (t > d) d = t;
  }
  return d;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  assert(static_cast<int>(images.size()) == nvars_);
  int nv = nvars_ ? images[0].nvars() : 0;
  Poly out(nv);
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(nv, c);
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t = t * images[i];
    out = out + t;
  }
  return out;
}

Poly Poly::substitute_affine(const std::vector<std::vector<Rat>>& a, const RatVec& b) const {
  std::vector<Poly> images;
  images.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    Poly im = Poly::constant(nvars_, b[i]);
    for (int j = 0; j < nvars_; ++j)
      if (a[i][j] != 0) im = im + Poly::variable(nvars_, j) * a[i][j];
    images.push_back(im);
  }
  return substitute(images);
}

Rat Poly::eval(const RatVec& point) const {
  assert(static_cast<int>(point.size()) == nvars_);
  Rat out = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    out += t;
  }
  return out;
}

Poly Poly::divide_by_affine(const Poly& linear) const {
  assert(nvars_ == linear.nvars());
  if (linear.total_degree() > 1 || linear.is_zero())
    throw std::invalid_argument("divisor must be affine-linear and nonzero");
  // Pick a variable with nonzero coefficient in the divisor.
  int var = -1;
  Rat lead;
  Rat cst = 0;
  std::vector<std::pair<int, Rat>> lin_terms;
  for (const auto& [m, c] : linear.terms()) {
    int deg = 0, idx = -1;
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) { deg += m[i]; idx = i; }
    if (deg == 0) {
      cst = c;
    } else {
      lin_terms.push_back({idx, c});
      if (var < 0) { var = idx; lead = c; }
    }
  }
  if (var < 0) throw std::invalid_argument("divisor is a nonzero constant with no variable part");
  // Long division viewing the dividend as a univariate polynomial in `var`.
  // divisor = lead*x_var + rest, with rest = cst + other linear terms.
  Poly rest = linear - Poly::variable(nvars_, var) * lead;
  Poly rem = *this;
  Poly quo(nvars_);
  while (!rem.is_zero()) {
    // Highest power of x_var in rem.
    int top = 0;
    for (const auto& [m, c] : rem.terms()) top = std::max(top, m[var]);
    if (top == 0) break;
    Poly lead_coeff(nvars_);  // coefficient of x_var^top, with x_var removed
    for (const auto& [m, c] : rem.terms())
      if (m[var] == top) {
        Mono m2 = m;
        m2[var] = 0;
        lead_coeff.add_term(m2, c);
      }
    Poly qterm = lead_coeff * (1 / lead) * Poly::variable(nvars_, var, top - 1);
    quo = quo + qterm;
    rem = rem - qterm * linear;
  }
  if (!rem.is_zero()) throw std::runtime_error("polynomial not divisible by the given affine form");
  return quo;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string t = rat_str(c);
    for (int i = 0; i < nvars_; ++i) {
      if (!m[i]) continue;
      t += "*" + names[i];
      if (m[i] > 1) t += "^" + std::to_string(m[i]);
    }
    if (!first) out += " + ";
    out += t;
    first = false;
  }
  return out;
}

static void mono_rec(int nvars, int d, int i, Poly::Mono& cur, std::vector<Poly::Mono>& out) {
  if (i == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur[i] = e;
    mono_rec(nvars, d - e, i + 1, cur, out);
  }
  cur[i] = 0;
}

std::vector<Poly::Mono> monomials_up_to(int nvars, int d) {
  std::vector<Poly::Mono> out;
  Poly::Mono cur(nvars, 0);
  mono_rec(nvars, d, 0, cur, out);
  return out;
}

}  // namespace alcove
