#include "alcove/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "alcove/linalg.hpp"

namespace alcove {

namespace {

std::vector<std::vector<long>> cartan_A(int n) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

// Bourbaki C_n: alpha_n long, <alpha_{n-1}, alpha_n^vee> = -1,
// <alpha_n, alpha_{n-1}^vee> = -2.  (C_1 = A_1.)
std::vector<std::vector<long>> cartan_C(int n) {
  auto a = cartan_A(n);
  if (n >= 2) {
    a[n - 2][n - 1] = -2;  // <alpha_n, alpha_{n-1}^vee>
    a[n - 1][n - 2] = -1;  // <alpha_{n-1}, alpha_n^vee>
  }
  return a;
}

void validate_cartan(const std::vector<std::vector<long>>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("empty Cartan matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n) throw std::invalid_argument("Cartan matrix not square");
    if (a[i][i] != 2) throw std::invalid_argument("Cartan diagonal entries must equal 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw std::invalid_argument("off-diagonal Cartan entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw std::invalid_argument("Cartan zero pattern must be symmetric");
    }
  }
  // Connectivity (irreducibility).
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      if (!seen[j] && a[v][j] != 0) { seen[j] = true; stack.push_back(j); }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("Cartan matrix must be irreducible");
  // Symmetrizability: find d_i > 0 with d_i a_ij = d_j a_ji, then require the
  // symmetrized matrix to be positive definite (finite type).
  RatVec d(n, Rat(0));
  d[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == v || a[v][j] == 0) continue;
      Rat want = d[v] * a[v][j] / a[j][v];
      if (d[j] == 0) {
        d[j] = want;
        todo.push_back(j);
      } else if (d[j] != want) {
        throw std::invalid_argument("Cartan matrix is not symmetrizable");
      }
    }
  }
  RatMat sym(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym.at(i, j) = d[i] * a[i][j];
  for (int k = 1; k <= n; ++k) {
    RatMat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = sym.at(i, j);
    if (det(lead) <= 0)
      throw std::invalid_argument("Cartan matrix is not of finite type");
  }
}

}  // namespace

int RootDatum::root_index(const std::vector<long>& w) const {
  for (int k = 0; k < num_roots(); ++k)
    if (roots[k] == w) return k;
  return -1;
}

RootDatum build_root_datum(const std::string& type_tag, int rank,
                           const std::vector<std::vector<long>>& cartan_in) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  RootDatum rd;
  rd.type_tag = type_tag;
  rd.rank = rank;
  if (type_tag == "A") {
    rd.cartan = cartan_A(rank);
  } else if (type_tag == "C") {
    rd.cartan = cartan_C(rank);
  } else if (type_tag == "custom") {
    if (static_cast<int>(cartan_in.size()) != rank)
      throw std::invalid_argument("Cartan matrix size does not match rank");
    rd.cartan = cartan_in;
  } else {
    throw std::invalid_argument("unknown type tag: " + type_tag);
  }
  validate_cartan(rd.cartan);

  int n = rank;
  // Enumerate roots in simple-root coordinates by reflection closure, keeping
  // the coroot of each root alongside.
  struct RC {
    std::vector<long> root;    // simple-root coordinates
    std::vector<long> coroot;  // simple-coroot coordinates
  };
  auto pair_with_coroot_i = [&](const std::vector<long>& root, int i) {
    long v = 0;  // <root, alpha_i^vee> = sum_j root_j a[i][j]
    for (int j = 0; j < n; ++j) v += root[j] * rd.cartan[i][j];
    return v;
  };
  auto pair_alpha_i_with = [&](int i, const std::vector<long>& coroot) {
    long v = 0;  // <alpha_i, coroot> = sum_j coroot_j a[j][i]
    for (int j = 0; j < n; ++j) v += coroot[j] * rd.cartan[j][i];
    return v;
  };

  std::set<std::vector<long>> seen;
  std::vector<RC> all;
  for (int i = 0; i < n; ++i) {
    std::vector<long> r(n, 0), c(n, 0);
    r[i] = 1;
    c[i] = 1;
    all.push_back({r, c});
    seen.insert(r);
  }
  for (size_t head = 0; head < all.size(); ++head) {
    RC cur = all[head];
    for (int i = 0; i < n; ++i) {
      std::vector<long> r = cur.root, c = cur.coroot;
      long pr = pair_with_coroot_i(cur.root, i);
      long pc = pair_alpha_i_with(i, cur.coroot);
      r[i] -= pr;
      for (int j = 0; j < n; ++j) c[j] -= (j == i ? pc : 0);
      if (!seen.count(r)) {
        seen.insert(r);
        all.push_back({r, c});
      }
    }
    if (all.size() > 4096) throw std::invalid_argument("root system too large (not finite type?)");
  }

  // Sort: positive roots by height then lex, then negatives mirrored.
  auto height = [](const std::vector<long>& r) {
    long h = 0;
    for (long x : r) h += x;
    return h;
  };
  std::vector<RC> pos;
  for (const auto& rc : all)
    if (height(rc.root) > 0) pos.push_back(rc);
  std::sort(pos.begin(), pos.end(), [&](const RC& x, const RC& y) {
    long hx = height(x.root), hy = height(y.root);
    if (hx != hy) return hx < hy;
    return x.root < y.root;
  });

  auto to_weight = [&](const std::vector<long>& r) {
    std::vector<long> w(n, 0);
    for (int i = 0; i < n; ++i) w[i] = pair_with_coroot_i(r, i);
    return w;
  };
  for (const auto& rc : pos) {
    rd.roots.push_back(to_weight(rc.root));
    rd.coroots.push_back(rc.coroot);
    rd.positive.push_back(true);
  }
  int np = static_cast<int>(pos.size());
  for (int k = 0; k < np; ++k) {
    std::vector<long> w = rd.roots[k], c = rd.coroots[k];
    for (auto& x : w) x = -x;
    for (auto& x : c) x = -x;
    rd.roots.push_back(w);
    rd.coroots.push_back(c);
    rd.positive.push_back(false);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<long> r(n, 0);
    r[i] = 1;
    std::vector<long> w = to_weight(r);
    rd.simple.push_back(rd.root_index(w));
  }
  rd.highest = np - 1;  // maximal height among positives
  // Sanity: <alpha, alpha^vee> = 2 for all roots.
  for (int k = 0; k < rd.num_roots(); ++k) {
    long p = 0;
    for (int i = 0; i < n; ++i) p += rd.roots[k][i] * rd.coroots[k][i];
    if (p != 2) throw std::logic_error("root/coroot pairing is not 2");
  }
  return rd;
}

Rat pair_root_coweight(const std::vector<long>& w, const FracCoweight& y) {
  assert(w.size() == y.size());
  Rat v = 0;
  for (size_t i = 0; i < w.size(); ++i) v += Rat(w[i]) * y[i];
  return v;
}

bool AffineRoot::is_real() const {
  return std::any_of(finite.begin(), finite.end(), [](long x) { return x != 0; });
}

bool AffineRoot::is_zero_function() const { return !is_real() && level == 0; }

Rat AffineRoot::value(const FracCoweight& y) const {
  Rat v(level);
  for (size_t i = 0; i < finite.size(); ++i) v += Rat(finite[i]) * y[i];
  return v;
}

AffineWeylElement AffineWeylElement::identity(const RootDatum& rd) {
  AffineWeylElement w;
  w.rd_ = &rd;
  int n = rd.rank;
  w.trans_.assign(n, 0);
  w.mat_.assign(n, std::vector<long>(n, 0));
  w.weight_mat_.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) w.mat_[i][i] = w.weight_mat_[i][i] = 1;
  return w;
}

AffineWeylElement AffineWeylElement::simple_reflection(const RootDatum& rd, int idx) {
  int n = rd.rank;
  if (idx < 0 || idx > n) throw std::invalid_argument("bad simple reflection index");
  AffineWeylElement w = identity(rd);
  if (idx >= 1) {
    int i = idx - 1;
    const auto& alpha = rd.roots[rd.simple[i]];      // weight coords
    const auto& alphav = rd.coroots[rd.simple[i]];   // coroot coords
    // On X^vee: y -> y - <alpha, y> alpha^vee. Column j of the matrix is the
    // image of alpha_j^vee: e_j - alpha_j-th weight coord * alpha^vee.
    for (int j = 0; j < n; ++j)
      for (int i2 = 0; i2 < n; ++i2) w.mat_[i2][j] -= alpha[j] * alphav[i2];
    // On X: mu -> mu - <mu, alpha^vee> alpha.
    for (int j = 0; j < n; ++j)
      for (int i2 = 0; i2 < n; ++i2) w.weight_mat_[i2][j] -= alphav[j] * alpha[i2];
  } else {
    // s_0 = t_{theta^vee} s_theta.
    const auto& theta = rd.roots[rd.highest];
    const auto& thetav = rd.coroots[rd.highest];
    for (int j = 0; j < n; ++j)
      for (int i2 = 0; i2 < n; ++i2) w.mat_[i2][j] -= theta[j] * thetav[i2];
    for (int j = 0; j < n; ++j)
      for (int i2 = 0; i2 < n; ++i2) w.weight_mat_[i2][j] -= thetav[j] * theta[i2];
    w.trans_ = thetav;
  }
  return w;
}

AffineWeylElement AffineWeylElement::translation(const RootDatum& rd,
                                                 const std::vector<long>& mu) {
  AffineWeylElement w = identity(rd);
  w.trans_ = mu;
  return w;
}

bool AffineWeylElement::is_identity() const {
  if (!is_finite()) return false;
  for (int i = 0; i < rd_->rank; ++i)
    for (int j = 0; j < rd_->rank; ++j)
      if (mat_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool AffineWeylElement::is_finite() const {
  return std::all_of(trans_.begin(), trans_.end(), [](long x) { return x == 0; });
}

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement& o) const {
  assert(rd_ == o.rd_);
  int n = rd_->rank;
  AffineWeylElement w = identity(*rd_);
  // (t1, w1)(t2, w2) = (t1 + w1 t2, w1 w2)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long s = 0, sw = 0;
      for (int k = 0; k < n; ++k) {
        s += mat_[i][k] * o.mat_[k][j];
        sw += weight_mat_[i][k] * o.weight_mat_[k][j];
      }
      w.mat_[i][j] = s;
      w.weight_mat_[i][j] = sw;
    }
  for (int i = 0; i < n; ++i) {
    long s = trans_[i];
    for (int k = 0; k < n; ++k) s += mat_[i][k] * o.trans_[k];
    w.trans_[i] = s;
  }
  return w;
}

AffineWeylElement AffineWeylElement::inverse() const {
  int n = rd_->rank;
  RatMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = mat_[i][j];
  auto inv = ::alcove::inverse(m);
  assert(inv.has_value());
  AffineWeylElement w = identity(*rd_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      assert(is_integer(inv->at(i, j)));
      w.mat_[i][j] = inv->at(i, j).get_num().get_si();
    }
  // weight matrix of inverse = inverse of weight matrix
  RatMat wm(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) wm.at(i, j) = weight_mat_[i][j];
  auto winv = ::alcove::inverse(wm);
  assert(winv.has_value());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.weight_mat_[i][j] = winv->at(i, j).get_num().get_si();
  // (t, w)^{-1} = (-w^{-1} t, w^{-1})
  for (int i = 0; i < n; ++i) {
    long s = 0;
    for (int k = 0; k < n; ++k) s += w.mat_[i][k] * trans_[k];
    w.trans_[i] = -s;
  }
  return w;
}

bool AffineWeylElement::operator==(const AffineWeylElement& o) const {
  return trans_ == o.trans_ && mat_ == o.mat_;
}

bool AffineWeylElement::operator<(const AffineWeylElement& o) const {
  if (trans_ != o.trans_) return trans_ < o.trans_;
  return mat_ < o.mat_;
}

FracCoweight AffineWeylElement::apply(const FracCoweight& y) const {
  int n = rd_->rank;
  if (static_cast<int>(y.size()) != n) throw std::invalid_argument("coweight dimension mismatch");
  FracCoweight out(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat s(trans_[i]);
    for (int k = 0; k < n; ++k) s += Rat(mat_[i][k]) * y[k];
    out[i] = s;
  }
  return out;
}

std::vector<long> AffineWeylElement::apply_weight(const std::vector<long>& mu) const {
  int n = rd_->rank;
  std::vector<long> out(n, 0);
  for (int i = 0; i < n; ++i) {
    long s = 0;
    for (int k = 0; k < n; ++k) s += weight_mat_[i][k] * mu[k];
    out[i] = s;
  }
  return out;
}

AffineRoot AffineWeylElement::apply(const AffineRoot& a) const {
  // (w.(A, c))(y) = (A, c)(w^{-1} y) = <wA, y> + c - <wA, trans>.
  AffineRoot out;
  out.finite = apply_weight(a.finite);
  long shift = 0;
  for (int i = 0; i < rd_->rank; ++i) shift += out.finite[i] * trans_[i];
  out.level = a.level - shift;
  return out;
}

AffineRoot simple_affine_root(const RootDatum& rd, int idx) {
  AffineRoot a;
  if (idx >= 1) {
    a.finite = rd.roots[rd.simple[idx - 1]];
    a.level = 0;
  } else {
    a.finite = rd.roots[rd.highest];
    for (auto& x : a.finite) x = -x;
    a.level = 1;
  }
  return a;
}

bool affine_root_positive(const RootDatum& rd, const AffineRoot& a) {
  if (!a.is_real()) throw std::invalid_argument("positivity of an imaginary affine root");
  if (a.level != 0) return a.level > 0;
  int idx = rd.root_index(a.finite);
  if (idx < 0) throw std::invalid_argument("finite part is not a root");
  return rd.positive[idx];
}

long AffineWeylElement::length() const { return static_cast<long>(canonical_word().size()); }

std::vector<int> AffineWeylElement::canonical_word() const {
  std::vector<int> word;
  AffineWeylElement w = *this;
  const RootDatum& rd = *rd_;
  long guard = 0;
  while (!w.is_identity()) {
    bool found = false;
    AffineWeylElement winv = w.inverse();
    for (int i = 0; i <= rd.rank; ++i) {
      AffineRoot a = winv.apply(simple_affine_root(rd, i));
      if (!affine_root_positive(rd, a)) {
        word.push_back(i);
        w = simple_reflection(rd, i) * w;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no descent found for a non-identity element");
    if (++guard > 100000) throw std::logic_error("canonical_word did not terminate");
  }
  return word;
}

AffineWeylElement AffineWeylElement::finite_part() const {
  AffineWeylElement w = *this;
  std::fill(w.trans_.begin(), w.trans_.end(), 0L);
  return w;
}

AffineWeylElement word_to_element(const RootDatum& rd, const std::vector<int>& word) {
  AffineWeylElement w = AffineWeylElement::identity(rd);
  for (int i : word) w = w * AffineWeylElement::simple_reflection(rd, i);
  return w;
}

FracCoweight affine_action(const AffineWeylElement& w, const FracCoweight& y) {
  return w.apply(y);
}

std::optional<AffineWeylElement> alcove_of_checked(const RootDatum& rd, const FracCoweight& y,
                                                   WallError* err) {
  if (static_cast<int>(y.size()) != rd.rank) throw std::invalid_argument("coweight dimension mismatch");
  AffineWeylElement w = AffineWeylElement::identity(rd);
  FracCoweight cur = y;
  long guard = 0;
  for (;;) {
    bool moved = false;
    for (int i = 0; i <= rd.rank; ++i) {
      AffineRoot a = simple_affine_root(rd, i);
      Rat v = a.value(cur);
      if (v == 0) {
        if (err) {
          err->on_wall = true;
          // Report the wall through the original point y.
          err->wall = w.inverse().apply(a);
        }
        return std::nullopt;
      }
      if (v < 0) {
        AffineWeylElement s = AffineWeylElement::simple_reflection(rd, i);
        cur = s.apply(cur);
        w = s * w;
        moved = true;
        break;
      }
    }
    if (!moved) break;
    if (++guard > 1000000) throw std::logic_error("alcove walk did not terminate");
  }
  if (err) err->on_wall = false;
  return w;
}

std::string affine_root_str(const AffineRoot& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.finite.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.finite[i]);
  }
  s += "] + " + std::to_string(a.level);
  return s;
}

AffineWeylElement alcove_of(const RootDatum& rd, const FracCoweight& y) {
  WallError err;
  auto w = alcove_of_checked(rd, y, &err);
  if (!w) throw std::domain_error("point lies on the wall of the affine root " + affine_root_str(err.wall));
  return *w;
}

FracCoweight weight_of_alcove(const AffineWeylElement& w, const FracCoweight& lambda0) {
  return w.apply(lambda0);
}

TorusPoint exp_map(const FracCoweight& y) {
  TorusPoint t;
  t.args.reserve(y.size());
  for (const auto& c : y) t.args.push_back(mod1(c));
  return t;
}

FracCoweight fundamental_alcove_point(const RootDatum& rd) {
  int n = rd.rank;
  // rho^vee in simple-coroot coordinates: solve <alpha_j, rho^vee> = 1 for all j.
  RatMat a(n, n), b(n, 1);
  for (int j = 0; j < n; ++j) {
    b.at(j, 0) = 1;
    for (int k = 0; k < n; ++k) a.at(j, k) = rd.cartan[k][j];  // <alpha_j, alpha_k^vee>
  }
  auto sol = solve(a, b);
  assert(sol.has_value());
  long height = 1;
  {
    // Coxeter number h = 1 + height(theta).
    const auto& theta = rd.roots[rd.highest];
    // theta in simple-root coordinates: theta = sum c_i alpha_i with
    // weight-coords theta_j = sum_i c_i cartan[j][i]; solve.
    RatMat ca(n, n), tb(n, 1);
    for (int j = 0; j < n; ++j) {
      tb.at(j, 0) = theta[j];
      for (int i = 0; i < n; ++i) ca.at(j, i) = rd.cartan[j][i];
    }
    auto c = solve(ca, tb);
    assert(c.has_value());
    Rat h = 0;
    for (int i = 0; i < n; ++i) h += c->at(i, 0);
    assert(is_integer(h));
    height += h.get_num().get_si();
  }
  FracCoweight y(n);
  for (int i = 0; i < n; ++i) y[i] = sol->at(i, 0) / height;
  return y;
}

}  // namespace alcove
