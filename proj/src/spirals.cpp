#include "alcove/spirals.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "alcove/linalg.hpp"

namespace alcove {

long GradedSupport::degree_raw(int k) const {
  Rat v = pair_root_coweight(rd->roots[k], theta_tilde);
  if (!is_integer(v))
    throw std::invalid_argument("theta_tilde does not pair integrally with the roots");
  return v.get_num().get_si();
}

long GradedSupport::degree_mod(int k) const {
  long d = degree_raw(k) % m;
  return d < 0 ? d + m : d;
}

bool GradedSupport::root_in_degree(int k, long n) const {
  long nn = n % m;
  if (nn < 0) nn += m;
  return degree_mod(k) == nn;
}

GradedSupport make_graded_support(const RootDatum& rd, long m, const FracCoweight& tt) {
  if (m < 1) throw std::invalid_argument("grading modulus must be >= 1");
  if (static_cast<int>(tt.size()) != rd.rank) throw std::invalid_argument("theta_tilde dimension mismatch");
  GradedSupport s{&rd, m, tt};
  for (int k = 0; k < rd.num_roots(); ++k) s.degree_raw(k);  // validates integrality
  return s;
}

SpiralSlice Spiral::slice(long n) const {
  SpiralSlice out;
  const RootDatum& rd = *support.rd;
  Rat threshold = Rat(n) * epsilon;
  for (int k = 0; k < rd.num_roots(); ++k) {
    if (!support.root_in_degree(k, n)) continue;
    Rat wt = pair_root_coweight(rd.roots[k], lambda);
    if (wt > threshold) {
      out.p.push_back(k);
      out.u.push_back(k);
    } else if (wt == threshold) {
      out.p.push_back(k);
      out.l.push_back(k);
    }
  }
  if (n % support.m == 0 && n == 0) out.torus = true;  // 0 >= 0: t sits in p_0 = l_0
  return out;
}

Spiral spiral_from_coweight(const GradedSupport& support, const FracCoweight& lambda, int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +-1");
  return Spiral{support, lambda, epsilon};
}

Spiral spiral_of_point(const GradedSupport& support, const FracCoweight& y, long d) {
  if (d == 0) throw std::invalid_argument("d must be nonzero");
  // Reject wall points: the construction requires an alcove interior.
  WallError err;
  if (!alcove_of_checked(*support.rd, y, &err))
    throw std::domain_error("point lies on the wall of the affine root " + affine_root_str(err.wall));
  FracCoweight lambda(y.size());
  for (size_t i = 0; i < y.size(); ++i) lambda[i] = support.theta_tilde[i] - Rat(support.m) * y[i];
  return spiral_from_coweight(support, lambda, d > 0 ? 1 : -1);
}

Spiral spiral_of_alcove(const GradedSupport& support, const AffineWeylElement& w, long d) {
  FracCoweight y0 = fundamental_alcove_point(*support.rd);
  FracCoweight y = w.inverse().apply(y0);
  return spiral_of_point(support, y, d);
}

namespace {

ClanHyperplane normalize_hyperplane(std::vector<long> alpha, Rat r) {
  for (long x : alpha) {
    if (x > 0) break;
    if (x < 0) {
      for (auto& y : alpha) y = -y;
      r = -r;
      break;
    }
  }
  return ClanHyperplane{alpha, r};
}

}  // namespace

ClanArrangement clan_arrangement(const GradedSupport& support, long d) {
  if (d == 0) throw std::invalid_argument("d must be nonzero");
  const RootDatum& rd = *support.rd;
  int eps = d > 0 ? 1 : -1;
  std::set<ClanHyperplane> hs;
  for (long n : {d, 0L}) {
    Rat threshold = Rat(n) * eps;
    for (int k = 0; k < rd.num_roots(); ++k) {
      if (!support.root_in_degree(k, n)) continue;
      // <alpha, theta - m y> = threshold  <=>  <alpha, y> = (<alpha,theta> - threshold)/m
      Rat raw(support.degree_raw(k));
      Rat r = (raw - threshold) / support.m;
      hs.insert(normalize_hyperplane(rd.roots[k], r));
    }
  }
  ClanArrangement arr{support, d, {hs.begin(), hs.end()}};
  return arr;
}

// ---- Fourier-Motzkin ----

namespace {

// Eliminates the last variable.
std::vector<LinCon> fm_eliminate_last(const std::vector<LinCon>& cons, int nvars) {
  std::vector<LinCon> lower, upper, rest;
  int k = nvars - 1;
  for (const auto& c : cons) {
    if (c.a[k] > 0) lower.push_back(c);       // y_k > (-c - a'.y')/a_k
    else if (c.a[k] < 0) upper.push_back(c);  // y_k < ...
    else rest.push_back(c);
  }
  for (const auto& lo : lower)
    for (const auto& up : upper) {
      // a_lo[k] > 0, a_up[k] < 0: combine a_lo[k]*up - a_up[k]*lo... use
      // positive combination eliminating y_k: up*a_lo[k] + lo*(-a_up[k]).
      LinCon c;
      c.a.assign(nvars, Rat(0));
      Rat f1 = lo.a[k], f2 = -up.a[k];
      for (int i = 0; i < nvars; ++i) c.a[i] = up.a[i] * f1 + lo.a[i] * f2;
      c.c = up.c * f1 + lo.c * f2;
      c.strict = lo.strict || up.strict;
      assert(c.a[k] == 0);
      rest.push_back(c);
    }
  for (auto& c : rest) c.a.resize(nvars - 1);
  return rest;
}

bool constant_consistent(const std::vector<LinCon>& cons) {
  for (const auto& c : cons) {
    if (c.strict ? !(c.c > 0) : !(c.c >= 0)) return false;
  }
  return true;
}

}  // namespace

std::optional<RatVec> fm_witness(int nvars, const std::vector<LinCon>& cons) {
  if (nvars == 0) return constant_consistent(cons) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
  std::vector<LinCon> reduced = fm_eliminate_last(cons, nvars);
  auto sub = fm_witness(nvars - 1, reduced);
  if (!sub) return std::nullopt;
  // Back-substitute: bounds on y_{nvars-1} given sub.
  bool has_lo = false, has_up = false;
  Rat lo, up;
  int k = nvars - 1;
  for (const auto& c : cons) {
    if (c.a[k] == 0) continue;
    Rat rhs = -c.c;
    for (int i = 0; i < k; ++i) rhs -= c.a[i] * (*sub)[i];
    rhs /= c.a[k];
    if (c.a[k] > 0) {  // y_k > rhs (or >=)
      if (!has_lo || rhs > lo) { lo = rhs; has_lo = true; }
    } else {
      if (!has_up || rhs < up) { up = rhs; has_up = true; }
    }
  }
  Rat val;
  if (has_lo && has_up) val = (lo + up) / 2;
  else if (has_lo) val = lo + 1;
  else if (has_up) val = up - 1;
  else val = 0;
  RatVec out = *sub;
  out.push_back(val);
  // Strictness can in principle bite at the midpoint only if lo == up; the
  // recursion guarantees lo < up for strict systems, but verify anyway.
  for (const auto& c : cons) {
    Rat v = c.c;
    for (int i = 0; i < nvars; ++i) v += c.a[i] * out[i];
    if (c.strict ? !(v > 0) : !(v >= 0)) return std::nullopt;
  }
  return out;
}

bool fm_bounded_above(int nvars, const std::vector<LinCon>& cons, const RatVec& c) {
  // sup is finite iff no recession direction v with A v >= 0 and c.v > 0.
  std::vector<LinCon> rec;
  for (const auto& con : cons) rec.push_back(LinCon{con.a, Rat(0), false});
  rec.push_back(LinCon{c, Rat(0), true});
  return !fm_witness(nvars, rec).has_value();
}

namespace {

std::vector<LinCon> clan_constraints(const ClanArrangement& arr, const std::vector<int>& signs) {
  std::vector<LinCon> cons;
  for (size_t h = 0; h < arr.hyperplanes.size(); ++h) {
    const auto& hp = arr.hyperplanes[h];
    LinCon c;
    c.a.assign(arr.support.rd->rank, Rat(0));
    for (int i = 0; i < arr.support.rd->rank; ++i) c.a[i] = Rat(hp.alpha[i]) * signs[h];
    c.c = -hp.r * signs[h];
    c.strict = true;
    cons.push_back(c);
  }
  return cons;
}

bool clan_is_bounded(const ClanArrangement& arr, const std::vector<LinCon>& cons) {
  int n = arr.support.rd->rank;
  for (int i = 0; i < n; ++i) {
    RatVec e(n, Rat(0));
    e[i] = 1;
    if (!fm_bounded_above(n, cons, e)) return false;
    e[i] = -1;
    if (!fm_bounded_above(n, cons, e)) return false;
  }
  return true;
}

bool clan_is_generic(const ClanArrangement& arr, const std::vector<LinCon>& cons) {
  const RootDatum& rd = *arr.support.rd;
  int n = rd.rank;
  for (int k = 0; k < rd.num_roots(); ++k) {
    RatVec a(n);
    for (int i = 0; i < n; ++i) a[i] = rd.roots[k][i];
    bool unb_above = !fm_bounded_above(n, cons, a);
    RatVec ma(n);
    for (int i = 0; i < n; ++i) ma[i] = -a[i];
    bool unb_below = !fm_bounded_above(n, cons, ma);
    if (!unb_above && !unb_below) return false;
  }
  return true;
}

// Extreme-ray generators of the closed cone {v : A v >= 0} in rank <= 3,
// by brute force over facet subsets; informational only.
std::vector<RatVec> recession_generators(int nvars, const std::vector<LinCon>& cons) {
  std::vector<RatVec> rays;
  if (nvars == 0) return rays;
  std::vector<RatVec> normals;
  for (const auto& c : cons) normals.push_back(c.a);
  auto in_cone = [&](const RatVec& v) {
    for (const auto& a : normals) {
      Rat s = 0;
      for (int i = 0; i < nvars; ++i) s += a[i] * v[i];
      if (s < 0) return false;
    }
    return true;
  };
  auto add_ray = [&](RatVec v) {
    // normalize by first nonzero coordinate
    Rat lead = 0;
    for (const auto& x : v)
      if (x != 0) { lead = abs(x); break; }
    if (lead == 0) return;
    for (auto& x : v) x /= lead;
    for (const auto& r : rays)
      if (r == v) return;
    rays.push_back(v);
  };
  if (nvars == 1) {
    for (Rat s : {Rat(1), Rat(-1)}) {
      RatVec v{s};
      if (in_cone(v)) add_ray(v);
    }
    return rays;
  }
  // Candidate rays: kernels of (nvars-1)-subsets of the normals, padded with
  // coordinate hyperplanes so the full-dimensional case yields rays too.
  std::vector<RatVec> pool = normals;
  for (int i = 0; i < nvars; ++i) {
    RatVec e(nvars, Rat(0));
    e[i] = 1;
    pool.push_back(e);
  }
  int np = static_cast<int>(pool.size());
  std::vector<int> idx(nvars - 1);
  std::vector<int> comb(nvars - 1, 0);
  // iterate over all (nvars-1)-combinations
  std::vector<int> c(nvars - 1);
  for (int i = 0; i < nvars - 1; ++i) c[i] = i;
  if (np < nvars - 1) return rays;
  for (;;) {
    RatMat m(nvars - 1, nvars);
    for (int i = 0; i < nvars - 1; ++i)
      for (int j = 0; j < nvars; ++j) m.at(i, j) = pool[c[i]][j];
    RatMat ker = kernel_basis(m);
    if (ker.cols() == 1) {
      RatVec v(nvars), mv(nvars);
      for (int i = 0; i < nvars; ++i) {
        v[i] = ker.at(i, 0);
        mv[i] = -ker.at(i, 0);
      }
      if (in_cone(v)) add_ray(v);
      if (in_cone(mv)) add_ray(mv);
    }
    // next combination
    int i = nvars - 2;
    while (i >= 0 && c[i] == np - (nvars - 1) + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < nvars - 1; ++j) c[j] = c[j - 1] + 1;
  }
  return rays;
}

// Interior witness that additionally avoids every affine root hyperplane, so
// it determines an alcove. The clan is open, so repeatedly cutting away the
// wall the current witness sits on stays feasible.
std::optional<RatVec> off_wall_witness(const RootDatum& rd, std::vector<LinCon> cons) {
  int n = rd.rank;
  for (int guard = 0; guard < 200; ++guard) {
    auto w = fm_witness(n, cons);
    if (!w) return std::nullopt;
    WallError err;
    if (alcove_of_checked(rd, *w, &err)) return w;
    LinCon c;
    c.a.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) c.a[i] = err.wall.finite[i];
    c.c = err.wall.level;
    c.strict = true;
    std::vector<LinCon> plus = cons;
    plus.push_back(c);
    if (fm_witness(n, plus)) {
      cons = plus;
    } else {
      for (auto& x : c.a) x = -x;
      c.c = -c.c;
      cons.push_back(c);
    }
  }
  throw std::logic_error("failed to find an off-wall interior point");
}

}  // namespace

std::vector<Clan> enumerate_clans(const GradedSupport& support, long d) {
  ClanArrangement arr = clan_arrangement(support, d);
  int nh = static_cast<int>(arr.hyperplanes.size());
  int n = support.rd->rank;
  std::vector<Clan> out;
  // Depth-first sign assignment with feasibility pruning.
  std::vector<int> signs(nh, 0);
  std::vector<LinCon> cons;
  auto rec = [&](auto&& self, int h) -> void {
    if (h == nh) {
      auto w = off_wall_witness(*support.rd, cons);
      if (!w) return;
      Clan clan;
      clan.signs = signs;
      clan.witness = *w;
      clan.bounded = clan_is_bounded(arr, cons);
      clan.generic = clan_is_generic(arr, cons);
      if (!clan.bounded) clan.recession_rays = recession_generators(n, cons);
      out.push_back(clan);
      return;
    }
    for (int s : {+1, -1}) {
      signs[h] = s;
      const auto& hp = arr.hyperplanes[h];
      LinCon c;
      c.a.assign(n, Rat(0));
      for (int i = 0; i < n; ++i) c.a[i] = Rat(hp.alpha[i]) * s;
      c.c = -hp.r * s;
      c.strict = true;
      cons.push_back(c);
      if (fm_witness(n, cons)) self(self, h + 1);
      cons.pop_back();
    }
    signs[h] = 0;
  };
  rec(rec, 0);
  // Deterministic order: lexicographic by sign vector (+1 before -1).
  std::sort(out.begin(), out.end(), [](const Clan& a, const Clan& b) { return a.signs > b.signs; });
  return out;
}

bool is_generic(const Clan& clan, const ClanArrangement& arr) {
  auto cons = clan_constraints(arr, clan.signs);
  return clan_is_generic(arr, cons);
}

BorelDescriptor borel_of_generic_clan(const Clan& clan, const ClanArrangement& arr) {
  if (!clan.generic) throw std::invalid_argument("clan is not generic");
  const RootDatum& rd = *arr.support.rd;
  int n = rd.rank;
  auto cons = clan_constraints(arr, clan.signs);
  // Roots bounded below on the clan.
  std::vector<int> bounded_below;
  for (int k = 0; k < rd.num_roots(); ++k) {
    RatVec ma(n);
    for (int i = 0; i < n; ++i) ma[i] = -Rat(rd.roots[k][i]);
    if (fm_bounded_above(n, cons, ma)) bounded_below.push_back(k);
  }
  // v in the interior of the dual cone, made regular by adding root
  // constraints one at a time.
  std::vector<LinCon> vc;
  for (int k : bounded_below) {
    LinCon c;
    c.a.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) c.a[i] = rd.roots[k][i];
    c.c = 0;
    c.strict = true;
    vc.push_back(c);
  }
  auto v = fm_witness(n, vc);
  if (!v) throw std::logic_error("dual cone of a generic clan has empty interior");
  for (int k = 0; k < rd.num_roots(); ++k) {
    RatVec a(n);
    for (int i = 0; i < n; ++i) a[i] = rd.roots[k][i];
    Rat val = 0;
    for (int i = 0; i < n; ++i) val += a[i] * (*v)[i];
    if (val != 0) continue;
    for (int s : {+1, -1}) {
      LinCon c;
      c.a.assign(n, Rat(0));
      for (int i = 0; i < n; ++i) c.a[i] = Rat(a[i]) * s;
      c.c = 0;
      c.strict = true;
      vc.push_back(c);
      auto v2 = fm_witness(n, vc);
      if (v2) { v = v2; break; }
      vc.pop_back();
    }
    Rat val2 = 0;
    for (int i = 0; i < n; ++i) val2 += a[i] * (*v)[i];
    if (val2 == 0) throw std::logic_error("failed to make v regular");
  }
  BorelDescriptor out;
  out.v = *v;
  long d = arr.d;
  for (int k = 0; k < rd.num_roots(); ++k) {
    Rat val = 0;
    for (int i = 0; i < n; ++i) val += Rat(rd.roots[k][i]) * (*v)[i];
    if (val < 0) {  // <alpha, -v> > 0
      out.positive_roots.push_back(k);
      if (arr.support.root_in_degree(k, d)) out.nilrad_d.push_back(k);
    }
  }
  // Certificate: u_d computed at the clan witness equals the Borel slice.
  Spiral sp = spiral_of_point(arr.support, clan.witness, d);
  SpiralSlice sl = sp.slice(d);
  if (sl.u != out.nilrad_d)
    throw std::logic_error("generic-clan degeneration certificate failed");
  return out;
}

}  // namespace alcove
