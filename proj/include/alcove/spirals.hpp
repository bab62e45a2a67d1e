#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alcove/rootdata.hpp"

namespace alcove {

// Z/m-grading of the root spaces determined by a lift theta_tilde of theta:
// the root space g_alpha sits in degree <alpha, theta_tilde> mod m, the
// Cartan in degree 0.
struct GradedSupport {
  const RootDatum* rd = nullptr;
  long m = 1;
  FracCoweight theta_tilde;  // simple-coroot coordinates

  long degree_raw(int root_idx) const;              // <alpha, theta_tilde>, an integer
  long degree_mod(int root_idx) const;              // reduced to [0, m)
  bool root_in_degree(int root_idx, long n) const;  // degree = n mod m
};

GradedSupport make_graded_support(const RootDatum& rd, long m, const FracCoweight& theta_tilde);

// One Z-graded piece of a spiral: p_n = l_n + u_n as root sets, plus whether
// the Cartan subalgebra is included (degree 0 only).
struct SpiralSlice {
  std::vector<int> p, l, u;  // root indices, sorted
  bool torus = false;
};

// Spiral attached to a fractional coweight and a sign, sliced on demand.
struct Spiral {
  GradedSupport support;
  FracCoweight lambda;  // the defining fractional cocharacter
  int epsilon = 1;

  SpiralSlice slice(long n) const;
};

// p_n / l_n / u_n of the spiral attached to lambda: roots alpha of degree
// n mod m whose lambda-weight <alpha, lambda> is >= / = / > n*epsilon.
Spiral spiral_from_coweight(const GradedSupport& support, const FracCoweight& lambda, int epsilon);

// Spiral attached to the alcove w^{-1} nu_0: lambda = theta_tilde - m y for
// any interior point y of the alcove.
Spiral spiral_of_alcove(const GradedSupport& support, const AffineWeylElement& w, long d);
Spiral spiral_of_point(const GradedSupport& support, const FracCoweight& y, long d);

// Affine hyperplane <alpha, y> = r in E, normalized so the first nonzero
// coordinate of alpha is positive.
struct ClanHyperplane {
  std::vector<long> alpha;  // fundamental-weight coordinates
  Rat r;
  bool operator==(const ClanHyperplane& o) const { return alpha == o.alpha && r == o.r; }
  bool operator<(const ClanHyperplane& o) const {
    if (alpha != o.alpha) return alpha < o.alpha;
    return r < o.r;
  }
};

struct ClanArrangement {
  GradedSupport support;
  long d = 1;
  std::vector<ClanHyperplane> hyperplanes;  // sorted, deduplicated
};

// Walls where the degree-d or degree-0 slice of the spiral of (equa-style)
// lambda = theta_tilde - m y changes.
ClanArrangement clan_arrangement(const GradedSupport& support, long d);

struct Clan {
  std::vector<int> signs;    // +1/-1 per hyperplane of the arrangement
  FracCoweight witness;      // interior rational point
  bool bounded = false;
  bool generic = false;
  std::vector<RatVec> recession_rays;  // generators of the recession cone
};

std::vector<Clan> enumerate_clans(const GradedSupport& support, long d);

bool is_generic(const Clan& clan, const ClanArrangement& arr);

// Borel data produced by degenerating a generic clan: a regular coweight v
// interior to the dual cone of the roots bounded below on the clan, the
// positive system of the Borel determined by -v, and its degree-d slice.
struct BorelDescriptor {
  FracCoweight v;
  std::vector<int> positive_roots;  // roots with <alpha, -v> > 0
  std::vector<int> nilrad_d;        // the degree-d part of the nilradical
};

BorelDescriptor borel_of_generic_clan(const Clan& clan, const ClanArrangement& arr);

// ---- exact linear feasibility (Fourier-Motzkin) ----

// A linear constraint a.y + c (>|>=) 0.
struct LinCon {
  RatVec a;
  Rat c;
  bool strict = true;
};

// Interior witness for a system of constraints, or nullopt if infeasible.
std::optional<RatVec> fm_witness(int nvars, const std::vector<LinCon>& cons);

// Is c.y bounded above on the (nonempty, open) solution set?
bool fm_bounded_above(int nvars, const std::vector<LinCon>& cons, const RatVec& c);

}  // namespace alcove
