#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

// Exact root datum of a finite crystallographic root system, simply
// connected normalization.
//
// Coordinate conventions, used consistently everywhere:
//  - elements of X (weights, roots) are stored in the fundamental-weight
//    basis, i.e. a root alpha is the integer vector (<alpha, alpha_j^vee>)_j;
//  - elements of X^vee tensor Q (coweights, points of E) are stored in the
//    simple-coroot basis, so that the pairing <mu, y> is the plain dot
//    product of the two coordinate vectors.
// For A1 this makes E = Q * alpha^vee, the fundamental alcove ]0, 1/2[ and
// the base weight 1/4 literal rational numbers.
struct RootDatum {
  std::string type_tag;  // "A", "C" or "custom"
  int rank = 0;
  std::vector<std::vector<long>> cartan;   // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<long>> roots;    // fundamental-weight coordinates
  std::vector<std::vector<long>> coroots;  // simple-coroot coordinates
  std::vector<int> simple;                 // indices of simple roots in `roots`
  std::vector<bool> positive;              // positivity flag per root
  int highest = -1;                        // index of the highest root

  int num_roots() const { return static_cast<int>(roots.size()); }
  // Index of a root given by fundamental-weight coordinates; -1 if absent.
  int root_index(const std::vector<long>& weight_coords) const;
};

// type_tag "A" or "C" with Bourbaki numbering, or "custom" with an explicit
// Cartan matrix (must be irreducible, crystallographic, finite type).
RootDatum build_root_datum(const std::string& type_tag, int rank,
                           const std::vector<std::vector<long>>& cartan = {});

using FracCoweight = RatVec;  // simple-coroot coordinates, exact rationals

Rat pair_root_coweight(const std::vector<long>& weight_coords, const FracCoweight& y);

// Affine root alpha + n viewed as the affine function <alpha, .> + n on E.
// finite == 0 is allowed only with level != 0 (imaginary roots), and such
// roots are never produced by the group action helpers here.
struct AffineRoot {
  std::vector<long> finite;  // fundamental-weight coordinates; may be zero
  long level = 0;

  bool is_real() const;
  bool is_zero_function() const;
  Rat value(const FracCoweight& y) const;
  bool operator==(const AffineRoot& o) const { return finite == o.finite && level == o.level; }
};

// Element of the affine Weyl group X^vee \rtimes W, acting on E by
// y -> w(y) + translation.
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  static AffineWeylElement identity(const RootDatum& rd);
  // Simple reflection; index 0 is the affine one, 1..rank the finite ones.
  static AffineWeylElement simple_reflection(const RootDatum& rd, int idx);
  static AffineWeylElement translation(const RootDatum& rd, const std::vector<long>& coroot_coords);

  const RootDatum* datum() const { return rd_; }
  const std::vector<long>& trans() const { return trans_; }
  // Matrix of the finite part on X^vee in simple-coroot coordinates
  // (columns are images of the simple coroots).
  const std::vector<std::vector<long>>& finite_matrix() const { return mat_; }

  bool is_identity() const;
  bool is_finite() const;  // trivial translation part

  AffineWeylElement operator*(const AffineWeylElement& o) const;
  AffineWeylElement inverse() const;
  bool operator==(const AffineWeylElement& o) const;
  bool operator<(const AffineWeylElement& o) const;  // for map keys

  FracCoweight apply(const FracCoweight& y) const;
  AffineRoot apply(const AffineRoot& a) const;
  // Action of the finite part on X in fundamental-weight coordinates.
  std::vector<long> apply_weight(const std::vector<long>& mu) const;

  long length() const;
  // Lexicographically least reduced word, letters in {0, 1, .., rank}.
  std::vector<int> canonical_word() const;

  // Finite part as an element of W (translation dropped).
  AffineWeylElement finite_part() const;

 private:
  const RootDatum* rd_ = nullptr;
  std::vector<long> trans_;
  std::vector<std::vector<long>> mat_;
  std::vector<std::vector<long>> weight_mat_;  // contragredient action on X

  friend AffineWeylElement word_to_element(const RootDatum& rd, const std::vector<int>& word);
};

AffineWeylElement word_to_element(const RootDatum& rd, const std::vector<int>& word);

// The i-th simple affine root: alpha_i for i >= 1, 1 - theta for i = 0.
AffineRoot simple_affine_root(const RootDatum& rd, int idx);

bool affine_root_positive(const RootDatum& rd, const AffineRoot& a);

// w lambda for the group action on E (same as w.apply, spec-facing name).
FracCoweight affine_action(const AffineWeylElement& w, const FracCoweight& y);

struct WallError {
  bool on_wall = false;
  AffineRoot wall;  // the vanishing affine root when on_wall
};

std::string affine_root_str(const AffineRoot& a);

// Unique w with w(y) in the fundamental alcove; error if y lies on a wall.
// Convention: y belongs to the alcove w^{-1} nu_0.
AffineWeylElement alcove_of(const RootDatum& rd, const FracCoweight& y);
std::optional<AffineWeylElement> alcove_of_checked(const RootDatum& rd, const FracCoweight& y,
                                                   WallError* err);

FracCoweight weight_of_alcove(const AffineWeylElement& w, const FracCoweight& lambda0);

// Point of the torus X^vee tensor C^*, restricted to rational arguments:
// coordinates are the arguments reduced mod 1.
struct TorusPoint {
  RatVec args;  // in [0,1), simple-coroot coordinates
  bool operator==(const TorusPoint& o) const { return args == o.args; }
};

TorusPoint exp_map(const FracCoweight& y);

// Canonical interior point of the fundamental alcove: rho^vee / h.
FracCoweight fundamental_alcove_point(const RootDatum& rd);

}  // namespace alcove
