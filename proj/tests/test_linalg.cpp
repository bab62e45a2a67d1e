#include "doctest.h"

#include "alcove/linalg.hpp"
#include "alcove/poly.hpp"

using namespace alcove;

TEST_CASE("rank: bareiss agrees with rref on random rational matrices") {
  unsigned long long s = 12345;
  auto next = [&]() { s = s * 6364136223846793005ULL + 1442695040888963407ULL; return s >> 33; };
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + next() % 5, c = 1 + next() % 5;
    RatMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        m.at(i, j) = make_rat(static_cast<long>(next() % 7) - 3, 1 + static_cast<long>(next() % 3));
    CHECK(rank_bareiss(m) == rank_rref(m));
  }
}

TEST_CASE("kernel and solve") {
  RatMat m(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
  RatMat ker = kernel_basis(m);
  CHECK(ker.cols() == 2);
  CHECK((m * ker).is_zero());

  RatMat a(2, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 1; a.at(1, 0) = 0; a.at(1, 1) = 2;
  RatMat b(2, 1);
  b.at(0, 0) = 3; b.at(1, 0) = 4;
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == RatMat::identity(2));
}

TEST_CASE("char_poly of a companion-like matrix") {
  RatMat m(2, 2);
  m.at(0, 0) = Rat(1, 4); m.at(0, 1) = Rat(-1, 2);
  m.at(1, 0) = 0;         m.at(1, 1) = Rat(-1, 4);
  RatVec c = char_poly(m);  // det(tI - m) = t^2 - 1/16
  CHECK(c[2] == 1);
  CHECK(c[1] == 0);
  CHECK(c[0] == Rat(-1, 16));
}

TEST_CASE("poly arithmetic and affine division") {
  int nv = 2;
  Poly x = Poly::variable(nv, 0), y = Poly::variable(nv, 1);
  Poly p = (x - y) * (x + y);
  Poly q = p.divide_by_affine(x - y);
  CHECK(q == x + y);
  CHECK_THROWS(((x * x) + Poly::constant(nv, 1)).divide_by_affine(x));

  // affine substitution: x -> 1 - x (the A1 affine reflection on functions)
  std::vector<std::vector<Rat>> a{{Rat(-1), Rat(0)}, {Rat(0), Rat(1)}};
  RatVec b{Rat(1), Rat(0)};
  Poly img = x.substitute_affine(a, b);
  CHECK(img == Poly::constant(nv, 1) - x);
}

TEST_CASE("monomials_up_to counts") {
  CHECK(monomials_up_to(2, 3).size() == 10);
  CHECK(monomials_up_to(3, 2).size() == 10);
}
