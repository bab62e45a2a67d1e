#include "doctest.h"

#include "alcove/rootdata.hpp"

using namespace alcove;

namespace {
FracCoweight cw(std::initializer_list<Rat> xs) { return FracCoweight(xs); }
}  // namespace

TEST_CASE("root counts for small types") {
  CHECK(build_root_datum("A", 1).num_roots() == 2);
  CHECK(build_root_datum("A", 2).num_roots() == 6);
  CHECK(build_root_datum("A", 3).num_roots() == 12);
  CHECK(build_root_datum("C", 2).num_roots() == 8);
  CHECK(build_root_datum("C", 3).num_roots() == 18);
}

TEST_CASE("pairing <alpha, alpha_vee> = 2 and custom Cartan validation") {
  RootDatum rd = build_root_datum("C", 2);
  for (int k = 0; k < rd.num_roots(); ++k) {
    long p = 0;
    for (int i = 0; i < rd.rank; ++i) p += rd.roots[k][i] * rd.coroots[k][i];
    CHECK(p == 2);
  }
  // G2 via explicit Cartan matrix is accepted (crystallographic finite type).
  std::vector<std::vector<long>> g2{{2, -3}, {-1, 2}};
  CHECK(build_root_datum("custom", 2, g2).num_roots() == 12);
  // wrong signs
  CHECK_THROWS(build_root_datum("custom", 2, {{2, 1}, {1, 2}}));
  // affine A1 (not finite type)
  CHECK_THROWS(build_root_datum("custom", 2, {{2, -2}, {-2, 2}}));
  // asymmetric zero pattern
  CHECK_THROWS(build_root_datum("custom", 2, {{2, 0}, {-1, 2}}));
}

TEST_CASE("A1 affine action on the coroot line") {
  RootDatum rd = build_root_datum("A", 1);
  auto id = AffineWeylElement::identity(rd);
  auto s1 = AffineWeylElement::simple_reflection(rd, 1);
  auto s0 = AffineWeylElement::simple_reflection(rd, 0);
  CHECK(affine_action(id, cw({Rat(1, 4)})) == cw({Rat(1, 4)}));
  CHECK(affine_action(s1, cw({Rat(1, 4)})) == cw({Rat(-1, 4)}));
  CHECK(affine_action(s0, cw({Rat(1, 4)})) == cw({Rat(3, 4)}));
  CHECK_THROWS(affine_action(s1, cw({Rat(1, 4), Rat(0)})));
}

TEST_CASE("group law on 200 random pairs, exactly") {
  RootDatum rd = build_root_datum("A", 2);
  unsigned long long s = 99;
  auto next = [&]() { s = s * 6364136223846793005ULL + 1442695040888963407ULL; return s >> 33; };
  auto rand_elt = [&]() {
    AffineWeylElement w = AffineWeylElement::identity(rd);
    int len = next() % 6;
    for (int i = 0; i < len; ++i)
      w = w * AffineWeylElement::simple_reflection(rd, next() % (rd.rank + 1));
    return w;
  };
  for (int t = 0; t < 200; ++t) {
    auto w1 = rand_elt(), w2 = rand_elt();
    FracCoweight y{make_rat(static_cast<long>(next() % 9) - 4, 1 + static_cast<long>(next() % 5)),
                   make_rat(static_cast<long>(next() % 9) - 4, 1 + static_cast<long>(next() % 5))};
    CHECK(affine_action(w1 * w2, y) == affine_action(w1, affine_action(w2, y)));
  }
}

TEST_CASE("alcove_of in A1: paper alcoves ]k/2,(k+1)/2[") {
  RootDatum rd = build_root_datum("A", 1);
  auto s1 = AffineWeylElement::simple_reflection(rd, 1);
  CHECK(alcove_of(rd, cw({Rat(1, 4)})).is_identity());
  CHECK(alcove_of(rd, cw({Rat(-1, 4)})) == s1);
  CHECK_THROWS_WITH_AS(alcove_of(rd, cw({Rat(1, 2)})), doctest::Contains("wall"), std::domain_error);
  // every alcove ]k/2,(k+1)/2[ for k in [-4,4) maps its midpoint into nu_0
  for (int k = -4; k < 4; ++k) {
    FracCoweight y{Rat(2 * k + 1, 4)};
    auto w = alcove_of(rd, y);
    FracCoweight z = affine_action(w, y);
    CHECK(z[0] > 0);
    CHECK(z[0] < Rat(1, 2));
  }
}

TEST_CASE("simple transitivity: alcove_of(w^{-1} y0) == w") {
  for (auto&& [tag, rank] : std::vector<std::pair<std::string, int>>{{"A", 1}, {"A", 2}, {"C", 2}}) {
    RootDatum rd = build_root_datum(tag, rank);
    FracCoweight y0 = fundamental_alcove_point(rd);
    CHECK(alcove_of(rd, y0).is_identity());
    unsigned long long s = 7;
    auto next = [&]() { s = s * 6364136223846793005ULL + 1442695040888963407ULL; return s >> 33; };
    for (int t = 0; t < 40; ++t) {
      AffineWeylElement w = AffineWeylElement::identity(rd);
      int len = next() % 7;
      for (int i = 0; i < len; ++i)
        w = w * AffineWeylElement::simple_reflection(rd, next() % (rd.rank + 1));
      CHECK(alcove_of(rd, affine_action(w.inverse(), y0)) == w);
    }
  }
}

TEST_CASE("weight_of_alcove examples, lambda0 = 1/4") {
  RootDatum rd = build_root_datum("A", 1);
  FracCoweight l0 = cw({Rat(1, 4)});
  auto id = AffineWeylElement::identity(rd);
  auto s1 = AffineWeylElement::simple_reflection(rd, 1);
  auto s0 = AffineWeylElement::simple_reflection(rd, 0);
  CHECK(weight_of_alcove(id, l0) == cw({Rat(1, 4)}));
  CHECK(weight_of_alcove(s1, l0) == cw({Rat(-1, 4)}));
  CHECK(weight_of_alcove(s0 * s1, l0) == cw({Rat(5, 4)}));
}

TEST_CASE("exp_map reduces coordinates mod 1") {
  CHECK(exp_map(cw({Rat(0)})).args == RatVec{Rat(0)});
  CHECK(exp_map(cw({Rat(1, 4)})).args == RatVec{Rat(1, 4)});
  CHECK(exp_map(cw({Rat(3, 4)})).args == RatVec{Rat(3, 4)});
  CHECK(exp_map(cw({Rat(5, 4)})).args == RatVec{Rat(1, 4)});
  CHECK(exp_map(cw({Rat(-1, 4)})).args == RatVec{Rat(3, 4)});
}

TEST_CASE("exp_map intertwines: translations die in the torus") {
  RootDatum rd = build_root_datum("A", 2);
  unsigned long long s = 1234;
  auto next = [&]() { s = s * 6364136223846793005ULL + 1442695040888963407ULL; return s >> 33; };
  for (int t = 0; t < 50; ++t) {
    AffineWeylElement w = AffineWeylElement::identity(rd);
    int len = next() % 6;
    for (int i = 0; i < len; ++i)
      w = w * AffineWeylElement::simple_reflection(rd, next() % (rd.rank + 1));
    FracCoweight y{make_rat(static_cast<long>(next() % 9) - 4, 1 + static_cast<long>(next() % 5)),
                   make_rat(static_cast<long>(next() % 9) - 4, 1 + static_cast<long>(next() % 5))};
    TorusPoint lhs = exp_map(affine_action(w, y));
    FracCoweight fy = affine_action(w.finite_part(), y);
    TorusPoint rhs = exp_map(fy);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("canonical words are reduced and lexicographically stable") {
  RootDatum rd = build_root_datum("A", 2);
  auto s0 = AffineWeylElement::simple_reflection(rd, 0);
  auto s1 = AffineWeylElement::simple_reflection(rd, 1);
  auto s2 = AffineWeylElement::simple_reflection(rd, 2);
  CHECK(AffineWeylElement::identity(rd).canonical_word().empty());
  CHECK(s1.canonical_word() == std::vector<int>{1});
  // longest element of the finite parabolic: both reduced words give the
  // same group element and the canonical word is the lex-least one
  auto w0 = s1 * s2 * s1;
  CHECK(w0 == s2 * s1 * s2);
  CHECK(w0.canonical_word() == std::vector<int>{1, 2, 1});
  CHECK(word_to_element(rd, w0.canonical_word()) == w0);
  CHECK((s0 * s1 * s2).length() == 3);
}
