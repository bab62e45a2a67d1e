#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Parses "p", "-p/q" or "p/q"; always returns a canonicalized rational.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s)
    if (!(std::isdigit((unsigned char)c) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("bad rational literal: " + s);
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

// mpq_class(num, den) does not canonicalize; GMP comparisons require it.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat floor_rat(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(q);
}

// Reduction of r modulo 1 to the half-open interval [0, 1).
inline Rat mod1(const Rat& r) { return r - floor_rat(r); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline double to_double(const Rat& r) { return r.get_d(); }

inline RatVec parse_rat_vec(const std::string& s) {
  RatVec v;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      v.push_back(parse_rat(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) v.push_back(parse_rat(cur));
  return v;
}

}  // namespace alcove
