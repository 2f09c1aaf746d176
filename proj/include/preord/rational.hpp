#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "preord/error.hpp"

namespace preord {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// mpq_class does not canonicalize on construction from num/den; every fraction
// we hand out goes through here so the reduced-form, positive-denominator
// invariant holds everywhere.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::malformed_input, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Accepts "p/q" or "p", arbitrary precision, optional sign on p.
Rat parse_rat(const std::string& s);

// Always "p/q", matching the wire format ("0/1", "-3/2", ...).
std::string rat_str(const Rat& x);

// floor(a/b) for b != 0; the sign convention mpz_fdiv_q provides.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rat dot(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) fail(Errc::dimension_mismatch, "dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

inline RatVec to_rat_vec(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const Int& x : v) r.emplace_back(x);
  return r;
}

}  // namespace preord
