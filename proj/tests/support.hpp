#pragma once

// Shared helpers for the test binaries: literal builders, seeded generators,
// and small independent oracles.  The oracles deliberately avoid the library
// code paths they are used to check.

#include <cmath>
#include <ostream>
#include <utility>
#include <vector>

#include "preord/error.hpp"
#include "preord/group_algebra.hpp"
#include "preord/rng.hpp"

namespace preord {

inline std::ostream& operator<<(std::ostream& os, Ordering o) { return os << ordering_name(o); }

}  // namespace preord

namespace support {

using namespace preord;

// ---- literal builders -------------------------------------------------------

inline QuadExt qx(long a, long b = 0) { return QuadExt(Rat(a), Rat(b)); }

inline QVec qrow(std::initializer_list<QuadExt> xs) { return QVec(xs); }

inline RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline MatrixPreorder weights(std::size_t n, std::vector<QVec> rows) {
  return MatrixPreorder(n, std::move(rows));
}

// lex on Z^2 via rows (1,0), (0,1)
inline MatrixPreorder lex2() {
  return weights(2, {qrow({qx(1), qx(0)}), qrow({qx(0), qx(1)})});
}

// ---- seeded generators ------------------------------------------------------

inline Rat rand_rat(Rng& rng, long maxnum = 6, long maxden = 4) {
  return make_rat(rng.range(-maxnum, maxnum), rng.range(1, maxden));
}

inline QuadExt rand_qx(Rng& rng, bool allow_irrational = true) {
  Rat a = rand_rat(rng);
  Rat b = allow_irrational && rng.coin() ? rand_rat(rng) : Rat(0);
  return QuadExt(a, b);
}

inline RatVec rand_ratvec(Rng& rng, std::size_t n) {
  RatVec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rand_rat(rng));
  return v;
}

inline QVec rand_qvec(Rng& rng, std::size_t n, bool allow_irrational = true) {
  QVec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rand_qx(rng, allow_irrational));
  return v;
}

inline IntVec rand_intvec(Rng& rng, std::size_t n, long lo = -6, long hi = 6) {
  IntVec v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.range(lo, hi));
  return v;
}

inline MatrixPreorder rand_preorder(Rng& rng, std::size_t n, std::size_t max_rows,
                                    bool allow_irrational = true) {
  std::vector<QVec> rows;
  std::size_t count = rng.below(max_rows + 1);
  for (std::size_t i = 0; i < count; ++i) rows.push_back(rand_qvec(rng, n, allow_irrational));
  return MatrixPreorder(n, std::move(rows));
}

// Random degree-0 order on Z^2: either random rows completed by the standard
// basis, or a single irrational functional with independent parts.
inline MatrixPreorder rand_order2(Rng& rng) {
  if (rng.coin()) {
    std::vector<QVec> rows;
    if (rng.coin()) rows.push_back(rand_qvec(rng, 2));
    rows.push_back(qrow({qx(rng.coin() ? 1 : -1), qx(0)}));
    rows.push_back(qrow({qx(0), qx(rng.coin() ? 1 : -1)}));
    return MatrixPreorder(2, std::move(rows));
  }
  for (;;) {
    QuadExt x(rand_rat(rng), rand_rat(rng));
    QuadExt y(rand_rat(rng), rand_rat(rng));
    MatrixPreorder p(2, {qrow({x, y})});
    if (p.degree() == 0) return p;
  }
}

inline MatrixPreorder rand_tier1(Rng& rng) {
  long s = rng.coin() ? 1 : -1;
  return MatrixPreorder(1, {qrow({qx(s)})});
}

inline LayeredPreorder rand_layered_bi(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return LayeredPreorder::trivial();
    case 1: return LayeredPreorder::abelianized(rand_preorder(rng, 2, 2));
    case 2: return LayeredPreorder::abelianized(rand_order2(rng));
    default: return LayeredPreorder::composite(rand_order2(rng), rand_tier1(rng));
  }
}

inline GVec rand_gvec(Rng& rng, const GroupDesc& g, long lo = -6, long hi = 6) {
  return rand_intvec(rng, g.coords(), lo, hi);
}

inline GroupAlgebraElement rand_poly(Rng& rng, const GroupDesc& g, std::size_t max_terms,
                                     long lo = -5, long hi = 5) {
  GroupAlgebraElement x(g);
  std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < terms; ++i) {
    Rat c = rand_rat(rng);
    if (sgn(c) == 0) c = 1;
    x += GroupAlgebraElement::monomial(g, c, rand_gvec(rng, g, lo, hi));
  }
  return x;
}

// ---- oracles ----------------------------------------------------------------

// Floating-point sign with a conservative error margin: 0 means "cannot tell".
inline int interval_sign(const QuadExt& x) {
  double a = x.a().get_d();
  double b = x.b().get_d();
  double root = std::sqrt(static_cast<double>(field::d()));
  double v = a + b * root;
  double margin = 1e-9 * (std::fabs(a) + std::fabs(b) * root + 1.0);
  if (v > margin) return 1;
  if (v < -margin) return -1;
  return 0;
}

// Row rank by plain elimination, no echelon bookkeeping shared with linalg.
inline std::size_t elim_rank(std::vector<RatVec> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = m.size();
    for (std::size_t r = rank; r < m.size(); ++r) {
      if (sgn(m[r][c]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Is v an integer combination of gens with coefficients bounded by B?
inline bool combo_member(const IntVec& v, const std::vector<IntVec>& gens, long b) {
  const std::size_t k = gens.size();
  if (k == 0) {
    for (const Int& x : v) {
      if (sgn(x) != 0) return false;
    }
    return true;
  }
  std::vector<long> coef(k, -b);
  for (;;) {
    IntVec s(v.size(), Int(0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) s[j] += Int(coef[i]) * gens[i][j];
    }
    if (s == v) return true;
    std::size_t pos = k;
    while (pos > 0 && coef[pos - 1] == b) coef[--pos] = -b;
    if (pos == 0) return false;
    ++coef[pos - 1];
  }
}

// Composition on comparison outcomes: first relation wins unless tied.
inline Ordering compose_rel(Ordering a, Ordering b) { return a != Ordering::Equiv ? a : b; }

// Runs fn and reports the Errc it threw with, or nullopt if it returned.
template <typename Fn>
inline std::optional<Errc> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace support
