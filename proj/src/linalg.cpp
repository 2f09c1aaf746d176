#include "preord/linalg.hpp"

#include <algorithm>

namespace preord {

namespace {

void check_widths(std::size_t n, const std::vector<RatVec>& rows) {
  for (const auto& r : rows) {
    if (r.size() != n) fail(Errc::dimension_mismatch, "row width does not match ambient dimension");
  }
}

void check_widths(std::size_t n, const std::vector<IntVec>& rows) {
  for (const auto& r : rows) {
    if (r.size() != n) fail(Errc::dimension_mismatch, "row width does not match ambient dimension");
  }
}

Int divexact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<std::size_t> rref(std::vector<RatVec>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    std::size_t sel = r;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    Rat inv = 1 / m[r][col];
    for (std::size_t j = col; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][col]) == 0) continue;
      Rat c = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= c * m[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  m.resize(r, RatVec());
  return pivots;
}

RatSubspace RatSubspace::full(std::size_t n) {
  std::vector<RatVec> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n, Rat(0));
    e[i] = 1;
    basis.push_back(std::move(e));
    pivots.push_back(i);
  }
  return RatSubspace(n, std::move(basis), std::move(pivots));
}

RatSubspace RatSubspace::zero(std::size_t n) { return RatSubspace(n, {}, {}); }

RatSubspace RatSubspace::span(std::size_t n, const std::vector<RatVec>& gens) {
  check_widths(n, gens);
  std::vector<RatVec> m = gens;
  auto pivots = rref(m);
  return RatSubspace(n, std::move(m), std::move(pivots));
}

bool RatSubspace::contains(const RatVec& v) const {
  if (v.size() != n_) fail(Errc::dimension_mismatch, "vector width does not match ambient dimension");
  RatVec w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rat c = w[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) w[j] -= c * basis_[i][j];
  }
  for (const Rat& x : w) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::optional<RatVec> RatSubspace::coordinates(const RatVec& v) const {
  if (v.size() != n_) fail(Errc::dimension_mismatch, "vector width does not match ambient dimension");
  RatVec coeffs(basis_.size());
  // RREF rows carry 1 at their own pivot and 0 at every other pivot, so the
  // pivot coordinates of v read off the coefficients directly.
  for (std::size_t i = 0; i < basis_.size(); ++i) coeffs[i] = v[pivots_[i]];
  if (from_coordinates(coeffs) != v) return std::nullopt;
  return coeffs;
}

RatVec RatSubspace::from_coordinates(const RatVec& coeffs) const {
  if (coeffs.size() != basis_.size()) fail(Errc::dimension_mismatch, "coordinate count does not match subspace dimension");
  RatVec v(n_, Rat(0));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < n_; ++j) v[j] += coeffs[i] * basis_[i][j];
  }
  return v;
}

namespace {

// Shared core of hnf/hnf_with_transform: column-by-column gcd elimination,
// with every row operation mirrored on `track` when present.
std::vector<std::size_t> hnf_core(std::vector<IntVec>& m, std::vector<IntVec>* track) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (sgn(q) == 0) return;
    for (std::size_t j = 0; j < cols; ++j) m[dst][j] -= q * m[src][j];
    if (track) {
      auto& t = *track;
      for (std::size_t j = 0; j < t[dst].size(); ++j) t[dst][j] -= q * t[src][j];
    }
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(m[i], m[k]);
    if (track) std::swap((*track)[i], (*track)[k]);
  };
  auto row_negate = [&](std::size_t i) {
    for (auto& x : m[i]) x = -x;
    if (track) {
      for (auto& x : (*track)[i]) x = -x;
    }
  };

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (sgn(m[i][col]) == 0) continue;
        if (best == m.size() || mpz_cmpabs(m[i][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0) best = i;
      }
      if (best == m.size()) break;  // column clear below r
      row_swap(r, best);
      bool clear = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (sgn(m[i][col]) == 0) continue;
        row_sub(i, r, fdiv(m[i][col], m[r][col]));
        if (sgn(m[i][col]) != 0) clear = false;
      }
      if (clear) break;
    }
    if (r < m.size() && sgn(m[r][col]) != 0) {
      if (sgn(m[r][col]) < 0) row_negate(r);
      for (std::size_t i = 0; i < r; ++i) row_sub(i, r, fdiv(m[i][col], m[r][col]));
      pivots.push_back(col);
      ++r;
    }
  }
  // Rows at r.. have zeros in every column.
  return pivots;
}

}  // namespace

std::vector<std::size_t> hnf(std::vector<IntVec>& m) {
  auto pivots = hnf_core(m, nullptr);
  m.resize(pivots.size(), IntVec());
  return pivots;
}

HnfTransform hnf_with_transform(std::vector<IntVec> m) {
  const std::size_t rows = m.size();
  std::vector<IntVec> u(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    u[i].assign(rows, Int(0));
    u[i][i] = 1;
  }
  auto pivots = hnf_core(m, &u);
  HnfTransform out;
  out.pivots = pivots;
  out.h.assign(m.begin(), m.begin() + static_cast<long>(pivots.size()));
  out.kernel.assign(u.begin() + static_cast<long>(pivots.size()), u.end());
  return out;
}

IntLattice IntLattice::zero(std::size_t n) { return IntLattice(n, {}, {}); }

IntLattice IntLattice::full(std::size_t n) {
  std::vector<IntVec> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    basis.push_back(std::move(e));
    pivots.push_back(i);
  }
  return IntLattice(n, std::move(basis), std::move(pivots));
}

IntLattice IntLattice::span(std::size_t n, const std::vector<IntVec>& gens) {
  check_widths(n, gens);
  std::vector<IntVec> m = gens;
  auto pivots = hnf(m);
  return IntLattice(n, std::move(m), std::move(pivots));
}

bool IntLattice::contains(const IntVec& v) const {
  if (v.size() != n_) fail(Errc::dimension_mismatch, "vector width does not match ambient dimension");
  IntVec w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Int& p = basis_[i][pivots_[i]];
    if (w[pivots_[i]] % p != 0) return false;
    Int q = w[pivots_[i]] / p;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) w[j] -= q * basis_[i][j];
  }
  for (const Int& x : w) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

IntVec IntLattice::reduce(const IntVec& v) const {
  if (v.size() != n_) fail(Errc::dimension_mismatch, "vector width does not match ambient dimension");
  IntVec w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Int q = fdiv(w[pivots_[i]], basis_[i][pivots_[i]]);
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) w[j] -= q * basis_[i][j];
  }
  return w;
}

namespace {

// Integer constraint columns equivalent to "dot(u, w) = 0 for all w in rows":
// each Q(sqrt D) row splits into its two parts with denominators cleared.
std::vector<IntVec> constraint_columns(const std::vector<QVec>& rows, std::size_t n) {
  std::vector<IntVec> cols;
  for (const QVec& w : rows) {
    if (w.size() != n) fail(Errc::dimension_mismatch, "row width does not match ambient dimension");
    for (int part = 0; part < 2; ++part) {
      RatVec c(n);
      bool zero = true;
      for (std::size_t i = 0; i < n; ++i) {
        c[i] = part == 0 ? w[i].a() : w[i].b();
        if (sgn(c[i]) != 0) zero = false;
      }
      if (zero) continue;
      Int scale = 1;
      for (const Rat& x : c) scale = lcm(scale, x.get_den());
      IntVec ic(n);
      for (std::size_t i = 0; i < n; ++i) {
        Rat v = c[i] * scale;
        ic[i] = v.get_num();
      }
      cols.push_back(std::move(ic));
    }
  }
  return cols;
}

}  // namespace

IntLattice integer_kernel(const std::vector<QVec>& rows, std::size_t n) {
  std::vector<IntVec> cols = constraint_columns(rows, n);
  if (cols.empty()) return IntLattice::full(n);
  // Matrix with one row per ambient coordinate and one column per constraint;
  // its left kernel is exactly the wanted lattice, and the unimodular
  // transform makes the kernel basis saturated for free.
  std::vector<IntVec> a(n, IntVec(cols.size()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < cols.size(); ++t) a[i][t] = cols[t][i];
  }
  auto tr = hnf_with_transform(std::move(a));
  return IntLattice::span(n, tr.kernel);
}

IntLattice lattice_intersect(const IntLattice& x, const IntLattice& y) {
  if (x.ambient() != y.ambient()) fail(Errc::dimension_mismatch, "lattice ambient dimensions differ");
  const std::size_t n = x.ambient();
  if (x.rank() == 0 || y.rank() == 0) return IntLattice::zero(n);
  std::vector<IntVec> stacked = x.basis();
  stacked.insert(stacked.end(), y.basis().begin(), y.basis().end());
  auto tr = hnf_with_transform(std::move(stacked));
  // A left-kernel row (a | b) of the stack says a*Bx = -(b*By): that common
  // value lies in both lattices, and every intersection element arises so.
  std::vector<IntVec> gens;
  for (const IntVec& k : tr.kernel) {
    IntVec v(n, Int(0));
    for (std::size_t i = 0; i < x.rank(); ++i) {
      for (std::size_t j = 0; j < n; ++j) v[j] += k[i] * x.basis()[i][j];
    }
    gens.push_back(std::move(v));
  }
  return IntLattice::span(n, gens);
}

RatSubspace rational_kernel(const std::vector<QVec>& rows, const RatSubspace& within) {
  const std::size_t n = within.ambient();
  const std::size_t k = within.dim();
  // Conditions on coordinates x w.r.t. the basis of `within`.
  std::vector<RatVec> cond;
  for (const QVec& w : rows) {
    if (w.size() != n) fail(Errc::dimension_mismatch, "row width does not match ambient dimension");
    for (int part = 0; part < 2; ++part) {
      RatVec c(k);
      bool zero = true;
      for (std::size_t i = 0; i < k; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < n; ++j) {
          s += within.basis()[i][j] * (part == 0 ? w[j].a() : w[j].b());
        }
        c[i] = s;
        if (sgn(s) != 0) zero = false;
      }
      if (!zero) cond.push_back(std::move(c));
    }
  }
  auto piv = rref(cond);
  std::vector<bool> is_pivot(k, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RatVec> gens;
  for (std::size_t f = 0; f < k; ++f) {
    if (is_pivot[f]) continue;
    RatVec x(k, Rat(0));
    x[f] = 1;
    for (std::size_t t = 0; t < piv.size(); ++t) x[piv[t]] = -cond[t][f];
    gens.push_back(within.from_coordinates(x));
  }
  return RatSubspace::span(n, gens);
}

Int det(const std::vector<IntVec>& m) {
  const std::size_t n = m.size();
  check_widths(n, m);
  if (n == 0) return 1;
  std::vector<IntVec> a = m;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t s = k + 1;
      while (s < n && sgn(a[s][k]) == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = divexact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

bool is_unimodular(const std::vector<IntVec>& m) {
  if (m.empty()) return true;
  if (m.size() != m[0].size()) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

}  // namespace preord
