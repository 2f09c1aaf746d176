#include "preord/matrix_preorder.hpp"

#include <algorithm>

namespace preord {

Ordering lex_cmp(const std::vector<QVec>& rows, const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) fail(Errc::dimension_mismatch, "cmp: vector lengths differ");
  RatVec d(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) d[i] = u[i] - v[i];
  for (const QVec& w : rows) {
    int s = sign(dot(d, w));
    if (s != 0) return ordering_from_sign(s);
  }
  return Ordering::Equiv;
}

namespace {

CanonicalForm canonicalize(std::size_t n, const std::vector<QVec>& rows) {
  RatSubspace k = RatSubspace::full(n);
  std::vector<CanonicalLevel> levels;
  for (const QVec& w : rows) {
    if (w.size() != n) fail(Errc::dimension_mismatch, "weight row width does not match ambient dimension");
    if (k.dim() == 0) break;
    QVec f(k.dim());
    std::size_t first = k.dim();
    for (std::size_t i = 0; i < k.dim(); ++i) {
      f[i] = dot(k.basis()[i], w);
      if (first == k.dim() && !f[i].is_zero()) first = i;
    }
    if (first == k.dim()) continue;  // row vanishes on the residual subspace
    QuadExt scale = f[first].abs().inverse();
    for (auto& x : f) x = x * scale;
    QVec ambient(n, QuadExt(0));
    for (std::size_t i = 0; i < k.dim(); ++i) ambient[k.pivots()[i]] = f[i];
    RatSubspace next = rational_kernel({ambient}, k);
    levels.push_back(CanonicalLevel{k, std::move(f), std::move(ambient)});
    k = std::move(next);
  }
  return CanonicalForm(n, std::move(levels), std::move(k));
}

}  // namespace

MatrixPreorder::MatrixPreorder(std::size_t n, std::vector<QVec> rows)
    : n_(n),
      rows_(std::move(rows)),
      canon_(canonicalize(n, rows_)),
      residue_(integer_kernel(canonical_rows(), n)) {}

std::vector<QVec> MatrixPreorder::canonical_rows() const {
  std::vector<QVec> out;
  out.reserve(canon_.levels().size());
  for (const auto& lv : canon_.levels()) out.push_back(lv.ambient_row);
  return out;
}

Ordering MatrixPreorder::cmp(const RatVec& u, const RatVec& v) const {
  if (u.size() != n_ || v.size() != n_) fail(Errc::dimension_mismatch, "cmp: vector width does not match ambient dimension");
  RatVec d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = u[i] - v[i];
  for (const auto& lv : canon_.levels()) {
    int s = sign(dot(d, lv.ambient_row));
    if (s != 0) return ordering_from_sign(s);
  }
  return Ordering::Equiv;
}

Ordering MatrixPreorder::side(const RatVec& u) const {
  return cmp(u, RatVec(n_, Rat(0)));
}

bool CanonicalForm::is_prefix_of(const CanonicalForm& o) const {
  if (n_ != o.n_ || levels_.size() > o.levels_.size()) return false;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i] != o.levels_[i]) return false;
  }
  return true;
}

std::string CanonicalForm::key() const {
  std::string s = "n" + std::to_string(n_) + ";d" + std::to_string(field::d());
  for (const auto& lv : levels_) {
    s += ";";
    for (const auto& x : lv.ambient_row) {
      s += rat_str(x.a()) + "|" + rat_str(x.b()) + ",";
    }
  }
  return s;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

MatrixPreorder compose(const MatrixPreorder& p, const MatrixPreorder& q) {
  if (p.ambient() != q.ambient()) fail(Errc::dimension_mismatch, "compose: ambient dimensions differ");
  std::vector<QVec> rows = p.canonical_rows();
  auto qr = q.canonical_rows();
  rows.insert(rows.end(), qr.begin(), qr.end());
  return MatrixPreorder(p.ambient(), std::move(rows));
}

bool refines(const MatrixPreorder& coarse, const MatrixPreorder& fine) {
  if (coarse.ambient() != fine.ambient()) fail(Errc::dimension_mismatch, "refines: ambient dimensions differ");
  return coarse.canonical().is_prefix_of(fine.canonical());
}

MatrixPreorder meet(const MatrixPreorder& p, const MatrixPreorder& q) {
  if (p.ambient() != q.ambient()) fail(Errc::dimension_mismatch, "meet: ambient dimensions differ");
  const auto& lp = p.canonical().levels();
  const auto& lq = q.canonical().levels();
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < lp.size() && i < lq.size() && lp[i] == lq[i]; ++i) {
    rows.push_back(lp[i].ambient_row);
  }
  return MatrixPreorder(p.ambient(), std::move(rows));
}

std::vector<MatrixPreorder> coarsening_chain(const MatrixPreorder& p) {
  std::vector<MatrixPreorder> chain;
  std::vector<QVec> rows;
  chain.push_back(MatrixPreorder::trivial(p.ambient()));
  for (const auto& lv : p.canonical().levels()) {
    rows.push_back(lv.ambient_row);
    chain.emplace_back(p.ambient(), rows);
  }
  return chain;
}

std::vector<MatrixPreorder> decompose(const MatrixPreorder& p) {
  std::vector<MatrixPreorder> factors;
  for (const auto& lv : p.canonical().levels()) {
    factors.emplace_back(p.ambient(), std::vector<QVec>{lv.ambient_row});
  }
  return factors;
}

MatrixPreorder pullback(const MatrixPreorder& p, const std::vector<IntVec>& a) {
  const std::size_t n = p.ambient();
  if (a.size() != n) fail(Errc::dimension_mismatch, "pullback: matrix size does not match ambient dimension");
  for (const auto& row : a) {
    if (row.size() != n) fail(Errc::dimension_mismatch, "pullback: matrix is not square");
  }
  if (!is_unimodular(a)) fail(Errc::not_unimodular, "pullback requires a unimodular matrix");
  // cmp'(u, v) = cmp(u*a, v*a) is induced by the transported rows a*w.
  std::vector<QVec> rows;
  for (const QVec& w : p.canonical_rows()) {
    QVec t(n, QuadExt(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) t[i] += QuadExt(Rat(a[i][j])) * w[j];
    }
    rows.push_back(std::move(t));
  }
  return MatrixPreorder(n, std::move(rows));
}

namespace {

IntVec clear_denominators(const RatVec& v) {
  Int scale = 1;
  for (const Rat& x : v) scale = lcm(scale, x.get_den());
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * scale;
    out[i] = s.get_num();
  }
  return out;
}

bool strictly_opposite(Ordering a, Ordering b) {
  return (a == Ordering::Less && b == Ordering::Greater) ||
         (a == Ordering::Greater && b == Ordering::Less);
}

}  // namespace

std::optional<IntVec> distinguishing_vector(const MatrixPreorder& p, const MatrixPreorder& q) {
  if (p.ambient() != q.ambient()) fail(Errc::dimension_mismatch, "distinguishing_vector: ambient dimensions differ");
  if (p == q) return std::nullopt;
  const auto& lp = p.canonical().levels();
  const auto& lq = q.canonical().levels();
  std::size_t j = 0;
  while (j < lp.size() && j < lq.size() && lp[j] == lq[j]) ++j;

  if (j == lp.size() || j == lq.size()) {
    // One form extends the other.  The extra level's functional evaluated at
    // its own rational (or else irrational) part is |f_a|^2 + sqrt(D) f_a.f_b,
    // which is nonzero; the corresponding point of the shared residual
    // subspace is ordered strictly by the longer form and tied by the shorter.
    const CanonicalForm& longer = (j == lp.size() ? q : p).canonical();
    const CanonicalLevel& lv = longer.levels()[j];
    const std::size_t k = lv.kernel_before.dim();
    RatVec c(k, Rat(0));
    bool nonzero = false;
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = lv.functional[i].a();
      if (sgn(c[i]) != 0) nonzero = true;
    }
    if (!nonzero) {
      for (std::size_t i = 0; i < k; ++i) c[i] = lv.functional[i].b();
    }
    IntVec u = clear_denominators(lv.kernel_before.from_coordinates(c));
    if (p.side(u) == q.side(u)) fail(Errc::precondition_failed, "distinguishing witness construction failed");
    return u;
  }

  // Same kernel, different level functionals.  Points where one functional
  // vanishes rationally distinguish whatever the size of the coefficients:
  // that preorder defers to deeper levels while the other usually orders
  // strictly.  Strictly opposite sides are accepted at once; a one-sided
  // kernel point is kept as a last resort behind the shell search.
  const RatSubspace& k = lp[j].kernel_before;
  const std::size_t dim = k.dim();
  std::optional<IntVec> kernel_loose;
  for (const CanonicalLevel* lv : {&lp[j], &lq[j]}) {
    RatSubspace zeros = rational_kernel({lv->functional}, RatSubspace::full(dim));
    for (const RatVec& c : zeros.basis()) {
      IntVec u = clear_denominators(k.from_coordinates(c));
      Ordering a = p.side(u), b = q.side(u);
      if (a == b) continue;
      if (strictly_opposite(a, b)) return u;
      if (!kernel_loose) kernel_loose = u;
    }
  }

  // Bounded search over integer coordinate shells of the subspace both
  // preorders still act on, preferring strictly opposite sides.
  constexpr long max_radius = 64;
  constexpr std::uint64_t max_candidates = 2'000'000;
  std::uint64_t seen = 0;
  bool exhausted = false;
  for (long r = 1; r <= max_radius && !exhausted; ++r) {
    std::optional<IntVec> loose;
    std::vector<long> digits(dim, 0);  // c_i = r - digits[i], descending lex
    for (;;) {
      if (++seen > max_candidates) {
        exhausted = true;
        break;
      }
      long maxabs = 0;
      for (long d : digits) maxabs = std::max(maxabs, std::labs(r - d));
      if (maxabs == r) {
        RatVec c(dim);
        for (std::size_t i = 0; i < dim; ++i) c[i] = Rat(r - digits[i]);
        IntVec u = clear_denominators(k.from_coordinates(c));
        Ordering a = p.side(u), b = q.side(u);
        if (a != b) {
          if (strictly_opposite(a, b)) return u;
          if (!loose) loose = u;
        }
      }
      std::size_t pos = dim;
      while (pos > 0 && digits[pos - 1] == 2 * r) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
    if (loose) return loose;
  }
  if (kernel_loose) return kernel_loose;
  fail(Errc::cap_exceeded, "distinguishing vector search budget exhausted on unequal canonical forms");
}

}  // namespace preord
