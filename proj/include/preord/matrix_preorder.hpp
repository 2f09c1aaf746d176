#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "preord/linalg.hpp"

namespace preord {

enum class Ordering { Less, Equiv, Greater };

inline Ordering opposite(Ordering o) {
  switch (o) {
    case Ordering::Less: return Ordering::Greater;
    case Ordering::Greater: return Ordering::Less;
    default: return Ordering::Equiv;
  }
}

inline Ordering ordering_from_sign(int s) {
  return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equiv);
}

inline const char* ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Greater: return "greater";
    default: return "equiv";
  }
}

// Lexicographic comparison of u and v through a list of weight rows: the sign
// of the first nonzero dot(u - v, row).  This is the defining semantics; the
// canonical-form path below must (and is tested to) agree with it.
Ordering lex_cmp(const std::vector<QVec>& rows, const RatVec& u, const RatVec& v);

// One level of a canonical form.  `kernel_before` is the subspace the level
// acts on (everything earlier levels tie); `functional` is the level's linear
// functional in coordinates w.r.t. the RREF basis of `kernel_before`,
// normalized so its first nonzero entry has absolute value 1; `ambient_row` is
// that functional scattered back to the pivot columns, i.e. an ambient weight
// row inducing the same comparisons on `kernel_before`.
struct CanonicalLevel {
  RatSubspace kernel_before;
  QVec functional;
  QVec ambient_row;

  bool operator==(const CanonicalLevel& o) const {
    return kernel_before == o.kernel_before && functional == o.functional;
  }
  bool operator!=(const CanonicalLevel& o) const { return !(*this == o); }
};

// Canonical representation of a weight-row preorder: the strictly shrinking
// kernel chain with one normalized functional per level.  Two row lists induce
// the same preorder exactly when their canonical forms are equal; equality of
// forms is therefore the implemented equality decision, and the
// distinguishing-vector search acts as an independent certificate of
// inequality (it hard-errors rather than report "equal" if its budget runs
// out, so a counterexample to the uniqueness assumption would surface).
class CanonicalForm {
 public:
  CanonicalForm(std::size_t n, std::vector<CanonicalLevel> levels, RatSubspace kernel_after)
      : n_(n), levels_(std::move(levels)), kernel_after_(std::move(kernel_after)) {}

  std::size_t ambient() const { return n_; }
  const std::vector<CanonicalLevel>& levels() const { return levels_; }
  const RatSubspace& kernel_after() const { return kernel_after_; }

  std::size_t rank() const { return levels_.size(); }
  std::size_t degree() const { return kernel_after_.dim(); }

  bool operator==(const CanonicalForm& o) const {
    return n_ == o.n_ && levels_ == o.levels_;
  }
  bool operator!=(const CanonicalForm& o) const { return !(*this == o); }

  // True when this form's levels are an initial segment of o's.
  bool is_prefix_of(const CanonicalForm& o) const;

  // Stable serialization of the canonical ambient rows; equal forms produce
  // equal keys.  Used for hashing/deduplication.
  std::string key() const;

 private:
  std::size_t n_;
  std::vector<CanonicalLevel> levels_;
  RatSubspace kernel_after_;
};

// A bi-invariant preorder on Z^n (equivalently Q^n) presented by weight rows
// over Q(sqrt D): u is below v when the dot-product sequence of u is
// lexicographically below that of v.  Canonicalized on construction.
class MatrixPreorder {
 public:
  explicit MatrixPreorder(std::size_t n) : MatrixPreorder(n, {}) {}
  MatrixPreorder(std::size_t n, std::vector<QVec> rows);

  static MatrixPreorder trivial(std::size_t n) { return MatrixPreorder(n); }

  std::size_t ambient() const { return n_; }
  const std::vector<QVec>& rows() const { return rows_; }  // as given
  const CanonicalForm& canonical() const { return canon_; }

  std::size_t rank() const { return canon_.rank(); }
  std::size_t degree() const { return canon_.degree(); }
  bool is_trivial() const { return canon_.rank() == 0; }
  bool is_order() const { return canon_.degree() == 0; }

  // Canonical ambient weight rows, one per level.
  std::vector<QVec> canonical_rows() const;

  Ordering cmp(const RatVec& u, const RatVec& v) const;
  Ordering cmp(const IntVec& u, const IntVec& v) const {
    return cmp(to_rat_vec(u), to_rat_vec(v));
  }
  // cmp against the origin.
  Ordering side(const RatVec& u) const;
  Ordering side(const IntVec& u) const { return side(to_rat_vec(u)); }

  // Largest sublattice of Z^n on which every row vanishes (the equivalence
  // class of 0 among integer points).  Saturated.
  const IntLattice& residue_lattice() const { return residue_; }

  bool operator==(const MatrixPreorder& o) const { return canon_ == o.canon_; }
  bool operator!=(const MatrixPreorder& o) const { return !(*this == o); }

 private:
  std::size_t n_;
  std::vector<QVec> rows_;
  CanonicalForm canon_;
  IntLattice residue_;
};

inline bool equals(const MatrixPreorder& p, const MatrixPreorder& q) { return p == q; }

// An integer vector on which p and q order differently against 0, preferring
// one with strictly opposite sides.  nullopt when the preorders are equal.
// Throws Errc::cap_exceeded if the bounded search runs out before finding a
// witness for unequal canonical forms.
std::optional<IntVec> distinguishing_vector(const MatrixPreorder& p, const MatrixPreorder& q);

// Composition: compare by p first, break p-ties by q.  Row concatenation
// followed by canonicalization; associative with the trivial preorder as
// two-sided identity.
MatrixPreorder compose(const MatrixPreorder& p, const MatrixPreorder& q);

// coarse is refined by fine: every coarse comparison is preserved, every
// coarse tie may be broken.  Equivalent to: the canonical form of coarse is a
// prefix of that of fine.
bool refines(const MatrixPreorder& coarse, const MatrixPreorder& fine);

// Finest common coarsening: the longest shared canonical prefix.
MatrixPreorder meet(const MatrixPreorder& p, const MatrixPreorder& q);

// All coarsenings of p (canonical prefixes), from trivial up to p itself.
// Totally ordered under `refines`.
std::vector<MatrixPreorder> coarsening_chain(const MatrixPreorder& p);

// Rank-one (or trivial) factors whose left-to-right composition is p.
std::vector<MatrixPreorder> decompose(const MatrixPreorder& p);

// Pullback along the automorphism of Z^n given by unimodular a (rows a[i]):
// result.cmp(u, v) == p.cmp(u*a, v*a).  Throws Errc::not_unimodular.
MatrixPreorder pullback(const MatrixPreorder& p, const std::vector<IntVec>& a);

std::uint64_t fnv1a(const std::string& s);

}  // namespace preord
