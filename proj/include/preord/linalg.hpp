#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "preord/quadext.hpp"

namespace preord {

/// Subspace of Q^n held in reduced row echelon form.  RREF is unique per
/// subspace, so operator== on the stored basis decides subspace equality.
class RatSubspace {
 public:
  static RatSubspace full(std::size_t n);
  static RatSubspace zero(std::size_t n);
  static RatSubspace span(std::size_t n, const std::vector<RatVec>& gens);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RatVec& v) const;
  // Coefficients w.r.t. the RREF basis; nullopt when v lies outside.
  std::optional<RatVec> coordinates(const RatVec& v) const;
  RatVec from_coordinates(const RatVec& coeffs) const;

  bool operator==(const RatSubspace& o) const {
    return n_ == o.n_ && basis_ == o.basis_;
  }
  bool operator!=(const RatSubspace& o) const { return !(*this == o); }

 private:
  RatSubspace(std::size_t n, std::vector<RatVec> basis, std::vector<std::size_t> pivots)
      : n_(n), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t n_ = 0;
  std::vector<RatVec> basis_;        // RREF rows, no zero rows
  std::vector<std::size_t> pivots_;  // pivot column of each row, strictly increasing
};

/// Sublattice of Z^n held in row Hermite normal form: positive pivots, entries
/// above a pivot reduced into [0, pivot).  Unique per lattice.
class IntLattice {
 public:
  static IntLattice zero(std::size_t n);
  static IntLattice full(std::size_t n);
  static IntLattice span(std::size_t n, const std::vector<IntVec>& gens);

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const IntVec& v) const;
  // Canonical coset representative of v modulo the lattice (reduce by pivots
  // top-down; the result has each pivot coordinate in [0, pivot)).
  IntVec reduce(const IntVec& v) const;

  bool operator==(const IntLattice& o) const { return n_ == o.n_ && basis_ == o.basis_; }
  bool operator!=(const IntLattice& o) const { return !(*this == o); }

 private:
  IntLattice(std::size_t n, std::vector<IntVec> basis, std::vector<std::size_t> pivots)
      : n_(n), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t n_ = 0;
  std::vector<IntVec> basis_;
  std::vector<std::size_t> pivots_;
};

// {u in `within` : dot(u, w) = 0 for every w in rows}.  Each Q(sqrt D) row
// contributes two rational constraints (its two parts).
RatSubspace rational_kernel(const std::vector<QVec>& rows, const RatSubspace& within);

// {u in Z^n : dot(u, w) = 0 for every w in rows}.  Computed through a
// unimodular transform, hence automatically saturated: m*v in K implies v in K.
IntLattice integer_kernel(const std::vector<QVec>& rows, std::size_t n);

IntLattice lattice_intersect(const IntLattice& x, const IntLattice& y);

// Bareiss, exact.  Square input required.
Int det(const std::vector<IntVec>& m);
bool is_unimodular(const std::vector<IntVec>& m);

// In-place reduction to RREF; returns pivot columns of the nonzero rows (which
// are moved to the top).
std::vector<std::size_t> rref(std::vector<RatVec>& m);

// In-place reduction to row HNF, zero rows dropped; returns pivot columns.
std::vector<std::size_t> hnf(std::vector<IntVec>& m);

// U * input = hnf result, with U unimodular. Rows of U matching dropped zero
// rows span the left kernel of the input.
struct HnfTransform {
  std::vector<IntVec> h;              // HNF rows, no zero rows
  std::vector<std::size_t> pivots;
  std::vector<IntVec> kernel;         // left-kernel rows of the input
};
HnfTransform hnf_with_transform(std::vector<IntVec> m);

}  // namespace preord
