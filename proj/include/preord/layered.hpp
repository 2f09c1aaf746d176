#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "preord/group.hpp"
#include "preord/matrix_preorder.hpp"

namespace preord {

// Preorders on the Heisenberg group that respect the lower central series:
// compare abelianized parts first, break ties on the center.  Constructed
// normalized; the combination "center compared although the abelianized tier
// still has ties" is rejected (its relation would not be transitive).
//
// The LeftLex variant is the odd one out: a coordinate-lexicographic
// comparison that is only left-invariant.  It exists to exercise the
// non-standard code paths and is excluded from the operations whose
// correctness needs bi-invariance (composition, valuations).
class LayeredPreorder {
 public:
  enum class Variant { Trivial, Abelianized, Composite, LeftLex };

  static LayeredPreorder trivial();
  // Pullback through Heisenberg -> Z^2 abelianization.
  static LayeredPreorder abelianized(MatrixPreorder tier0);
  // Abelianized comparison refined by a center comparison.  tier1 nontrivial
  // requires tier0 of degree 0.
  static LayeredPreorder composite(MatrixPreorder tier0, MatrixPreorder tier1);
  // Left-invariant lex on (signs[i] * x[perm[i]]); perm permutes {0,1,2} and
  // must not lead with the center coordinate (2), which would break
  // transitivity.
  static LayeredPreorder left_lex(std::array<int, 3> perm, std::array<int, 3> signs);
  // The shipped test double: key order (a, c, b), all signs positive.
  static LayeredPreorder left_lex_double() { return left_lex({0, 2, 1}, {1, 1, 1}); }

  Variant variant() const { return variant_; }
  bool bi_invariant() const { return variant_ != Variant::LeftLex; }

  const MatrixPreorder& tier0() const { return tier0_; }
  const MatrixPreorder& tier1() const { return tier1_; }
  const std::array<int, 3>& perm() const { return perm_; }
  const std::array<int, 3>& signs() const { return signs_; }

  GroupDesc group() const { return GroupDesc::heisenberg(); }

  Ordering cmp(const GVec& g, const GVec& h) const;
  // cmp against the identity.
  Ordering side(const GVec& g) const { return rel_one(g); }

  bool operator==(const LayeredPreorder& o) const;
  bool operator!=(const LayeredPreorder& o) const { return !(*this == o); }

 private:
  LayeredPreorder(Variant v, MatrixPreorder t0, MatrixPreorder t1)
      : variant_(v), tier0_(std::move(t0)), tier1_(std::move(t1)) {}

  Ordering rel_one(const GVec& d) const;  // d vs identity

  Variant variant_;
  MatrixPreorder tier0_;  // on Z^2
  MatrixPreorder tier1_;  // on Z^1
  std::array<int, 3> perm_{0, 1, 2};
  std::array<int, 3> signs_{1, 1, 1};
};

// Componentwise composition of the two tiers; the result stays in the layered
// family.  Rejects LeftLex operands (needs bi-invariance on both sides).
LayeredPreorder layered_compose(const LayeredPreorder& x, const LayeredPreorder& y);

// Outcome of a standardness check: a preorder is standard when for every g
// strictly above 1, the whole coset of g modulo the next filtration step lies
// strictly above 1.  `exact` marks a proof-backed verdict as opposed to a
// bounded search that found nothing.
struct StandardCheck {
  bool verified = false;
  bool exact = false;
  GVec g, h;  // violating pair when !verified: g > 1 but g*h is not

  static StandardCheck ok(bool exact_proof) {
    StandardCheck c;
    c.verified = true;
    c.exact = exact_proof;
    return c;
  }
};

StandardCheck is_standard(const MatrixPreorder& p);
StandardCheck is_standard(const LayeredPreorder& p, std::size_t samples = 256,
                          std::uint64_t seed = 0);

// Black-box form for Heisenberg: `side` answers cmp against the identity.
// Deterministic small boxes first, then seeded sampling.
StandardCheck standard_search(const std::function<Ordering(const GVec&)>& side,
                              std::size_t samples, std::uint64_t seed);

// A triple (u, v, x) with u below v but u*x not below v*x (or the mirrored
// failure); nullopt if the exhaustive search over the coordinate box of the
// given radius finds none.  Bi-invariant inputs always come back empty; the
// cost grows with the ninth power of the radius, so keep it small.
struct InvarianceViolation {
  GVec u, v, x;
};
std::optional<InvarianceViolation> right_invariance_violation(const LayeredPreorder& p,
                                                              long radius = 1);

}  // namespace preord
