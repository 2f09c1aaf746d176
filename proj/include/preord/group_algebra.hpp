#pragma once

#include <map>

#include "preord/group_preorder.hpp"

namespace preord {

// Element of the rational group algebra Q[G], a finite formal sum of group
// elements with nonzero rational coefficients.  G is torsion-free nilpotent
// here, so Q[G] has no zero divisors; that is what makes the monomial
// valuation below multiplicative rather than merely submultiplicative.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(GroupDesc group) : group_(group) {}

  static GroupAlgebraElement monomial(const GroupDesc& group, const Rat& coeff, const GVec& g);

  const GroupDesc& group() const { return group_; }
  const std::map<GVec, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement operator-() const;
  friend GroupAlgebraElement operator+(GroupAlgebraElement x, const GroupAlgebraElement& y) {
    return x += y;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement x, const GroupAlgebraElement& y) {
    return x -= y;
  }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

  bool operator==(const GroupAlgebraElement& o) const {
    return group_ == o.group_ && terms_ == o.terms_;
  }
  bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }

 private:
  void add_term(const GVec& g, const Rat& c);

  GroupDesc group_;
  std::map<GVec, Rat> terms_;
};

// Value of the monomial valuation attached to a bi-invariant preorder: the
// class of the minimal support exponent in the quotient by the preorder's
// residue subgroup, or infinity for 0.  Representatives are stored fully
// reduced, so structural equality decides value equality.
struct Value {
  bool infinite = false;
  GVec rep;

  static Value inf() {
    Value v;
    v.infinite = true;
    return v;
  }
  bool operator==(const Value& o) const {
    return infinite == o.infinite && (infinite || rep == o.rep);
  }
  bool operator!=(const Value& o) const { return !(*this == o); }
};

// Reduce a group element to the canonical representative of its class modulo
// the preorder's residue subgroup.  Rejects non-bi-invariant preorders.
GVec value_rep(const GroupPreorder& p, const GVec& g);

Value valuate(const GroupPreorder& p, const GroupAlgebraElement& x);
GroupAlgebraElement leading_form(const GroupPreorder& p, const GroupAlgebraElement& x);

Value value_mul(const GroupPreorder& p, const Value& a, const Value& b);
// Ordering of values; infinity sits above everything.
Ordering value_cmp(const GroupPreorder& p, const Value& a, const Value& b);

// Membership in the valuation ring {v(x) at-or-above 1} resp. its maximal
// ideal {v(x) strictly above 1}; 0 belongs to both.
bool in_ring(const GroupPreorder& p, const GroupAlgebraElement& x);
bool in_max_ideal(const GroupPreorder& p, const GroupAlgebraElement& x);

// For a standard preorder, h0 strictly positive of filtration depth 0, and
// nonzero x: a group element s with v(x^s * x ... ) -- precisely, the shift s
// such that s placed on the left of x lands the product in the maximal ideal:
// s = rep(v(x))^-1 * h0 when the representative has depth 0 and sits at or
// below h0^-1, otherwise s = h0.  Depends on x only through v(x), so
// high-value noise never changes it.
GVec standard_shift(const GroupPreorder& p, const GVec& h0, const GroupAlgebraElement& x);

// x translated by the monomial of g on the left.
GroupAlgebraElement left_translate(const GVec& g, const GroupAlgebraElement& x);

}  // namespace preord
