#include "preord/group_algebra.hpp"

namespace preord {

GroupAlgebraElement GroupAlgebraElement::monomial(const GroupDesc& group, const Rat& coeff,
                                                  const GVec& g) {
  if (g.size() != group.coords()) fail(Errc::dimension_mismatch, "exponent width does not match the group");
  GroupAlgebraElement x(group);
  x.add_term(g, coeff);
  return x;
}

void GroupAlgebraElement::add_term(const GVec& g, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (group_ != o.group_) fail(Errc::group_mismatch, "group algebra elements live on different groups");
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  if (group_ != o.group_) fail(Errc::group_mismatch, "group algebra elements live on different groups");
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement r(group_);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
  return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (x.group_ != y.group_) fail(Errc::group_mismatch, "group algebra elements live on different groups");
  GroupAlgebraElement r(x.group_);
  for (const auto& [g, c] : x.terms_) {
    for (const auto& [h, d] : y.terms_) r.add_term(x.group_.mul(g, h), c * d);
  }
  return r;
}

GroupAlgebraElement left_translate(const GVec& g, const GroupAlgebraElement& x) {
  return GroupAlgebraElement::monomial(x.group(), 1, g) * x;
}

namespace {

void require_valuation_preorder(const GroupPreorder& p) {
  if (!p.bi_invariant()) {
    fail(Errc::unsupported, "monomial valuations need a bi-invariant preorder");
  }
}

void require_same_group(const GroupPreorder& p, const GroupAlgebraElement& x) {
  if (p.group() != x.group()) fail(Errc::group_mismatch, "preorder and element groups differ");
}

}  // namespace

GVec value_rep(const GroupPreorder& p, const GVec& g) {
  require_valuation_preorder(p);
  if (p.is_matrix()) return p.matrix().residue_lattice().reduce(g);
  const LayeredPreorder& l = p.layered();
  switch (l.variant()) {
    case LayeredPreorder::Variant::Trivial:
      return p.group().id();
    case LayeredPreorder::Variant::Abelianized: {
      // Residue: the abelianized residue lattice times the whole center.
      IntVec ab = l.tier0().residue_lattice().reduce(IntVec{g[0], g[1]});
      return GVec{ab[0], ab[1], Int(0)};
    }
    default:
      // Composite: degree-0 tier0 and a center order leave a trivial residue.
      return g;
  }
}

Value valuate(const GroupPreorder& p, const GroupAlgebraElement& x) {
  require_valuation_preorder(p);
  require_same_group(p, x);
  if (x.is_zero()) return Value::inf();
  const GVec* best = nullptr;
  for (const auto& term : x.terms()) {
    if (!best || p.cmp(term.first, *best) == Ordering::Less) best = &term.first;
  }
  Value v;
  v.rep = value_rep(p, *best);
  return v;
}

GroupAlgebraElement leading_form(const GroupPreorder& p, const GroupAlgebraElement& x) {
  require_valuation_preorder(p);
  require_same_group(p, x);
  if (x.is_zero()) fail(Errc::zero_input, "leading form of the zero element is undefined");
  GroupAlgebraElement r(x.group());
  const GVec* best = nullptr;
  for (const auto& term : x.terms()) {
    if (!best || p.cmp(term.first, *best) == Ordering::Less) best = &term.first;
  }
  for (const auto& [g, c] : x.terms()) {
    if (p.cmp(g, *best) == Ordering::Equiv) r += GroupAlgebraElement::monomial(x.group(), c, g);
  }
  return r;
}

Value value_mul(const GroupPreorder& p, const Value& a, const Value& b) {
  require_valuation_preorder(p);
  if (a.infinite || b.infinite) return Value::inf();
  Value v;
  v.rep = value_rep(p, p.group().mul(a.rep, b.rep));
  return v;
}

Ordering value_cmp(const GroupPreorder& p, const Value& a, const Value& b) {
  require_valuation_preorder(p);
  if (a.infinite && b.infinite) return Ordering::Equiv;
  if (a.infinite) return Ordering::Greater;
  if (b.infinite) return Ordering::Less;
  return p.cmp(a.rep, b.rep);
}

bool in_ring(const GroupPreorder& p, const GroupAlgebraElement& x) {
  Value v = valuate(p, x);
  return v.infinite || p.side(v.rep) != Ordering::Less;
}

bool in_max_ideal(const GroupPreorder& p, const GroupAlgebraElement& x) {
  Value v = valuate(p, x);
  return v.infinite || p.side(v.rep) == Ordering::Greater;
}

GVec standard_shift(const GroupPreorder& p, const GVec& h0, const GroupAlgebraElement& x) {
  require_valuation_preorder(p);
  require_same_group(p, x);
  if (!p.standard(0, 0).verified) fail(Errc::precondition_failed, "standard preorder required");
  const GroupDesc& grp = p.group();
  if (grp.tier(h0) != std::optional<int>(0)) {
    fail(Errc::precondition_failed, "h0 must have filtration depth 0");
  }
  if (p.side(h0) != Ordering::Greater) {
    fail(Errc::precondition_failed, "h0 must be strictly above the identity");
  }
  if (x.is_zero()) fail(Errc::zero_input, "shift of the zero element is undefined");
  GVec g0 = valuate(p, x).rep;
  // Depth-0 representative at or below h0^-1: climb past it; otherwise one
  // step by h0 already clears the ring.
  if (grp.tier(g0) == std::optional<int>(0) &&
      p.cmp(g0, grp.inv(h0)) != Ordering::Greater) {
    return grp.mul(grp.inv(g0), h0);
  }
  return h0;
}

}  // namespace preord
