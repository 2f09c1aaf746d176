#include "preord/layered.hpp"

#include <algorithm>

#include "preord/rng.hpp"

namespace preord {

LayeredPreorder LayeredPreorder::trivial() {
  return LayeredPreorder(Variant::Trivial, MatrixPreorder::trivial(2), MatrixPreorder::trivial(1));
}

LayeredPreorder LayeredPreorder::abelianized(MatrixPreorder tier0) {
  return composite(std::move(tier0), MatrixPreorder::trivial(1));
}

LayeredPreorder LayeredPreorder::composite(MatrixPreorder tier0, MatrixPreorder tier1) {
  if (tier0.ambient() != 2 || tier1.ambient() != 1) {
    fail(Errc::dimension_mismatch, "layered preorder needs tiers on Z^2 and Z^1");
  }
  if (!tier1.is_trivial() && !tier0.is_order()) {
    fail(Errc::precondition_failed,
         "center comparison requires the abelianized tier to be an order (degree 0)");
  }
  Variant v = Variant::Composite;
  if (tier1.is_trivial()) v = tier0.is_trivial() ? Variant::Trivial : Variant::Abelianized;
  return LayeredPreorder(v, std::move(tier0), std::move(tier1));
}

LayeredPreorder LayeredPreorder::left_lex(std::array<int, 3> perm, std::array<int, 3> signs) {
  std::array<int, 3> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) fail(Errc::malformed_input, "left_lex: not a permutation of {0,1,2}");
  for (int s : signs) {
    if (s != 1 && s != -1) fail(Errc::malformed_input, "left_lex: signs must be +-1");
  }
  // The center coordinate cannot lead the key: the product twists c by a*b',
  // so {key <= 0} would not be closed under multiplication and the relation
  // would not be transitive.  Keys led by a or b stay additive whenever the
  // leading coordinate ties, which is exactly what lex closure needs.
  if (perm[0] == 2) {
    fail(Errc::precondition_failed, "left_lex: center-first key order is not transitive");
  }
  LayeredPreorder p(Variant::LeftLex, MatrixPreorder::trivial(2), MatrixPreorder::trivial(1));
  p.perm_ = perm;
  p.signs_ = signs;
  return p;
}

Ordering LayeredPreorder::rel_one(const GVec& d) const {
  if (d.size() != 3) fail(Errc::dimension_mismatch, "Heisenberg element needs 3 coordinates");
  if (variant_ == Variant::LeftLex) {
    for (int i = 0; i < 3; ++i) {
      int s = sgn(d[static_cast<std::size_t>(perm_[i])]) * signs_[i];
      if (s != 0) return ordering_from_sign(s);
    }
    return Ordering::Equiv;
  }
  Ordering o = tier0_.side(IntVec{d[0], d[1]});
  if (o != Ordering::Equiv) return o;
  return tier1_.side(IntVec{d[2]});
}

Ordering LayeredPreorder::cmp(const GVec& g, const GVec& h) const {
  // g vs h == h^-1 g vs 1; for LeftLex this is the defining left translation.
  return rel_one(group().mul(group().inv(h), g));
}

bool LayeredPreorder::operator==(const LayeredPreorder& o) const {
  if (variant_ != o.variant_) return false;
  if (variant_ == Variant::LeftLex) return perm_ == o.perm_ && signs_ == o.signs_;
  return tier0_ == o.tier0_ && tier1_ == o.tier1_;
}

LayeredPreorder layered_compose(const LayeredPreorder& x, const LayeredPreorder& y) {
  if (!x.bi_invariant() || !y.bi_invariant()) {
    fail(Errc::unsupported, "composition requires bi-invariant layered operands");
  }
  // Tie-breaking happens tier by tier, so composition does too: the result's
  // abelianized tier is the composed abelianized tiers, likewise the center.
  return LayeredPreorder::composite(compose(x.tier0(), y.tier0()),
                                    compose(x.tier1(), y.tier1()));
}

StandardCheck is_standard(const MatrixPreorder&) {
  // On Z^n the first filtration step is already the whole group and the next
  // is trivial: the coset of any g is {g} itself.
  return StandardCheck::ok(true);
}

StandardCheck is_standard(const LayeredPreorder& p, std::size_t samples, std::uint64_t seed) {
  if (p.bi_invariant()) {
    // Tier-0 positivity only reads the abelianized part, which central
    // multiplication leaves untouched; tier-1 cosets are singletons.
    return StandardCheck::ok(true);
  }
  return standard_search([&p](const GVec& g) { return p.side(g); }, samples, seed);
}

StandardCheck standard_search(const std::function<Ordering(const GVec&)>& side,
                              std::size_t samples, std::uint64_t seed) {
  GroupDesc grp = GroupDesc::heisenberg();
  auto violates = [&](const GVec& g, const GVec& h, StandardCheck& out) {
    if (grp.tier(g) != std::optional<int>(0)) return false;
    if (side(g) != Ordering::Greater) return false;
    if (side(grp.mul(g, h)) == Ordering::Greater) return false;
    out.verified = false;
    out.exact = false;
    out.g = g;
    out.h = h;
    return true;
  };
  StandardCheck found;
  // Small boxes first, coordinates descending, so verdicts are reproducible.
  for (long r = 1; r <= 3; ++r) {
    for (long a = r; a >= -r; --a) {
      for (long b = r; b >= -r; --b) {
        for (long c = r; c >= -r; --c) {
          GVec g{Int(a), Int(b), Int(c)};
          for (long hc = r; hc >= -r; --hc) {
            if (hc == 0) continue;
            if (violates(g, GVec{Int(0), Int(0), Int(hc)}, found)) return found;
          }
        }
      }
    }
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    GVec g{Int(rng.range(-5, 5)), Int(rng.range(-5, 5)), Int(rng.range(-5, 5))};
    long hc = rng.range(1, 8);
    if (rng.coin()) hc = -hc;
    if (violates(g, GVec{Int(0), Int(0), Int(hc)}, found)) return found;
  }
  return StandardCheck::ok(false);
}

std::optional<InvarianceViolation> right_invariance_violation(const LayeredPreorder& p,
                                                              long radius) {
  GroupDesc grp = GroupDesc::heisenberg();
  auto box = [](long r) {
    std::vector<GVec> out;
    for (long a = r; a >= -r; --a) {
      for (long b = r; b >= -r; --b) {
        for (long c = r; c >= -r; --c) out.push_back(GVec{Int(a), Int(b), Int(c)});
      }
    }
    return out;
  };
  for (long r = 1; r <= radius; ++r) {
    auto elems = box(r);
    for (const GVec& u : elems) {
      for (const GVec& v : elems) {
        Ordering c1 = p.cmp(u, v);
        for (const GVec& x : elems) {
          Ordering c2 = p.cmp(grp.mul(u, x), grp.mul(v, x));
          bool broke_le = c1 != Ordering::Greater && c2 == Ordering::Greater;
          bool broke_ge = c1 != Ordering::Less && c2 == Ordering::Less;
          if (broke_le || broke_ge) return InvarianceViolation{u, v, x};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace preord
