#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "preord/heisenberg.hpp"

namespace preord {

// Group elements travel as coordinate vectors: length n for Z^n, length 3
// (a, b, c) for Heisenberg.
using GVec = IntVec;

// A finitely generated torsion-free nilpotent group together with its lower
// central series filtration.  Only the two groups the kernel works with.
class GroupDesc {
 public:
  enum class Kind { Zn, Heisenberg };

  static GroupDesc zn(std::size_t n) { return GroupDesc(Kind::Zn, n); }
  static GroupDesc heisenberg() { return GroupDesc(Kind::Heisenberg, 3); }

  Kind kind() const { return kind_; }
  std::size_t coords() const { return n_; }
  bool abelian() const { return kind_ == Kind::Zn; }

  // Dimensions of the successive filtration quotients: {n} resp. {2, 1}.
  std::vector<std::size_t> tier_dims() const {
    return kind_ == Kind::Zn ? std::vector<std::size_t>{n_} : std::vector<std::size_t>{2, 1};
  }

  GVec id() const { return GVec(n_, Int(0)); }
  GVec mul(const GVec& x, const GVec& y) const;
  GVec inv(const GVec& x) const;
  // nullopt = identity (infinite depth).
  std::optional<int> tier(const GVec& x) const;

  std::string name() const { return kind_ == Kind::Zn ? "Z" + std::to_string(n_) : "heisenberg"; }

  bool operator==(const GroupDesc& o) const { return kind_ == o.kind_ && n_ == o.n_; }
  bool operator!=(const GroupDesc& o) const { return !(*this == o); }

 private:
  GroupDesc(Kind k, std::size_t n) : kind_(k), n_(n) {}

  Kind kind_;
  std::size_t n_;
};

inline Heis to_heis(const GVec& v) {
  if (v.size() != 3) fail(Errc::dimension_mismatch, "Heisenberg element needs 3 coordinates");
  return Heis{v[0], v[1], v[2]};
}

inline GVec from_heis(const Heis& h) { return GVec{h.a, h.b, h.c}; }

inline GVec GroupDesc::mul(const GVec& x, const GVec& y) const {
  if (x.size() != n_ || y.size() != n_) fail(Errc::dimension_mismatch, "group element width mismatch");
  if (kind_ == Kind::Heisenberg) return from_heis(h_mul(to_heis(x), to_heis(y)));
  GVec z(n_);
  for (std::size_t i = 0; i < n_; ++i) z[i] = x[i] + y[i];
  return z;
}

inline GVec GroupDesc::inv(const GVec& x) const {
  if (x.size() != n_) fail(Errc::dimension_mismatch, "group element width mismatch");
  if (kind_ == Kind::Heisenberg) return from_heis(h_inv(to_heis(x)));
  GVec z(n_);
  for (std::size_t i = 0; i < n_; ++i) z[i] = -x[i];
  return z;
}

inline std::optional<int> GroupDesc::tier(const GVec& x) const {
  if (x.size() != n_) fail(Errc::dimension_mismatch, "group element width mismatch");
  if (kind_ == Kind::Heisenberg) return h_tier(to_heis(x));
  for (const Int& c : x) {
    if (sgn(c) != 0) return 0;
  }
  return std::nullopt;
}

}  // namespace preord
