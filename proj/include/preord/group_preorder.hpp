#pragma once

#include <variant>

#include "preord/layered.hpp"

namespace preord {

// Uniform handle for the two preorder carriers the kernel supports: a weight
// preorder on Z^n, or a layered preorder on the Heisenberg group.
class GroupPreorder {
 public:
  GroupPreorder(std::size_t n, MatrixPreorder p) : group_(GroupDesc::zn(n)), rep_(std::move(p)) {
    if (matrix().ambient() != n) fail(Errc::dimension_mismatch, "preorder ambient dimension mismatch");
  }
  explicit GroupPreorder(LayeredPreorder l)
      : group_(GroupDesc::heisenberg()), rep_(std::move(l)) {}

  const GroupDesc& group() const { return group_; }
  bool is_matrix() const { return std::holds_alternative<MatrixPreorder>(rep_); }
  const MatrixPreorder& matrix() const { return std::get<MatrixPreorder>(rep_); }
  const LayeredPreorder& layered() const { return std::get<LayeredPreorder>(rep_); }

  bool bi_invariant() const { return is_matrix() || layered().bi_invariant(); }

  Ordering side(const GVec& g) const {
    return is_matrix() ? matrix().side(g) : layered().side(g);
  }
  Ordering cmp(const GVec& g, const GVec& h) const {
    return is_matrix() ? matrix().cmp(g, h) : layered().cmp(g, h);
  }

  StandardCheck standard(std::size_t samples = 256, std::uint64_t seed = 0) const {
    return is_matrix() ? is_standard(matrix()) : is_standard(layered(), samples, seed);
  }

  bool operator==(const GroupPreorder& o) const {
    if (group_ != o.group_ || is_matrix() != o.is_matrix()) return false;
    return is_matrix() ? matrix() == o.matrix() : layered() == o.layered();
  }
  bool operator!=(const GroupPreorder& o) const { return !(*this == o); }

 private:
  GroupDesc group_;
  std::variant<MatrixPreorder, LayeredPreorder> rep_;
};

// A group element the two preorders place on different sides of the identity.
// nullopt when equal (structurally); throws Errc::cap_exceeded if the bounded
// search cannot tell two structurally different relations apart.
std::optional<GVec> distinguishing_element(const GroupPreorder& p, const GroupPreorder& q);

}  // namespace preord
