#pragma once

#include <string>

#include "preord/group_preorder.hpp"
#include "preord/rng.hpp"

namespace preord {

// One generator of a basic open set in the spectrum of bi-invariant preorders:
// O(g) = { preorders with g above-or-tied 1 }, U(g) = { g strictly above 1 }.
struct OpenPrim {
  enum class Kind { O, U };
  Kind kind;
  GVec g;
};

// Finite intersection of generators, tagged by the coarsest of the three
// standard topologies it lives in: Z allows only O, I only U, P both.
struct BasicOpen {
  enum class Topo { Z, I, P };
  Topo topo = Topo::P;
  std::vector<OpenPrim> prims;

  // Tag computed from the generators actually present.
  static BasicOpen make(std::vector<OpenPrim> prims);
  void validate(const GroupDesc& group) const;
};

bool member(const GroupPreorder& p, const BasicOpen& s);

struct Separation {
  BasicOpen open;
  bool contains_first = false;  // open contains p (else q)
  GVec witness;
};

// Basic open containing exactly one of two distinct preorders, with the group
// element certifying it.  Throws Errc::equal_inputs on equal inputs.
Separation separate(const GroupPreorder& p, const GroupPreorder& q);

struct NonstandardWitness {
  GVec g, h;              // violating pair: g > 1 but g*h is not
  BasicOpen patch_open;   // U(g) ∩ O((g h)^-1), a Patch neighbourhood of p
  BasicOpen inverse_open; // Inverse-topology neighbourhood of p
};

// The open-set construction underlying nonstandard_witness, usable with any
// side function on the Heisenberg group; check_fallback enforces membership
// in the tied-case fallback open.
struct WitnessOpens {
  BasicOpen patch_open, inverse_open;
};
WitnessOpens nonstandard_opens(const std::function<Ordering(const GVec&)>& side, const GVec& g,
                               const GVec& h, bool check_fallback);

// For a non-standard layered preorder, the witnessing pair plus the two opens
// built from it.  The inverse open is U(g) ∩ U((g h)^-1) when g h sits
// strictly below 1; in the tied case it falls back to U(g) ∩ U((g h^2)^-1),
// which the residue argument guarantees for bi-invariant inputs.
// Throws Errc::standard_input when the check verifies standardness.
NonstandardWitness nonstandard_witness(const LayeredPreorder& p,
                                       std::size_t samples = 256, std::uint64_t seed = 0);

struct PairCert {
  std::size_t i = 0, j = 0;
  GVec g;  // sides differ between witness i and witness j
};

struct CantorResult {
  bool feasible = false;
  std::vector<GroupPreorder> witnesses;
  std::vector<PairCert> certs;  // one per witness pair
};

// m pairwise distinct standard order witnesses inside the intersection of the
// given generators, or feasible=false when the bounded cone search finds no
// strictly positive base direction.  Deterministic for fixed inputs.
CantorResult cantor_witnesses(const GroupDesc& group, const std::vector<OpenPrim>& constraints,
                              std::size_t m);

// The three preorders on Q^1: trivial, and the two total orders.
std::vector<MatrixPreorder> enumerate_dim1();

// Breadth-first refinement tree over preorders on Q^n whose weight rows draw
// from the given entry alphabet: the root is trivial, children extend their
// parent by one canonical level.  Each preorder appears once (its parent — the
// one-level-shorter prefix — is unique).
struct RefinementTree {
  struct Node {
    MatrixPreorder p;
    std::size_t parent;  // npos for the root
    std::string label;
  };
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  std::size_t edges() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

// Throws Errc::cap_exceeded (mentioning the worst-case size) when the tree
// would pass max_nodes.
RefinementTree refinement_tree(std::size_t n, const std::vector<QuadExt>& entries,
                               std::size_t max_nodes = 10000);

// Deterministic DOT rendering: node ids are content hashes, output sorted.
std::string refinement_tree_dot(const RefinementTree& tree);

// Seeded draw from the signed-permutation lex family (LeftLex variants).
LayeredPreorder sample_left_lex(Rng& rng);

}  // namespace preord
