#include "preord/topology.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace preord {

BasicOpen BasicOpen::make(std::vector<OpenPrim> prims) {
  bool has_o = false, has_u = false;
  for (const auto& pr : prims) {
    (pr.kind == OpenPrim::Kind::O ? has_o : has_u) = true;
  }
  BasicOpen s;
  s.prims = std::move(prims);
  s.topo = has_u ? (has_o ? Topo::P : Topo::I) : Topo::Z;
  return s;
}

void BasicOpen::validate(const GroupDesc& group) const {
  for (const auto& pr : prims) {
    if (pr.g.size() != group.coords()) {
      fail(Errc::dimension_mismatch, "open-set generator width does not match the group");
    }
    if (topo == Topo::Z && pr.kind == OpenPrim::Kind::U) {
      fail(Errc::malformed_input, "Zariski basic opens admit only O generators");
    }
    if (topo == Topo::I && pr.kind == OpenPrim::Kind::O) {
      fail(Errc::malformed_input, "inverse-topology basic opens admit only U generators");
    }
  }
}

bool member(const GroupPreorder& p, const BasicOpen& s) {
  s.validate(p.group());
  for (const auto& pr : s.prims) {
    Ordering o = p.side(pr.g);
    bool ok = pr.kind == OpenPrim::Kind::O ? o != Ordering::Less : o == Ordering::Greater;
    if (!ok) return false;
  }
  return true;
}

std::optional<GVec> distinguishing_element(const GroupPreorder& p, const GroupPreorder& q) {
  if (p.group() != q.group()) fail(Errc::group_mismatch, "preorders live on different groups");
  if (p == q) return std::nullopt;
  if (p.is_matrix() && q.is_matrix()) {
    auto dv = distinguishing_vector(p.matrix(), q.matrix());
    return dv ? std::optional<GVec>(*dv) : std::nullopt;
  }
  if (!p.is_matrix() && !q.is_matrix() && p.layered().bi_invariant() && q.layered().bi_invariant()) {
    const LayeredPreorder& lp = p.layered();
    const LayeredPreorder& lq = q.layered();
    if (lp.tier0() != lq.tier0()) {
      auto dv = distinguishing_vector(lp.tier0(), lq.tier0());
      return GVec{(*dv)[0], (*dv)[1], Int(0)};
    }
    auto dv = distinguishing_vector(lp.tier1(), lq.tier1());
    return GVec{Int(0), Int(0), (*dv)[0]};
  }
  // A left-invariant relation is involved: bounded descending box search.
  for (long r = 1; r <= 4; ++r) {
    for (long a = r; a >= -r; --a) {
      for (long b = r; b >= -r; --b) {
        for (long c = r; c >= -r; --c) {
          GVec g{Int(a), Int(b), Int(c)};
          if (p.side(g) != q.side(g)) return g;
        }
      }
    }
  }
  fail(Errc::cap_exceeded, "no distinguishing element found within the search box");
}

Separation separate(const GroupPreorder& p, const GroupPreorder& q) {
  auto u = distinguishing_element(p, q);
  if (!u) fail(Errc::equal_inputs, "separate: the preorders are equal");
  Ordering a = p.side(*u), b = q.side(*u);
  Separation out;
  if (a == Ordering::Greater || b == Ordering::Greater) {
    out.witness = *u;
    out.contains_first = a == Ordering::Greater;
  } else {
    // One side is strictly below 1: its inverse is strictly above while the
    // tied side stays tied.
    out.witness = p.group().inv(*u);
    out.contains_first = a == Ordering::Less;
  }
  out.open = BasicOpen::make({OpenPrim{OpenPrim::Kind::U, out.witness}});
  const GroupPreorder& inside = out.contains_first ? p : q;
  const GroupPreorder& outside = out.contains_first ? q : p;
  if (!member(inside, out.open) || member(outside, out.open)) {
    fail(Errc::precondition_failed, "separation construction failed its own certificate");
  }
  return out;
}

WitnessOpens nonstandard_opens(const std::function<Ordering(const GVec&)>& side, const GVec& g,
                               const GVec& h, bool check_fallback) {
  GroupDesc grp = GroupDesc::heisenberg();
  GVec gh = grp.mul(g, h);
  WitnessOpens out;
  out.patch_open = BasicOpen::make(
      {OpenPrim{OpenPrim::Kind::U, g}, OpenPrim{OpenPrim::Kind::O, grp.inv(gh)}});
  if (side(g) != Ordering::Greater || side(gh) == Ordering::Greater) {
    fail(Errc::precondition_failed, "not a standardness violation pair");
  }
  if (side(gh) == Ordering::Less) {
    out.inverse_open = BasicOpen::make(
        {OpenPrim{OpenPrim::Kind::U, g}, OpenPrim{OpenPrim::Kind::U, grp.inv(gh)}});
  } else {
    // g h tied with 1: push one more h; membership relies on the residue
    // class being stable under the inner automorphisms a bi-invariant
    // preorder provides.
    GVec ghh = grp.mul(gh, h);
    out.inverse_open = BasicOpen::make(
        {OpenPrim{OpenPrim::Kind::U, g}, OpenPrim{OpenPrim::Kind::U, grp.inv(ghh)}});
    if (check_fallback && side(grp.inv(ghh)) != Ordering::Greater) {
      fail(Errc::precondition_failed, "fallback inverse open misses the input preorder");
    }
  }
  return out;
}

NonstandardWitness nonstandard_witness(const LayeredPreorder& p, std::size_t samples,
                                       std::uint64_t seed) {
  StandardCheck chk = is_standard(p, samples, seed);
  if (chk.verified) {
    fail(Errc::standard_input, chk.exact ? "preorder is standard" : "no standardness violation found within the search budget");
  }
  auto side = [&p](const GVec& v) { return p.side(v); };
  WitnessOpens opens = nonstandard_opens(side, chk.g, chk.h, p.bi_invariant());
  NonstandardWitness out;
  out.g = chk.g;
  out.h = chk.h;
  out.patch_open = std::move(opens.patch_open);
  out.inverse_open = std::move(opens.inverse_open);
  GroupPreorder wrapped(p);
  if (!member(wrapped, out.patch_open)) {
    fail(Errc::precondition_failed, "patch open misses the input preorder");
  }
  return out;
}

namespace {

bool lex_greater(const IntVec& x, const IntVec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c > 0;
  }
  return false;
}

bool primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g == 1;
}

Int norm2(const IntVec& v) {
  Int s = 0;
  for (const Int& x : v) s += x * x;
  return s;
}

// First primitive direction with strictly positive dot against every
// constraint, scanning max-norm shells; inside a shell smaller norms first,
// lex-descending among equals.  nullopt when the budget runs out (the cone is
// then treated as empty).
std::optional<IntVec> base_direction(const std::vector<IntVec>& cone, std::size_t k) {
  for (long rho = 1; rho <= 16; ++rho) {
    std::vector<IntVec> shell;
    std::vector<long> digits(k, 0);
    for (;;) {
      IntVec v(k);
      long maxabs = 0;
      for (std::size_t i = 0; i < k; ++i) {
        long c = rho - digits[i];
        v[i] = c;
        maxabs = std::max(maxabs, std::labs(c));
      }
      if (maxabs == rho && primitive(v)) shell.push_back(v);
      std::size_t pos = k;
      while (pos > 0 && digits[pos - 1] == 2 * rho) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
    std::stable_sort(shell.begin(), shell.end(), [](const IntVec& x, const IntVec& y) {
      Int nx = norm2(x), ny = norm2(y);
      if (nx != ny) return nx < ny;
      return lex_greater(x, y);
    });
    for (const IntVec& v : shell) {
      bool ok = true;
      for (const IntVec& c : cone) {
        Int s = 0;
        for (std::size_t i = 0; i < k; ++i) s += c[i] * v[i];
        if (sgn(s) <= 0) {
          ok = false;
          break;
        }
      }
      if (ok) return v;
    }
  }
  return std::nullopt;
}

// w0, then k*w0 + e for ascending k, skipping directions pushed out of the
// cone, until m directions accumulate.
std::vector<IntVec> cone_directions(const std::vector<IntVec>& cone, const IntVec& w0,
                                    std::size_t m) {
  const std::size_t k = w0.size();
  std::size_t ei = 0;
  while (ei < k) {
    // first standard basis vector independent of w0
    bool parallel = true;
    for (std::size_t i = 0; i < k && parallel; ++i) {
      if (i != ei && sgn(w0[i]) != 0) parallel = false;
    }
    if (!(parallel && sgn(w0[ei]) != 0)) break;
    ++ei;
  }
  if (ei == k) fail(Errc::precondition_failed, "ambient dimension too small to vary witnesses");
  std::vector<IntVec> dirs{w0};
  for (long t = 1; dirs.size() < m; ++t) {
    if (t > 100000) fail(Errc::cap_exceeded, "could not vary enough cone directions");
    IntVec d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = Int(t) * w0[i] + (i == ei ? 1 : 0);
    bool ok = true;
    for (const IntVec& c : cone) {
      Int s = 0;
      for (std::size_t i = 0; i < k; ++i) s += c[i] * d[i];
      if (sgn(s) <= 0) {
        ok = false;
        break;
      }
    }
    if (ok) dirs.push_back(std::move(d));
  }
  return dirs;
}

MatrixPreorder full_rank_order(std::size_t n, const IntVec& first) {
  std::vector<QVec> rows;
  rows.push_back(to_qvec(to_rat_vec(first)));
  for (std::size_t i = 0; i < n; ++i) {
    QVec e(n, QuadExt(0));
    e[i] = QuadExt(1);
    rows.push_back(std::move(e));
  }
  return MatrixPreorder(n, std::move(rows));
}

}  // namespace

CantorResult cantor_witnesses(const GroupDesc& group, const std::vector<OpenPrim>& constraints,
                              std::size_t m) {
  if (m == 0) fail(Errc::precondition_failed, "need at least one witness");
  const std::size_t width = group.coords();
  for (const auto& pr : constraints) {
    if (pr.g.size() != width) fail(Errc::dimension_mismatch, "constraint width does not match the group");
  }
  CantorResult res;

  std::vector<IntVec> cone;  // strict linear constraints on the direction space
  int center_sign = 0;       // Heisenberg: forced sign of the center tier
  const std::size_t k = group.abelian() ? width : 2;
  if (group.abelian() && width < 2) {
    fail(Errc::precondition_failed, "need ambient dimension at least 2 to vary witnesses");
  }
  for (const auto& pr : constraints) {
    auto tier = group.tier(pr.g);
    if (!tier) {  // identity element
      if (pr.kind == OpenPrim::Kind::U) return res;  // 1 > 1 is impossible
      continue;                                      // O(1) holds everywhere
    }
    // The witnesses are total orders off their residue, so O and U bind
    // identically on non-identity elements.
    if (*tier == 0) {
      IntVec c(pr.g.begin(), pr.g.begin() + static_cast<long>(k));
      cone.push_back(std::move(c));
    } else {
      int s = sgn(pr.g[2]);
      if (center_sign != 0 && center_sign != s) return res;  // conflicting center demands
      center_sign = s;
    }
  }

  auto w0 = base_direction(cone, k);
  if (!w0) return res;
  auto dirs = cone_directions(cone, *w0, m);

  for (const IntVec& d : dirs) {
    if (group.abelian()) {
      res.witnesses.emplace_back(width, full_rank_order(width, d));
    } else {
      MatrixPreorder t1(1, {QVec{QuadExt(center_sign == 0 ? 1 : center_sign)}});
      res.witnesses.emplace_back(
          LayeredPreorder::composite(full_rank_order(2, d), std::move(t1)));
    }
  }

  BasicOpen all = BasicOpen::make(constraints);
  for (std::size_t i = 0; i < res.witnesses.size(); ++i) {
    if (!member(res.witnesses[i], all)) {
      fail(Errc::precondition_failed, "constructed witness misses a constraint");
    }
    if (!res.witnesses[i].standard(0, 0).verified) {
      fail(Errc::precondition_failed, "constructed witness is not standard");
    }
    for (std::size_t j = i + 1; j < res.witnesses.size(); ++j) {
      auto g = distinguishing_element(res.witnesses[i], res.witnesses[j]);
      if (!g) fail(Errc::precondition_failed, "witnesses are not pairwise distinct");
      res.certs.push_back(PairCert{i, j, *g});
    }
  }
  res.feasible = true;
  return res;
}

std::vector<MatrixPreorder> enumerate_dim1() {
  return {MatrixPreorder::trivial(1), MatrixPreorder(1, {QVec{QuadExt(1)}}),
          MatrixPreorder(1, {QVec{QuadExt(-1)}})};
}

RefinementTree refinement_tree(std::size_t n, const std::vector<QuadExt>& entries,
                               std::size_t max_nodes) {
  if (n == 0 || entries.empty()) fail(Errc::precondition_failed, "need a positive dimension and a nonempty entry alphabet");
  auto worst_case = [&]() {
    unsigned long long r = 1, total = 1, layer = 1;
    for (std::size_t i = 0; i < n; ++i) r *= entries.size();
    for (std::size_t d = 0; d < n; ++d) {
      layer *= r;
      total += layer;
    }
    return total;
  };
  auto cap_error = [&]() {
    fail(Errc::cap_exceeded, "refinement tree larger than " + std::to_string(max_nodes) +
                                 " nodes (worst case " + std::to_string(worst_case()) + ")");
  };

  // All candidate weight rows over the alphabet.
  std::vector<QVec> candidates;
  {
    std::vector<std::size_t> digits(n, 0);
    for (;;) {
      QVec row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = entries[digits[i]];
      candidates.push_back(std::move(row));
      std::size_t pos = n;
      while (pos > 0 && digits[pos - 1] + 1 == entries.size()) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }

  auto label_of = [](const MatrixPreorder& p) {
    if (p.is_trivial()) return std::string("trivial");
    std::string s;
    for (const auto& row : p.canonical_rows()) {
      if (!s.empty()) s += "; ";
      s += "(";
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) s += ",";
        s += row[i].str();
      }
      s += ")";
    }
    return s;
  };

  RefinementTree tree;
  tree.nodes.push_back({MatrixPreorder::trivial(n), RefinementTree::npos, "trivial"});
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      if (tree.nodes[idx].p.degree() == 0) continue;  // nothing left to refine
      std::set<std::string> seen;
      std::vector<QVec> base = tree.nodes[idx].p.canonical_rows();
      for (const QVec& cand : candidates) {
        std::vector<QVec> rows = base;
        rows.push_back(cand);
        MatrixPreorder q(n, std::move(rows));
        if (q.rank() == tree.nodes[idx].p.rank()) continue;  // row died on the residue
        if (!seen.insert(q.canonical().key()).second) continue;
        if (tree.nodes.size() >= max_nodes) cap_error();
        next.push_back(tree.nodes.size());
        tree.nodes.push_back({std::move(q), idx, ""});
        tree.nodes.back().label = label_of(tree.nodes.back().p);
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

std::string refinement_tree_dot(const RefinementTree& tree) {
  auto id_of = [](const MatrixPreorder& p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "n%016llx",
                  static_cast<unsigned long long>(fnv1a(p.canonical().key())));
    return std::string(buf);
  };
  std::vector<std::string> node_lines, edge_lines;
  std::vector<std::string> ids(tree.nodes.size());
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    ids[i] = id_of(tree.nodes[i].p);
    node_lines.push_back("  \"" + ids[i] + "\" [label=\"" + tree.nodes[i].label + "\"];");
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    if (tree.nodes[i].parent == RefinementTree::npos) continue;
    edge_lines.push_back("  \"" + ids[tree.nodes[i].parent] + "\" -> \"" + ids[i] + "\";");
  }
  std::sort(node_lines.begin(), node_lines.end());
  std::sort(edge_lines.begin(), edge_lines.end());
  std::string out = "digraph refinement_tree {\n  node [shape=box];\n";
  for (const auto& l : node_lines) out += l + "\n";
  for (const auto& l : edge_lines) out += l + "\n";
  out += "}\n";
  return out;
}

LayeredPreorder sample_left_lex(Rng& rng) {
  // Only the key orders the factory accepts: a or b leading (see left_lex).
  static const std::array<std::array<int, 3>, 4> perms = {
      std::array<int, 3>{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}};
  std::array<int, 3> perm = perms[rng.below(perms.size())];
  std::array<int, 3> signs;
  for (auto& s : signs) s = rng.coin() ? 1 : -1;
  return LayeredPreorder::left_lex(perm, signs);
}

}  // namespace preord
