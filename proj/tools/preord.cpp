#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "preord/io.hpp"

using namespace preord;

namespace {

MatrixPreorder matrix_arg(const std::string& s) {
  return matrix_preorder_from_json(load_json_arg(s));
}

GroupPreorder preorder_arg(const std::string& s) {
  return group_preorder_from_json(load_json_arg(s));
}

json canonical_json(const MatrixPreorder& p) { return matrix_preorder_to_json(p, true); }

json preorder_json(const GroupPreorder& p) {
  return p.is_matrix() ? canonical_json(p.matrix()) : layered_to_json(p.layered());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact kernel for bi-invariant preorders on Z^n and the Heisenberg group"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::size_t samples = 256;
  std::size_t max_nodes = 10000;
  app.add_option("--seed", seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--samples", samples, "sample budget for sampled checks")->capture_default_str();
  app.add_option("--max-nodes", max_nodes, "node cap for zr-tree")->capture_default_str();
  // Applied while parsing, so it is in force before any preorder JSON loads.
  app.add_option_function<long>(
         "--field-d", [](long d) { field::set_d(d); },
         "radicand D of the scalar field Q(sqrt D), default 2");

  std::string a1, a2, a3;
  std::size_t count = 1;
  std::size_t dim = 2;

  json payload, certificate;
  bool raw_output = false;
  std::string raw;

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  {
    auto* s = sub("canon", "canonical form, rank and degree of a preorder");
    s->add_option("preorder", a1)->required();
    s->callback([&] {
      GroupPreorder p = preorder_arg(a1);
      payload["preorder"] = preorder_json(p);
      if (p.is_matrix()) {
        payload["rank"] = p.matrix().rank();
        payload["degree"] = p.matrix().degree();
      }
    });
  }
  {
    auto* s = sub("cmp", "compare two vectors / group elements under a preorder");
    s->add_option("preorder", a1)->required();
    s->add_option("u", a2)->required();
    s->add_option("v", a3)->required();
    s->callback([&] {
      GroupPreorder p = preorder_arg(a1);
      if (p.is_matrix()) {
        payload["ordering"] =
            ordering_to_json(p.matrix().cmp(ratvec_from_json(load_json_arg(a2)),
                                            ratvec_from_json(load_json_arg(a3))));
      } else {
        payload["ordering"] = ordering_to_json(
            p.cmp(gvec_from_json(load_json_arg(a2)), gvec_from_json(load_json_arg(a3))));
      }
    });
  }
  {
    auto* s = sub("compose", "compose two preorders (first compares, second breaks ties)");
    s->add_option("first", a1)->required();
    s->add_option("second", a2)->required();
    s->callback([&] {
      GroupPreorder p = preorder_arg(a1), q = preorder_arg(a2);
      if (p.is_matrix() != q.is_matrix()) fail(Errc::group_mismatch, "operands live on different groups");
      if (p.is_matrix()) {
        payload["preorder"] = canonical_json(compose(p.matrix(), q.matrix()));
      } else {
        payload["preorder"] = layered_to_json(layered_compose(p.layered(), q.layered()));
      }
    });
  }
  {
    auto* s = sub("rank", "number of canonical levels");
    s->add_option("preorder", a1)->required();
    s->callback([&] { payload["rank"] = matrix_arg(a1).rank(); });
  }
  {
    auto* s = sub("degree", "dimension of the rational kernel");
    s->add_option("preorder", a1)->required();
    s->callback([&] { payload["degree"] = matrix_arg(a1).degree(); });
  }
  {
    auto* s = sub("meet", "finest common coarsening");
    s->add_option("first", a1)->required();
    s->add_option("second", a2)->required();
    s->callback([&] {
      payload["preorder"] = canonical_json(meet(matrix_arg(a1), matrix_arg(a2)));
    });
  }
  {
    auto* s = sub("refines", "does the second preorder refine the first?");
    s->add_option("coarse", a1)->required();
    s->add_option("fine", a2)->required();
    s->callback([&] { payload["refines"] = refines(matrix_arg(a1), matrix_arg(a2)); });
  }
  {
    auto* s = sub("raf-minus", "chain of coarsenings, trivial to the input");
    s->add_option("preorder", a1)->required();
    s->callback([&] {
      json chain = json::array();
      for (const auto& p : coarsening_chain(matrix_arg(a1))) chain.push_back(canonical_json(p));
      payload["chain"] = std::move(chain);
    });
  }
  {
    auto* s = sub("decompose", "rank-one factors composing to the input");
    s->add_option("preorder", a1)->required();
    s->callback([&] {
      MatrixPreorder p = matrix_arg(a1);
      json factors = json::array();
      MatrixPreorder acc = MatrixPreorder::trivial(p.ambient());
      for (const auto& f : decompose(p)) {
        factors.push_back(canonical_json(f));
        acc = compose(acc, f);
      }
      payload["factors"] = std::move(factors);
      certificate["recomposed_equal"] = acc == p;
    });
  }
  {
    auto* s = sub("residue", "integer residue lattice (equivalence class of 0)");
    s->add_option("preorder", a1)->required();
    s->callback([&] { payload["lattice"] = lattice_to_json(matrix_arg(a1).residue_lattice()); });
  }
  {
    auto* s = sub("pullback", "transport a preorder along a unimodular matrix");
    s->add_option("preorder", a1)->required();
    s->add_option("matrix", a2)->required();
    s->callback([&] {
      json jm = load_json_arg(a2);
      std::vector<IntVec> m;
      for (const auto& row : jm) m.push_back(gvec_from_json(row));
      payload["preorder"] = canonical_json(pullback(matrix_arg(a1), m));
    });
  }
  {
    auto* s = sub("topo-member", "is the preorder in the basic open set?");
    s->add_option("preorder", a1)->required();
    s->add_option("open", a2)->required();
    s->callback([&] {
      payload["member"] = member(preorder_arg(a1), open_from_json(load_json_arg(a2)));
    });
  }
  {
    auto* s = sub("separate", "basic open containing exactly one of two preorders");
    s->add_option("first", a1)->required();
    s->add_option("second", a2)->required();
    s->callback([&] {
      Separation sep = separate(preorder_arg(a1), preorder_arg(a2));
      payload["open"] = open_to_json(sep.open);
      payload["contains"] = sep.contains_first ? "first" : "second";
      certificate["witness"] = gvec_to_json(sep.witness);
    });
  }
  {
    auto* s = sub("cantor-witness", "distinct standard order witnesses in a basic open");
    s->add_option("group", a1)->required();
    s->add_option("open", a2)->required();
    s->add_option("count", count)->required();
    s->callback([&] {
      GroupDesc g = group_from_json(load_json_arg(a1));
      BasicOpen open = open_from_json(load_json_arg(a2));
      CantorResult r = cantor_witnesses(g, open.prims, count);
      payload["feasible"] = r.feasible;
      json ws = json::array();
      for (const auto& w : r.witnesses) ws.push_back(preorder_json(w));
      payload["witnesses"] = std::move(ws);
      json pairs = json::array();
      for (const auto& c : r.certs) {
        pairs.push_back(json{{"i", c.i}, {"j", c.j}, {"g", gvec_to_json(c.g)}});
      }
      certificate["pairs"] = std::move(pairs);
    });
  }
  {
    auto* s = sub("standard-check", "is the preorder standard for the filtration?");
    s->add_option("preorder", a1)->required();
    s->callback([&] {
      StandardCheck c = preorder_arg(a1).standard(samples, seed);
      payload["standard"] = c.verified;
      payload["exact"] = c.exact;
      if (!c.verified) {
        certificate["g"] = gvec_to_json(c.g);
        certificate["h"] = gvec_to_json(c.h);
      }
    });
  }
  {
    auto* s = sub("nonstandard-witness", "violating pair and its Patch/Inverse opens");
    s->add_option("preorder", a1)->required();
    s->callback([&] {
      GroupPreorder p = preorder_arg(a1);
      if (p.is_matrix()) fail(Errc::standard_input, "preorder is standard");
      NonstandardWitness w = nonstandard_witness(p.layered(), samples, seed);
      payload["g"] = gvec_to_json(w.g);
      payload["h"] = gvec_to_json(w.h);
      payload["patch_open"] = open_to_json(w.patch_open);
      payload["inverse_open"] = open_to_json(w.inverse_open);
    });
  }
  {
    auto* s = sub("val", "monomial valuation of a group algebra element");
    s->add_option("preorder", a1)->required();
    s->add_option("element", a2)->required();
    s->callback([&] {
      payload["value"] = value_to_json(valuate(preorder_arg(a1), algebra_from_json(load_json_arg(a2))));
    });
  }
  {
    auto* s = sub("leading-form", "terms of minimal value");
    s->add_option("preorder", a1)->required();
    s->add_option("element", a2)->required();
    s->callback([&] {
      payload["element"] =
          algebra_to_json(leading_form(preorder_arg(a1), algebra_from_json(load_json_arg(a2))));
    });
  }
  {
    auto* s = sub("ring-member", "membership in the valuation ring");
    s->add_option("preorder", a1)->required();
    s->add_option("element", a2)->required();
    s->callback([&] {
      payload["member"] = in_ring(preorder_arg(a1), algebra_from_json(load_json_arg(a2)));
    });
  }
  {
    auto* s = sub("max-ideal-member", "membership in the maximal ideal");
    s->add_option("preorder", a1)->required();
    s->add_option("element", a2)->required();
    s->callback([&] {
      payload["member"] = in_max_ideal(preorder_arg(a1), algebra_from_json(load_json_arg(a2)));
    });
  }
  {
    auto* s = sub("shift", "standard shift pushing an element into the maximal ideal");
    s->add_option("--p", a1, "preorder")->required();
    s->add_option("--h0", a2, "strictly positive depth-0 element")->required();
    s->add_option("--P", a3, "group algebra element")->required();
    s->callback([&] {
      GroupPreorder p = preorder_arg(a1);
      GVec h0 = gvec_from_json(load_json_arg(a2));
      GroupAlgebraElement x = algebra_from_json(load_json_arg(a3));
      payload["shift"] = gvec_to_json(standard_shift(p, h0, x));
    });
  }
  {
    auto* s = sub("zr-tree", "DOT refinement tree of preorders over an entry alphabet");
    s->add_option("--n", dim, "ambient dimension")->required();
    s->add_option("--entries", a1, "JSON array of weight entries")->required();
    s->callback([&] {
      std::vector<QuadExt> entries;
      for (const auto& e : load_json_arg(a1)) entries.push_back(quadext_from_json(e));
      raw = refinement_tree_dot(refinement_tree(dim, entries, max_nodes));
      raw_output = true;
    });
  }
  {
    auto* s = sub("enumerate-q1", "the three preorders on Q^1");
    s->callback([&] {
      json ps = json::array();
      for (const auto& p : enumerate_dim1()) ps.push_back(canonical_json(p));
      payload["preorders"] = std::move(ps);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    json err{{"status", "error"}, {"reason", errc_name(e.code())}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err{{"status", "error"}, {"reason", "internal_error"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }

  if (raw_output) {
    std::cout << raw;
    return 0;
  }
  json envelope{{"status", "ok"}, {"payload", payload}};
  if (!certificate.is_null()) envelope["certificate"] = certificate;
  std::cout << envelope.dump(2) << "\n";
  return 0;
}
