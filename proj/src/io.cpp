#include "preord/io.hpp"

#include <fstream>
#include <sstream>

namespace preord {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Errc::malformed_input, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

json rat_to_json(const Rat& x) { return rat_str(x); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  bad("expected a rational (integer or \"p/q\" string)");
}

json quadext_to_json(const QuadExt& x) {
  return json::array({rat_to_json(x.a()), rat_to_json(x.b())});
}

QuadExt quadext_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) bad("field scalar needs exactly two parts");
    return QuadExt(rat_from_json(j.at(0)), rat_from_json(j.at(1)));
  }
  if (j.is_object()) return QuadExt(rat_from_json(need(j, "a")), rat_from_json(need(j, "b")));
  return QuadExt(rat_from_json(j));
}

RatVec ratvec_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  RatVec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

json ratvec_to_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_to_json(x));
  return a;
}

json gvec_to_json(const GVec& v) {
  json a = json::array();
  for (const Int& x : v) {
    if (x.fits_slong_p()) {
      a.push_back(x.get_si());
    } else {
      a.push_back(x.get_str());
    }
  }
  return a;
}

GVec gvec_from_json(const json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  GVec v;
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      v.emplace_back(static_cast<long>(e.get<long long>()));
    } else if (e.is_string()) {
      Rat r = parse_rat(e.get<std::string>());
      if (r.get_den() != 1) bad("expected an integer, got " + rat_str(r));
      v.push_back(r.get_num());
    } else {
      bad("expected an integer coordinate");
    }
  }
  return v;
}

json matrix_preorder_to_json(const MatrixPreorder& p, bool canonical_rows) {
  json rows = json::array();
  for (const QVec& w : canonical_rows ? p.canonical_rows() : p.rows()) {
    json row = json::array();
    for (const QuadExt& x : w) row.push_back(quadext_to_json(x));
    rows.push_back(std::move(row));
  }
  return json{{"n", p.ambient()}, {"D", field::d()}, {"rows", std::move(rows)}};
}

MatrixPreorder matrix_preorder_from_json(const json& j) {
  std::size_t n = need(j, "n").get<std::size_t>();
  if (j.contains("D")) {
    long d = j.at("D").get<long>();
    if (d != field::d()) {
      fail(Errc::field_mismatch, "input field radicand " + std::to_string(d) +
                                     " does not match the active field " + std::to_string(field::d()));
    }
  }
  std::vector<QVec> rows;
  if (j.contains("rows")) {
    const json& jr = j.at("rows");
    if (!jr.is_array()) bad("'rows' must be an array");
    for (const auto& row : jr) {
      if (!row.is_array()) bad("weight row must be an array");
      QVec w;
      for (const auto& e : row) w.push_back(quadext_from_json(e));
      rows.push_back(std::move(w));
    }
  }
  return MatrixPreorder(n, std::move(rows));
}

json group_to_json(const GroupDesc& g) {
  if (g.abelian()) return json{{"group", "Zn"}, {"n", g.coords()}};
  return json{{"group", "heisenberg"}};
}

GroupDesc group_from_json(const json& j) {
  std::string name = need(j, "group").get<std::string>();
  if (name == "heisenberg") return GroupDesc::heisenberg();
  if (name == "Zn") return GroupDesc::zn(need(j, "n").get<std::size_t>());
  bad("unknown group '" + name + "'");
}

json layered_to_json(const LayeredPreorder& p) {
  switch (p.variant()) {
    case LayeredPreorder::Variant::Trivial:
      return json{{"variant", "trivial"}};
    case LayeredPreorder::Variant::Abelianized:
      return json{{"variant", "abelianized"}, {"tier0", matrix_preorder_to_json(p.tier0(), true)}};
    case LayeredPreorder::Variant::Composite:
      return json{{"variant", "composite"},
                  {"tier0", matrix_preorder_to_json(p.tier0(), true)},
                  {"tier1", matrix_preorder_to_json(p.tier1(), true)}};
    case LayeredPreorder::Variant::LeftLex: {
      json perm = json::array(), signs = json::array();
      for (int i = 0; i < 3; ++i) {
        perm.push_back(p.perm()[i]);
        signs.push_back(p.signs()[i]);
      }
      return json{{"variant", "left-lex"}, {"perm", std::move(perm)}, {"signs", std::move(signs)}};
    }
  }
  bad("unreachable layered variant");
}

LayeredPreorder layered_from_json(const json& j) {
  std::string v = need(j, "variant").get<std::string>();
  if (v == "trivial") return LayeredPreorder::trivial();
  if (v == "abelianized") return LayeredPreorder::abelianized(matrix_preorder_from_json(need(j, "tier0")));
  if (v == "composite") {
    return LayeredPreorder::composite(matrix_preorder_from_json(need(j, "tier0")),
                                      matrix_preorder_from_json(need(j, "tier1")));
  }
  if (v == "left-lex") {
    std::array<int, 3> perm{0, 2, 1}, signs{1, 1, 1};
    if (j.contains("perm")) {
      for (int i = 0; i < 3; ++i) perm[i] = j.at("perm").at(i).get<int>();
    }
    if (j.contains("signs")) {
      for (int i = 0; i < 3; ++i) signs[i] = j.at("signs").at(i).get<int>();
    }
    return LayeredPreorder::left_lex(perm, signs);
  }
  bad("unknown layered variant '" + v + "'");
}

json group_preorder_to_json(const GroupPreorder& p) {
  return p.is_matrix() ? matrix_preorder_to_json(p.matrix()) : layered_to_json(p.layered());
}

GroupPreorder group_preorder_from_json(const json& j) {
  if (j.is_object() && j.contains("variant")) return GroupPreorder(layered_from_json(j));
  MatrixPreorder p = matrix_preorder_from_json(j);
  std::size_t n = p.ambient();
  return GroupPreorder(n, std::move(p));
}

json lattice_to_json(const IntLattice& l) {
  json basis = json::array();
  for (const IntVec& b : l.basis()) basis.push_back(gvec_to_json(b));
  return json{{"n", l.ambient()}, {"basis", std::move(basis)}};
}

json algebra_to_json(const GroupAlgebraElement& x) {
  json terms = json::array();
  for (const auto& [g, c] : x.terms()) {
    terms.push_back(json{{"coeff", rat_to_json(c)}, {"g", gvec_to_json(g)}});
  }
  return json{{"group", group_to_json(x.group())}, {"terms", std::move(terms)}};
}

GroupAlgebraElement algebra_from_json(const json& j) {
  GroupDesc g = group_from_json(need(j, "group"));
  GroupAlgebraElement x(g);
  const json& terms = need(j, "terms");
  if (!terms.is_array()) bad("'terms' must be an array");
  for (const auto& t : terms) {
    x += GroupAlgebraElement::monomial(g, rat_from_json(need(t, "coeff")), gvec_from_json(need(t, "g")));
  }
  return x;
}

json open_to_json(const BasicOpen& s) {
  json prims = json::array();
  for (const auto& pr : s.prims) {
    prims.push_back(json{{"kind", pr.kind == OpenPrim::Kind::O ? "O" : "U"}, {"g", gvec_to_json(pr.g)}});
  }
  const char* topo = s.topo == BasicOpen::Topo::Z ? "Z" : (s.topo == BasicOpen::Topo::I ? "I" : "P");
  return json{{"topology", topo}, {"prims", std::move(prims)}};
}

BasicOpen open_from_json(const json& j) {
  std::vector<OpenPrim> prims;
  const json& jp = need(j, "prims");
  if (!jp.is_array()) bad("'prims' must be an array");
  for (const auto& p : jp) {
    std::string kind = need(p, "kind").get<std::string>();
    if (kind != "O" && kind != "U") bad("generator kind must be \"O\" or \"U\"");
    prims.push_back(OpenPrim{kind == "O" ? OpenPrim::Kind::O : OpenPrim::Kind::U,
                             gvec_from_json(need(p, "g"))});
  }
  BasicOpen s = BasicOpen::make(std::move(prims));
  if (j.contains("topology")) {
    std::string t = j.at("topology").get<std::string>();
    if (t == "Z") {
      s.topo = BasicOpen::Topo::Z;
    } else if (t == "I") {
      s.topo = BasicOpen::Topo::I;
    } else if (t == "P") {
      s.topo = BasicOpen::Topo::P;
    } else {
      bad("unknown topology '" + t + "'");
    }
    // Re-check the declared tag against the generators present.
    for (const auto& pr : s.prims) {
      if (s.topo == BasicOpen::Topo::Z && pr.kind == OpenPrim::Kind::U) {
        bad("Zariski basic opens admit only O generators");
      }
      if (s.topo == BasicOpen::Topo::I && pr.kind == OpenPrim::Kind::O) {
        bad("inverse-topology basic opens admit only U generators");
      }
    }
  }
  return s;
}

json value_to_json(const Value& v) {
  if (v.infinite) return json{{"infinite", true}};
  return json{{"infinite", false}, {"rep", gvec_to_json(v.rep)}};
}

Value value_from_json(const json& j) {
  if (j.contains("infinite") && j.at("infinite").get<bool>()) return Value::inf();
  Value v;
  v.rep = gvec_from_json(need(j, "rep"));
  return v;
}

json ordering_to_json(Ordering o) { return ordering_name(o); }

json load_json_arg(const std::string& arg) {
  json j = json::parse(arg, nullptr, false);
  if (!j.is_discarded()) return j;
  std::ifstream in(arg);
  if (!in) bad("argument is neither inline JSON nor a readable file: " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  j = json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) bad("file does not contain valid JSON: " + arg);
  return j;
}

}  // namespace preord
