#include "deltachroma/json_io.hpp"

#include <algorithm>
#include <map>

namespace deltachroma {

using nlohmann::json;

std::string schema_name(InputKind kind) {
  switch (kind) {
    case InputKind::set_system: return "set-system/v1";
    case InputKind::f2_matrix: return "f2-matrix/v1";
    case InputKind::framed_graph: return "framed-graph/v1";
    case InputKind::ribbon: return "ribbon/v1";
  }
  return "";
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw SchemaError("schema error: " + what); }

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
  return *it;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad(std::string(what) + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

// Name -> index map with duplicate rejection.
std::map<std::string, int> index_names(const std::vector<std::string>& names, const char* what) {
  std::map<std::string, int> out;
  for (size_t i = 0; i < names.size(); ++i)
    if (!out.emplace(names[i], static_cast<int>(i)).second)
      bad(std::string("duplicate ") + what + " \"" + names[i] + "\"");
  return out;
}

}  // namespace

SetSystem parse_set_system(const json& j) {
  auto ground = string_list(field(j, "ground"), "ground");
  if (ground.size() > kGroundSetCap) bad("ground set exceeds 16 elements");
  auto index = index_names(ground, "ground element");
  const json& fj = field(j, "feasible");
  if (!fj.is_array()) bad("feasible must be an array");
  std::vector<Mask> feasible;
  for (const auto& set : fj) {
    Mask m = 0;
    for (const auto& name : string_list(set, "feasible set")) {
      auto it = index.find(name);
      if (it == index.end()) bad("feasible set names unknown element \"" + name + "\"");
      m |= Mask{1} << it->second;
    }
    feasible.push_back(m);
  }
  const int n = static_cast<int>(ground.size());
  try {
    return SetSystem(n, std::move(feasible), std::move(ground));
  } catch (const Error& e) {
    bad(e.what());
  }
}

F2SymMatrix parse_f2_matrix(const json& j) {
  const json& sz = field(j, "size");
  if (!sz.is_number_integer() || sz.get<long long>() < 0)
    bad("size must be a non-negative integer");
  const int n = sz.get<int>();
  if (n > kGroundSetCap) bad("matrix size exceeds 16");
  auto rows = string_list(field(j, "rows"), "rows");
  if (static_cast<int>(rows.size()) != n) bad("row count must equal size");
  std::vector<Mask> bits;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) bad("row length must equal size");
    Mask m = 0;
    for (int c = 0; c < n; ++c) {
      if (row[static_cast<size_t>(c)] == '1')
        m |= Mask{1} << c;
      else if (row[static_cast<size_t>(c)] != '0')
        bad("rows must be strings over {0,1}");
    }
    bits.push_back(m);
  }
  try {
    return F2SymMatrix(n, std::move(bits));
  } catch (const Error& e) {
    bad(e.what());
  }
}

FramedGraph parse_framed_graph(const json& j, std::vector<std::string>* names_out) {
  auto names = string_list(field(j, "vertices"), "vertices");
  if (names.size() > kGroundSetCap) bad("vertex count exceeds 16");
  auto index = index_names(names, "vertex");
  FramedGraph g(static_cast<int>(names.size()));
  const json& ej = field(j, "edges");
  if (!ej.is_array()) bad("edges must be an array");
  for (const auto& e : ej) {
    auto pair = string_list(e, "edge");
    if (pair.size() != 2) bad("each edge must list two vertices");
    auto ia = index.find(pair[0]), ib = index.find(pair[1]);
    if (ia == index.end() || ib == index.end()) bad("edge names unknown vertex");
    if (ia->second == ib->second) bad("self-loops are not allowed");
    if (g.has_edge(ia->second, ib->second)) bad("duplicate edge");
    g.set_edge(ia->second, ib->second, true);
  }
  if (j.contains("framing")) {
    const json& fr = j.at("framing");
    if (!fr.is_object()) bad("framing must be an object");
    for (auto it = fr.begin(); it != fr.end(); ++it) {
      auto iv = index.find(it.key());
      if (iv == index.end()) bad("framing names unknown vertex \"" + it.key() + "\"");
      if (!it.value().is_number_integer()) bad("framing values must be 0 or 1");
      int v = it.value().get<int>();
      if (v != 0 && v != 1) bad("framing values must be 0 or 1");
      g.set_framing(iv->second, v == 1);
    }
  }
  if (names_out) *names_out = std::move(names);
  return g;
}

RibbonGraph parse_ribbon(const json& j) {
  const json& vj = field(j, "vertices");
  if (!vj.is_array()) bad("vertices must be an array of half-edge lists");
  std::vector<std::string> half_names;
  std::vector<std::vector<std::string>> rotations_named;
  for (const auto& rot : vj) {
    rotations_named.push_back(string_list(rot, "vertex rotation"));
    for (const auto& h : rotations_named.back()) half_names.push_back(h);
  }
  auto index = index_names(half_names, "half-edge");
  // Ids follow rotation order, so the list order of the input is preserved.
  std::vector<std::vector<int>> rotations;
  for (const auto& rot : rotations_named) {
    rotations.emplace_back();
    for (const auto& h : rot) rotations.back().push_back(index.at(h));
  }
  const json& ej = field(j, "edges");
  if (!ej.is_array()) bad("edges must be an array");
  std::vector<RibbonEdge> edges;
  for (const auto& e : ej) {
    if (!e.is_object()) bad("ribbon edges must be objects");
    auto ends = string_list(field(e, "ends"), "ends");
    if (ends.size() != 2) bad("each edge needs exactly two ends");
    auto i1 = index.find(ends[0]), i2 = index.find(ends[1]);
    if (i1 == index.end() || i2 == index.end()) bad("edge end names unknown half-edge");
    bool twisted = false;
    if (e.contains("twisted")) {
      if (!e.at("twisted").is_boolean()) bad("twisted must be a boolean");
      twisted = e.at("twisted").get<bool>();
    }
    edges.push_back({i1->second, i2->second, twisted});
  }
  try {
    return RibbonGraph(std::move(rotations), std::move(edges));
  } catch (const Error& e) {
    bad(e.what());
  }
}

HopfElement parse_hopf_element(const json& j) {
  const json& terms = j.is_array() ? j : field(j, "terms");
  if (!terms.is_array()) bad("hopf element must be a term list");
  HopfElement h;
  for (const auto& t : terms) {
    const json& cj = field(t, "coeff");
    if (!cj.is_string()) bad("coeff must be a string");
    XPoly coeff;
    try {
      coeff = XPoly::parse(cj.get<std::string>());
    } catch (const std::exception& e) {
      bad(e.what());
    }
    SetSystem term = parse_set_system(field(t, "term"));
    h.add_term(canonicalize(validate_delta_matroid(term).system()), coeff);
  }
  return h;
}

SymFunc parse_symfunc(const json& j) {
  const json& terms = j.is_array() ? j : field(j, "terms");
  if (!terms.is_array()) bad("symmetric function must be a term list");
  SymFunc s;
  for (const auto& t : terms) {
    const json& pj = field(t, "partition");
    if (!pj.is_array()) bad("partition must be an array");
    std::vector<int> parts;
    for (const auto& p : pj) {
      if (!p.is_number_integer()) bad("partition parts must be integers");
      parts.push_back(p.get<int>());
    }
    const json& cj = field(t, "coeff");
    if (!cj.is_string()) bad("coeff must be a string");
    try {
      s.add_term(Partition(std::move(parts)), XPoly::parse(cj.get<std::string>()));
    } catch (const std::exception& e) {
      bad(e.what());
    }
  }
  return s;
}

InputObject parse_input(const json& j) {
  if (!j.is_object()) bad("input must be a JSON object");
  std::string tag;
  if (j.contains("schema")) {
    if (!j.at("schema").is_string()) bad("schema must be a string");
    tag = j.at("schema").get<std::string>();
  } else if (j.contains("ground")) {
    tag = "set-system/v1";
  } else if (j.contains("size") && j.contains("rows")) {
    tag = "f2-matrix/v1";
  } else if (j.contains("vertices") && j.at("vertices").is_array() &&
             (!j.at("vertices").empty() && j.at("vertices")[0].is_array())) {
    tag = "ribbon/v1";
  } else if (j.contains("vertices")) {
    tag = "framed-graph/v1";
  } else {
    bad("cannot determine input schema");
  }
  InputObject in;
  if (tag == "set-system/v1") {
    in.kind = InputKind::set_system;
    in.set_system = parse_set_system(j);
    in.element_labels = in.set_system->labels();
  } else if (tag == "f2-matrix/v1") {
    in.kind = InputKind::f2_matrix;
    in.matrix = parse_f2_matrix(j);
    for (int i = 1; i <= in.matrix->size(); ++i) in.element_labels.push_back(std::to_string(i));
  } else if (tag == "framed-graph/v1") {
    in.kind = InputKind::framed_graph;
    std::vector<std::string> names;
    in.framed_graph = parse_framed_graph(j, &names);
    in.element_labels = std::move(names);
  } else if (tag == "ribbon/v1") {
    in.kind = InputKind::ribbon;
    in.ribbon = parse_ribbon(j);
    for (int i = 1; i <= in.ribbon->edge_count(); ++i)
      in.element_labels.push_back(std::to_string(i));
  } else {
    bad("unknown schema \"" + tag + "\"");
  }
  return in;
}

DeltaMatroid to_delta_matroid(const InputObject& in) {
  switch (in.kind) {
    case InputKind::set_system: return validate_delta_matroid(*in.set_system);
    case InputKind::f2_matrix: return delta_matroid_of_matrix(*in.matrix);
    case InputKind::framed_graph: return delta_matroid_of_framed_graph(*in.framed_graph);
    case InputKind::ribbon: return delta_matroid_of_ribbon_graph(*in.ribbon);
  }
  throw Error("unreachable input kind");
}

json set_system_to_json(const SetSystem& s) {
  const auto names = s.labels();
  json feasible = json::array();
  for (Mask f : s.feasible()) {
    json set = json::array();
    for (int i = 0; i < s.size(); ++i)
      if (f & (Mask{1} << i)) set.push_back(names[static_cast<size_t>(i)]);
    feasible.push_back(std::move(set));
  }
  return json{{"schema", "set-system/v1"}, {"ground", names}, {"feasible", std::move(feasible)}};
}

json f2_matrix_to_json(const F2SymMatrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.size(); ++i) {
    std::string row(static_cast<size_t>(a.size()), '0');
    for (int j = 0; j < a.size(); ++j)
      if (a.entry(i, j)) row[static_cast<size_t>(j)] = '1';
    rows.push_back(std::move(row));
  }
  return json{{"schema", "f2-matrix/v1"}, {"size", a.size()}, {"rows", std::move(rows)}};
}

json framed_graph_to_json(const FramedGraph& g, const std::vector<std::string>& names) {
  json edges = json::array();
  for (auto [a, b] : g.edges())
    edges.push_back(json::array({names[static_cast<size_t>(a)], names[static_cast<size_t>(b)]}));
  json out{{"schema", "framed-graph/v1"}, {"vertices", names}, {"edges", std::move(edges)}};
  json framing = json::object();
  for (int v = 0; v < g.size(); ++v)
    if (g.framing(v)) framing[names[static_cast<size_t>(v)]] = 1;
  if (!framing.empty()) out["framing"] = std::move(framing);
  return out;
}

json ribbon_to_json(const RibbonGraph& g) {
  auto name_of = [](int h) { return "h" + std::to_string(h + 1); };
  json vertices = json::array();
  for (const auto& rot : g.rotations()) {
    json r = json::array();
    for (int h : rot) r.push_back(name_of(h));
    vertices.push_back(std::move(r));
  }
  json edges = json::array();
  for (const RibbonEdge& e : g.edges())
    edges.push_back(json{{"ends", json::array({name_of(e.h1), name_of(e.h2)})},
                         {"twisted", e.twisted}});
  return json{{"schema", "ribbon/v1"}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json hopf_element_to_json(const HopfElement& h) {
  json terms = json::array();
  for (const auto& [key, coeff] : h.terms()) {
    json term = set_system_to_json(key);
    term.erase("schema");
    terms.push_back(json{{"coeff", coeff.to_string()}, {"term", std::move(term)}});
  }
  return json{{"schema", "hopf-elt/v1"}, {"terms", std::move(terms)}};
}

json symfunc_to_json(const SymFunc& s) {
  json terms = json::array();
  for (const auto& [p, c] : s.terms())
    terms.push_back(json{{"partition", p.parts()}, {"coeff", c.to_string()}});
  return json{{"schema", "symfunc/v1"}, {"terms", std::move(terms)}};
}

}  // namespace deltachroma
