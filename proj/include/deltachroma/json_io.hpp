#pragma once

// Parsing and serialization of the wire schemas. Masks never appear on the
// wire; every schema speaks element names.
//
//   set-system/v1    {"ground":["a","b"],"feasible":[[],["a","b"]]}
//   f2-matrix/v1     {"size":2,"rows":["01","10"]}
//   framed-graph/v1  {"vertices":["u","v"],"edges":[["u","v"]],"framing":{"v":1}}
//   ribbon/v1        {"vertices":[["h1","h2"]],"edges":[{"ends":["h1","h2"],"twisted":true}]}
//   hopf-elt/v1      [{"coeff":"-x","term":<set-system/v1>}]
//   symfunc/v1       [{"partition":[1,1],"coeff":"1"}]
//
// A top-level "schema" string is accepted anywhere and required when the
// payload alone would be ambiguous (it never is for the four input kinds).

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "deltachroma/binary.hpp"
#include "deltachroma/graphs.hpp"
#include "deltachroma/hopf.hpp"
#include "deltachroma/ribbon.hpp"
#include "deltachroma/setsystem.hpp"
#include "deltachroma/symfunc.hpp"

namespace deltachroma {

class SchemaError : public Error {
 public:
  using Error::Error;
};

enum class InputKind { set_system, f2_matrix, framed_graph, ribbon };

std::string schema_name(InputKind kind);

// A validated input plus the label table for the ground set of the
// delta-matroid it induces (vertex names for graphs, edge names for ribbon
// graphs, ground names for set systems, 1..n for matrices).
struct InputObject {
  InputKind kind;
  std::optional<SetSystem> set_system;
  std::optional<F2SymMatrix> matrix;
  std::optional<FramedGraph> framed_graph;
  std::optional<RibbonGraph> ribbon;
  std::vector<std::string> element_labels;
};

InputObject parse_input(const nlohmann::json& j);

// Converts any input to its delta-matroid (validating set systems).
DeltaMatroid to_delta_matroid(const InputObject& in);

SetSystem parse_set_system(const nlohmann::json& j);
F2SymMatrix parse_f2_matrix(const nlohmann::json& j);
FramedGraph parse_framed_graph(const nlohmann::json& j, std::vector<std::string>* names = nullptr);
RibbonGraph parse_ribbon(const nlohmann::json& j);
HopfElement parse_hopf_element(const nlohmann::json& j);
SymFunc parse_symfunc(const nlohmann::json& j);

nlohmann::json set_system_to_json(const SetSystem& s);
nlohmann::json f2_matrix_to_json(const F2SymMatrix& a);
nlohmann::json framed_graph_to_json(const FramedGraph& g, const std::vector<std::string>& names);
nlohmann::json ribbon_to_json(const RibbonGraph& g);
nlohmann::json hopf_element_to_json(const HopfElement& h);
nlohmann::json symfunc_to_json(const SymFunc& s);

}  // namespace deltachroma
