#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltachroma/json_io.hpp"
#include "test_util.hpp"

using namespace deltachroma;
using dctest::dm;
using nlohmann::json;

TEST_CASE("set system schema") {
  json j = json::parse(R"({"ground":["a","b"],"feasible":[[],["a","b"]]})");
  SetSystem s = parse_set_system(j);
  CHECK(s.size() == 2);
  CHECK(s.feasible() == std::vector<Mask>{0, 3});
  CHECK(s.labels() == std::vector<std::string>{"a", "b"});
  CHECK(parse_set_system(set_system_to_json(s)) == s);
  CHECK_THROWS_AS(parse_set_system(json::parse(R"({"feasible":[]})")), SchemaError);
  CHECK_THROWS_AS(parse_set_system(json::parse(R"({"ground":["a","a"],"feasible":[]})")),
                  SchemaError);
  CHECK_THROWS_AS(parse_set_system(json::parse(R"({"ground":["a"],"feasible":[["b"]]})")),
                  SchemaError);
  CHECK_THROWS_AS(parse_set_system(json::parse(R"({"ground":["a"],"feasible":[[],[]]})")),
                  SchemaError);
}

TEST_CASE("matrix schema") {
  json j = json::parse(R"({"size":2,"rows":["01","10"]})");
  F2SymMatrix a = parse_f2_matrix(j);
  CHECK(a.entry(0, 1));
  CHECK(!a.entry(0, 0));
  CHECK(parse_f2_matrix(f2_matrix_to_json(a)) == a);
  CHECK(delta_matroid_of_matrix(a) == dm(2, {{}, {1, 2}}));
  CHECK_THROWS_AS(parse_f2_matrix(json::parse(R"({"size":2,"rows":["01","00"]})")), SchemaError);
  CHECK_THROWS_AS(parse_f2_matrix(json::parse(R"({"size":2,"rows":["012","100"]})")), SchemaError);
  CHECK_THROWS_AS(parse_f2_matrix(json::parse(R"({"size":1,"rows":["0","1"]})")), SchemaError);
}

TEST_CASE("framed graph schema") {
  json j = json::parse(
      R"({"vertices":["u","v"],"edges":[["u","v"]],"framing":{"v":1}})");
  std::vector<std::string> names;
  FramedGraph g = parse_framed_graph(j, &names);
  CHECK(names == std::vector<std::string>{"u", "v"});
  CHECK(g.has_edge(0, 1));
  CHECK(!g.framing(0));
  CHECK(g.framing(1));
  std::vector<std::string> names2;
  FramedGraph round = parse_framed_graph(framed_graph_to_json(g, names), &names2);
  CHECK(round == g);
  CHECK(names2 == names);
  // Framing omitted means all zero.
  FramedGraph simple = parse_framed_graph(json::parse(R"({"vertices":["u"],"edges":[]})"));
  CHECK(simple.is_simple());
  CHECK_THROWS_AS(parse_framed_graph(json::parse(R"({"vertices":["u"],"edges":[["u","u"]]})")),
                  SchemaError);
  CHECK_THROWS_AS(
      parse_framed_graph(json::parse(R"({"vertices":["u","v"],"edges":[],"framing":{"w":1}})")),
      SchemaError);
  CHECK_THROWS_AS(
      parse_framed_graph(json::parse(R"({"vertices":["u","v"],"edges":[],"framing":{"u":2}})")),
      SchemaError);
}

TEST_CASE("ribbon schema") {
  json j = json::parse(
      R"({"vertices":[["h1","h2"]],"edges":[{"ends":["h1","h2"],"twisted":true}]})");
  RibbonGraph g = parse_ribbon(j);
  CHECK(g.vertex_count() == 1);
  CHECK(g.edges()[0].twisted);
  RibbonGraph round = parse_ribbon(ribbon_to_json(g));
  CHECK(round.rotations() == g.rotations());
  CHECK(round.edges()[0].twisted == g.edges()[0].twisted);
  // twisted defaults to false.
  RibbonGraph plain = parse_ribbon(
      json::parse(R"({"vertices":[["h1"],["h2"]],"edges":[{"ends":["h1","h2"]}]})"));
  CHECK(!plain.edges()[0].twisted);
  CHECK_THROWS_AS(
      parse_ribbon(json::parse(R"({"vertices":[["h1","h2"]],"edges":[{"ends":["h1"]}]})")),
      SchemaError);
  CHECK_THROWS_AS(
      parse_ribbon(json::parse(
          R"({"vertices":[["h1","h2"],["h3","h4"]],"edges":[{"ends":["h1","h2"]},{"ends":["h3","h4"]}]})")),
      SchemaError);  // disconnected
}

TEST_CASE("input sniffing and explicit tags") {
  CHECK(parse_input(json::parse(R"({"ground":["a"],"feasible":[[]]})")).kind ==
        InputKind::set_system);
  CHECK(parse_input(json::parse(R"({"size":1,"rows":["1"]})")).kind == InputKind::f2_matrix);
  CHECK(parse_input(json::parse(R"({"vertices":["u"],"edges":[]})")).kind ==
        InputKind::framed_graph);
  CHECK(parse_input(json::parse(
                        R"({"vertices":[["h1","h2"]],"edges":[{"ends":["h1","h2"]}]})"))
            .kind == InputKind::ribbon);
  auto tagged = parse_input(json::parse(
      R"({"schema":"f2-matrix/v1","size":1,"rows":["0"]})"));
  CHECK(tagged.kind == InputKind::f2_matrix);
  CHECK_THROWS_AS(parse_input(json::parse(R"({"schema":"nope/v9"})")), SchemaError);
  CHECK_THROWS_AS(parse_input(json::parse(R"({"what":1})")), SchemaError);
  CHECK_THROWS_AS(parse_input(json::parse(R"([1,2,3])")), SchemaError);
}

TEST_CASE("input objects carry element labels into the delta-matroid") {
  auto in = parse_input(json::parse(R"({"vertices":["u","v"],"edges":[["u","v"]]})"));
  CHECK(in.element_labels == std::vector<std::string>{"u", "v"});
  CHECK(to_delta_matroid(in) == dm(2, {{}, {1, 2}}));
  auto rib = parse_input(json::parse(
      R"({"vertices":[["h1","h2"]],"edges":[{"ends":["h1","h2"],"twisted":true}]})"));
  CHECK(rib.element_labels == std::vector<std::string>{"1"});
  CHECK(to_delta_matroid(rib) == dm(1, {{}, {1}}));
}

TEST_CASE("hopf element schema round-trips") {
  HopfElement h = HopfElement::basis(dm(2, {{1}, {2}})) * (XPoly::x_power(2) - XPoly(1)) +
                  HopfElement::basis(dm(2, {{}, {1, 2}})) * XPoly(Rational(3, 2));
  json j = hopf_element_to_json(h);
  CHECK(parse_hopf_element(j) == h);
  CHECK_THROWS_AS(parse_hopf_element(json::parse(R"([{"coeff":"x"}])")), SchemaError);
  CHECK_THROWS_AS(
      parse_hopf_element(json::parse(
          R"([{"coeff":"??","term":{"ground":["a"],"feasible":[[]]}}])")),
      SchemaError);
}

TEST_CASE("symfunc schema round-trips") {
  SymFunc s = SymFunc::power_sum(Partition({2, 1}), XPoly::x_power(1)) +
              SymFunc::power_sum(Partition({1, 1, 1}), XPoly(Rational(-1, 3)));
  json j = symfunc_to_json(s);
  CHECK(parse_symfunc(j) == s);
  CHECK(j["terms"][0]["partition"] == json::array({1, 1, 1}));  // deterministic order
}

TEST_CASE("random set systems survive serialization round-trips") {
  std::uniform_int_distribution<int> size_dist(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    int n = size_dist(dctest::rng());
    std::vector<Mask> fam;
    std::uniform_int_distribution<std::uint64_t> bits;
    for (int f = 0; f < (1 << n); ++f)
      if (bits(dctest::rng()) & 1) fam.push_back(static_cast<Mask>(f));
    if (fam.empty()) fam.push_back(0);
    SetSystem s(n, fam);
    CHECK(parse_set_system(set_system_to_json(s)) == s);
  }
}
