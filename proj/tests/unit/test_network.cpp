#include "doctest.h"
#include "support.hpp"

using namespace dirichlet;
using namespace fixtures;

namespace {

std::vector<std::pair<std::string, std::string>> wheatstone_edges() {
  return {{"j1", "i1"}, {"j1", "i2"}, {"j2", "i1"}, {"j2", "i2"}, {"i1", "i2"}};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalError;
}

}  // namespace

TEST_SUITE("network_model") {

TEST_CASE("graph canonical indexing") {
  Graph g({"z", "b", "a"}, {{"z", "a"}, {"b", "a"}});
  CHECK(g.labels() == std::vector<std::string>{"a", "b", "z"});
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge_key(1) == "a-z");
  CHECK(g.edge_index_by_key("a-z") == 1);
  CHECK_FALSE(g.edge_index_by_key("z-a").has_value());
  CHECK(code_of([] { Graph({"a"}, {{"a", "a"}}); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { Graph({"a", "b"}, {{"a", "c"}}); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("validate_network on the Wheatstone bridge") {
  NetworkInstance w = validate_network(make_graph({"j1", "j2", "i1", "i2"}, wheatstone_edges()), {"j1", "j2"},
                                       {q(1), q(-1)});
  CHECK(w.m() == 2);
  CHECK(w.n() == 2);
  CHECK(w == W());
  CHECK(w.graph().label(w.interior()[0]) == "i1");
}

TEST_CASE("validate_network errors") {
  Graph p4 = P4().graph();
  CHECK(code_of([&] { validate_network(p4, {"j1", "j2"}, {q(0), q(0)}); }) ==
        ErrorCode::BoundaryValuesNotInjective);
  auto edges = wheatstone_edges();
  edges.emplace_back("j1", "j2");
  Graph wj = make_graph({"j1", "j2", "i1", "i2"}, edges);
  CHECK(code_of([&] { validate_network(wj, {"j1", "j2"}, {q(1), q(-1)}); }) == ErrorCode::BoundaryNotIndependent);
  CHECK(code_of([&] { validate_network(p4, {"j1"}, {q(0)}); }) == ErrorCode::TooFewBoundaryNodes);
  CHECK(code_of([&] { validate_network(p4, {"j1", "zz"}, {q(0), q(1)}); }) == ErrorCode::UnknownVertex);
  Graph split = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK(code_of([&] { validate_network(split, {"a", "c"}, {q(0), q(1)}); }) == ErrorCode::Disconnected);
}

TEST_CASE("normalize_network") {
  auto edges = wheatstone_edges();
  edges.emplace_back("j1", "j2");
  Graph wj = make_graph({"j1", "j2", "i1", "i2"}, edges);
  CHECK(normalize_network(wj, {"j1", "j2"}, {q(1), q(-1)}) == W());
  CHECK(normalize_network(W().graph(), {"j1", "j2"}, {q(1), q(-1)}) == W());

  Graph triangle = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(code_of([&] { normalize_network(triangle, {"a", "b"}, {q(1), q(1)}); }) ==
        ErrorCode::TooFewBoundaryNodes);

  // Identification happens first: a and c merge, then the edge to b (value 2) survives.
  Graph p = make_graph({"a", "b", "c", "x"}, {{"a", "x"}, {"c", "x"}, {"x", "b"}});
  NetworkInstance merged = normalize_network(p, {"a", "b", "c"}, {q(0), q(2), q(0)});
  CHECK(merged.m() == 2);
  CHECK(merged.graph().index_of("a+c").has_value());
  CHECK(merged.graph().edge_count() == 2);

  Graph bridge = make_graph({"a", "b", "x", "y"}, {{"a", "b"}, {"a", "x"}, {"b", "y"}});
  CHECK(code_of([&] { normalize_network(bridge, {"a", "b"}, {q(0), q(1)}); }) ==
        ErrorCode::DisconnectedAfterNormalization);
}

TEST_CASE("closure_graph") {
  CHECK(closure_graph(W()).edge_count() == 6);
  Graph c4 = closure_graph(P4());
  CHECK(c4.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 3; ++n) {
      int d = m + n;
      CHECK(closure_graph(J(m, n)).edge_count() == d * (d - 1) / 2);
    }
  }
}

TEST_CASE("identified_graph") {
  Multigraph w = identified_graph(W());
  REQUIRE(w.vertex_count() == 3);
  CHECK(w.labels[0] == "j1+j2");
  CHECK(w.multiplicity(0, 1) == 2);
  CHECK(w.multiplicity(0, 2) == 2);
  CHECK(w.multiplicity(1, 2) == 1);

  Multigraph p = identified_graph(P4());
  CHECK(p.vertex_count() == 3);
  CHECK(p.multiplicity(0, 1) == 1);
  CHECK(p.multiplicity(0, 2) == 1);
  CHECK(p.multiplicity(1, 2) == 1);

  Multigraph j = identified_graph(J(2, 1));
  CHECK(j.vertex_count() == 2);
  CHECK(j.multiplicity(0, 1) == 2);
}

TEST_CASE("every_interior_on_boundary_path") {
  CHECK(every_interior_on_boundary_path(W()));
  CHECK(every_interior_on_boundary_path(P4()));
  auto edges = wheatstone_edges();
  edges.emplace_back("p", "i1");
  NetworkInstance pendant =
      validate_network(make_graph({"j1", "j2", "i1", "i2", "p"}, edges), {"j1", "j2"}, {q(1), q(-1)});
  CHECK_FALSE(every_interior_on_boundary_path(pendant));
}

TEST_CASE("psi graphical conversions") {
  PsiAssignment w = to_psi_graphical(W());
  CHECK(w.graph.edge_count() == 1);
  CHECK(w.psi[0] == std::vector<Rational>{q(-1), q(1)});
  CHECK(w.psi[1] == std::vector<Rational>{q(-1), q(1)});

  PsiAssignment p = to_psi_graphical(P4());
  CHECK(p.psi[0] == std::vector<Rational>{q(0)});
  CHECK(p.psi[1] == std::vector<Rational>{q(1)});

  PsiAssignment j = to_psi_graphical(J(2, 1));
  CHECK(j.graph.vertex_count() == 1);
  CHECK(j.graph.edge_count() == 0);
  CHECK(j.psi[0] == std::vector<Rational>{q(0), q(1)});

  NetworkInstance back = from_psi_graphical(w);
  CHECK(back.m() == 2);
  CHECK(back.n() == 2);
  CHECK(back.graph().edge_count() == 5);
  CHECK(to_psi_graphical(back).psi == w.psi);

  NetworkInstance single = from_psi_graphical({make_graph({"x"}, {}), {{q(0), q(1)}}});
  CHECK(single.graph().edge_count() == 2);
  CHECK(code_of([] { from_psi_graphical({make_graph({"x"}, {}), {{}}}); }) == ErrorCode::TooFewBoundaryNodes);
  CHECK(code_of([] {
          from_psi_graphical({make_graph({"x", "y"}, {}), {{q(0), q(1)}, {}}});
        }) == ErrorCode::DisconnectedAugmentation);
}

TEST_CASE("network invariants over the small corpus") {
  for (const auto& entry : small_corpus()) {
    const NetworkInstance& net = entry.net;
    Graph closure = closure_graph(net);
    CHECK(closure.connected());
    for (const Edge& e : net.graph().edges()) CHECK(closure.adjacent(e.a, e.b));
    for (int a : net.boundary()) {
      for (int b : net.boundary()) {
        if (a != b) CHECK(closure.adjacent(a, b));
      }
    }
    Multigraph bar = identified_graph(net);
    CHECK(bar.vertex_count() == net.graph().vertex_count() - net.m() + 1);
    CHECK(bar.edge_count() == net.graph().edge_count());
    CHECK(every_interior_on_boundary_path(net) == is_biconnected(closure));

    PsiAssignment pa = to_psi_graphical(net);
    bool has_two_values = false;
    std::vector<Rational> all;
    for (const auto& s : pa.psi) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    has_two_values = std::unique(all.begin(), all.end()) - all.begin() >= 2;
    if (!has_two_values) continue;
    NetworkInstance back = from_psi_graphical(pa);
    PsiAssignment again = to_psi_graphical(back);
    CHECK(again.graph.labels() == pa.graph.labels());
    CHECK(again.graph.edges() == pa.graph.edges());
    CHECK(again.psi == pa.psi);
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-4") == q(-4));
  CHECK(parse_rational("0.25") == q(1, 4));
  CHECK(format_rational(q(6, 4)) == "3/2");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([] { parse_rational("abc"); }) == ErrorCode::MalformedInput);
}

TEST_CASE("limits from state budget") {
  Limits l = Limits::from_states(1024);
  CHECK(l.max_orientation_edges == 10);
  CHECK(l.max_tree_edges == 10);
  CHECK(l.max_partition_vertices == 7);  // Bell(7) = 877, Bell(8) = 4140
}

}  // TEST_SUITE
