#include "doctest.h"
#include "support.hpp"

using namespace dirichlet;
using namespace fixtures;

TEST_SUITE("polynomials") {

TEST_CASE("IntPolynomial basics") {
  IntPolynomial p = poly({6, -5, 1});
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "t^2 - 5t + 6");
  CHECK(poly({0}).is_zero());
  CHECK(poly({0}).degree() == -1);
  CHECK(poly({0}).to_string() == "0");
  CHECK(poly({-1, 0, 0, -2}).to_string() == "-2t^3 - 1");
  CHECK(p(BigInt(2)) == 0);
  CHECK(p(q(1, 2)) == q(15, 4));
  CHECK(p.derivative() == poly({-5, 2}));
  CHECK(p * poly({1, 1}) == poly({6, 1, -4, 1}));
  CHECK(p - p == IntPolynomial());
  auto [quot, rem] = poly({6, 1, -4, 1}).divmod(poly({1, 1}));
  CHECK(quot == p);
  CHECK(rem.is_zero());
  auto [q2, r2] = poly({1, 0, 1}).divmod(poly({-1, 1}));
  CHECK(q2 == poly({1, 1}));
  CHECK(r2 == poly({2}));
  CHECK(p.coefficient_strings() == std::vector<std::string>{"6", "-5", "1"});
}

TEST_CASE("falling_factorial") {
  CHECK(falling_factorial(0) == poly({1}));
  CHECK(falling_factorial(2) == poly({0, -1, 1}));
  CHECK(falling_factorial(4) == poly({0, -6, 11, -6, 1}));
}

TEST_CASE("interpolate") {
  std::vector<BigInt> xs{2, 3, 4}, ys{0, 0, 2};
  CHECK(interpolate(xs, ys) == poly({6, -5, 1}));
  CHECK(interpolate({BigInt(0), BigInt(1), BigInt(2)}, {BigInt(0), BigInt(1), BigInt(0)}) == poly({0, 2, -1}));
  CHECK_THROWS_AS(interpolate({BigInt(0), BigInt(1), BigInt(2)}, {BigInt(0), BigInt(1), BigInt(1)}), Error);
}

TEST_CASE("chromatic_polynomial examples") {
  CHECK(chromatic_polynomial(complete_graph(4)) == poly({0, -6, 11, -6, 1}));
  CHECK(chromatic_polynomial(cycle_graph(4)) == poly({0, -3, 6, -4, 1}));
  CHECK(chromatic_polynomial(make_graph({"v"}, {})) == poly({0, 1}));
  CHECK(chromatic_polynomial(make_graph({}, {})) == poly({1}));
  CHECK(chromatic_polynomial(make_graph({"a", "b", "c"}, {{"a", "b"}})) == poly({0, -1, 1}) * poly({0, 1}));
  // Petersen graph: known chromatic polynomial evaluated at 3 gives 120 proper colourings.
  Graph petersen({"0", "1", "2", "3", "4", "5", "6", "7", "8", "9"},
                 {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "0"}, {"0", "5"}, {"1", "6"},
                  {"2", "7"}, {"3", "8"}, {"4", "9"}, {"5", "7"}, {"7", "9"}, {"9", "6"}, {"6", "8"},
                  {"8", "5"}});
  CHECK(chromatic_polynomial(petersen)(BigInt(3)) == 120);
}

TEST_CASE("chromatic polynomial of cycles matches the closed form") {
  for (int d = 3; d <= 9; ++d) {
    IntPolynomial closed = IntPolynomial::linear_root(1);
    IntPolynomial power = IntPolynomial::constant(1);
    for (int k = 0; k < d; ++k) power = power * closed;
    IntPolynomial expected = power + IntPolynomial::constant(d % 2 == 0 ? 1 : -1) * closed;
    CHECK(chromatic_polynomial(cycle_graph(d)) == expected);
  }
}

TEST_CASE("precoloring_polynomial examples") {
  CHECK(precoloring_polynomial(W()) == poly({6, -5, 1}));
  CHECK(precoloring_polynomial(P4()) == poly({3, -3, 1}));
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 3; ++n) {
      IntPolynomial expected = IntPolynomial::constant(1);
      for (int r = 0; r < n; ++r) expected = expected * IntPolynomial::linear_root(m + r);
      CHECK(precoloring_polynomial(J(m, n)) == expected);
    }
  }
}

TEST_CASE("precoloring_count examples") {
  CHECK(precoloring_count(W(), 4) == 2);
  CHECK(precoloring_count(J(2, 1), 5) == 3);
  CHECK(precoloring_count(P4(), 2) == 1);
  CHECK_THROWS_AS(precoloring_count(W(), 1), Error);
  Limits tiny;
  tiny.max_states = 10;
  try {
    precoloring_count(W(), 4, tiny);
    FAIL("expected InstanceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InstanceTooLarge);
  }
}

TEST_CASE("precoloring_interpolated examples") {
  CHECK(precoloring_interpolated(W()) == poly({6, -5, 1}));
  CHECK(precoloring_interpolated(P4()) == poly({3, -3, 1}));
  CHECK(precoloring_interpolated(J(2, 1)) == poly({-2, 1}));
}

TEST_CASE("chamber_counts examples") {
  auto w = chamber_counts(W());
  CHECK(w.total == 12);
  CHECK(w.bounded == 2);
  auto p = chamber_counts(P4());
  CHECK(p.total == 7);
  CHECK(p.bounded == 1);
  auto j = chamber_counts(J(2, 1));
  CHECK(j.total == 3);
  CHECK(j.bounded == 1);
}

TEST_CASE("beta and alpha invariants") {
  CHECK(beta_invariant(complete_graph(4)) == 2);
  CHECK(beta_invariant(cycle_graph(4)) == 1);
  CHECK(beta_invariant(path_graph(5)) == 0);
  CHECK(acyclic_orientation_count(complete_graph(4)) == 24);
  CHECK(acyclic_orientation_count(cycle_graph(4)) == 14);
  CHECK(acyclic_orientation_count(path_graph(2)) == 2);
}

TEST_CASE("is_log_concave") {
  CHECK(is_log_concave(poly({6, -5, 1})));
  CHECK_FALSE(is_log_concave(poly({2, -1, 1})));
  CHECK(is_log_concave(poly({0, 1})));
  CHECK_FALSE(is_log_concave(IntPolynomial()));
  CHECK_FALSE(is_log_concave(poly({1, 0, 1})));  // internal zero
  CHECK(is_log_concave(poly({0, 0, 2, -3, 1})));
}

TEST_CASE("graph edits") {
  Graph k4 = complete_graph(4);
  Graph deleted = delete_edge(k4, 0);
  CHECK(deleted.edge_count() == 5);
  Graph contracted = contract_edge(k4, 0);
  CHECK(contracted.vertex_count() == 3);
  CHECK(contracted.edge_count() == 3);
  CHECK(contracted.labels() == std::vector<std::string>{"a", "c", "d"});
}

TEST_CASE("polynomial properties over the small corpus") {
  for (const auto& entry : small_corpus()) {
    const NetworkInstance& net = entry.net;
    IntPolynomial pcp = precoloring_polynomial(net);
    Graph closure = closure_graph(net);
    CAPTURE(entry.id);
    CHECK(falling_factorial(net.m()) * pcp == chromatic_polynomial(closure));
    CHECK(pcp.degree() == net.n());
    CHECK(pcp.leading() == 1);
    for (int k = 0; k <= net.n(); ++k) {
      BigInt c = pcp.coefficient(k);
      if ((net.n() - k) % 2 == 0) {
        CHECK(c >= 0);
      } else {
        CHECK(c <= 0);
      }
    }
    CHECK(is_log_concave(pcp));
    CHECK(precoloring_interpolated(net) == pcp);
    for (int p : {2, 3, 5, 7, 11}) {
      if (p >= net.m() + 1 && p <= net.m() + 5) CHECK(pcp(BigInt(p)) == precoloring_count(net, p));
    }
    const Graph& g = net.graph();
    int e = static_cast<int>(entry.id.size()) % g.edge_count();
    CHECK(chromatic_polynomial(g) == chromatic_polynomial(delete_edge(g, e)) - chromatic_polynomial(contract_edge(g, e)));
    ChamberCounts counts = chamber_counts(net);
    CHECK(counts.bounded <= counts.total);
  }
}

}  // TEST_SUITE
