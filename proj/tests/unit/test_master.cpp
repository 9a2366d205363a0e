#include <Eigen/Dense>

#include "doctest.h"
#include "support.hpp"

using namespace dirichlet;
using namespace fixtures;

namespace {

MasterFunction unit(const NetworkInstance& net) {
  return MasterFunction{net, std::vector<double>(net.graph().edge_count(), 1.0)};
}

double max_eigenvalue(const Matrix<double>& h) {
  Eigen::MatrixXd m(h.size, h.size);
  for (int i = 0; i < h.size; ++i) {
    for (int j = 0; j < h.size; ++j) m(i, j) = h(i, j);
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().maxCoeff();
}

std::vector<double> random_point(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> dist(-2.5, 2.5);
  std::vector<double> x(n);
  for (auto& v : x) v = dist(rng);
  return x;
}

/// Relative error of the gradient against central differences; nullopt when
/// the point sits too close to a hyperplane for the comparison to be fair.
std::optional<double> gradient_error(const MasterFunction& mf, const std::vector<double>& x) {
  const double h = 1e-6;
  std::vector<double> z = extend_point(mf.net, x);
  for (const Edge& e : mf.net.graph().edges()) {
    if (std::abs(z[e.a] - z[e.b]) < 1e-2) return std::nullopt;
  }
  std::vector<double> g = master_gradient(mf, x);
  double worst = 0;
  for (int i = 0; i < mf.net.n(); ++i) {
    std::vector<double> up = x, down = x;
    up[i] += h;
    down[i] -= h;
    double fd = (master_value(mf, up) - master_value(mf, down)) / (2 * h);
    worst = std::max(worst, std::abs(fd - g[i]) / std::max(1.0, std::abs(g[i])));
  }
  return worst;
}

}  // namespace

TEST_SUITE("master_fn") {

TEST_CASE("master_value examples") {
  CHECK(master_value(unit(W()), {0.0, 0.5}) == doctest::Approx(std::log(3.0 / 8)));
  CHECK(master_value(unit(P4()), {1.0 / 3, 2.0 / 3}) == doctest::Approx(std::log(1.0 / 27)));
  CHECK(master_value(MasterFunction{W(), std::vector<double>(5, 0.0)}, {0.3, 0.1}) == 0.0);
  try {
    master_value(unit(W()), {0.0, 0.0});
    FAIL("expected OnHyperplane");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OnHyperplane);
  }
}

TEST_CASE("master_gradient examples") {
  double s = 1 / std::sqrt(5.0);
  auto g = master_gradient(unit(W()), {s, -s});
  CHECK(std::abs(g[0]) < 1e-12);
  CHECK(std::abs(g[1]) < 1e-12);

  auto wheel = master_gradient(unit(WHEEL7()), {0.0, 0.6, -0.6, -0.6, 0.6});
  for (double v : wheel) CHECK(std::abs(v) < 1e-12);

  auto off = master_gradient(unit(W()), {0.0, -0.5});
  CHECK(std::abs(off[0]) + std::abs(off[1]) > 0.1);
  CHECK(*gradient_error(unit(W()), {0.0, -0.5}) < 1e-5);
}

TEST_CASE("master_hessian examples") {
  Matrix<double> p = master_hessian(unit(P4()), {1.0 / 3, 2.0 / 3});
  CHECK(p(0, 0) == doctest::Approx(-18));
  CHECK(p(0, 1) == doctest::Approx(9));
  CHECK(p(1, 0) == doctest::Approx(9));
  CHECK(p(1, 1) == doctest::Approx(-18));

  NetworkInstance w = W();
  double s = 1 / std::sqrt(5.0);
  Matrix<double> h = master_hessian(unit(w), {s, -s});
  std::vector<double> gamma = conductances_from_point(w, std::vector<double>(5, 1.0), extend_point(w, {s, -s}));
  Matrix<double> k = laplacian(w, gamma, true);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(h(i, j) == doctest::Approx(-k(i, j)));
  }
  CHECK(max_eigenvalue(h) < 0);
  CHECK(master_hessian(MasterFunction{w, std::vector<double>(5, 0.0)}, {0.2, 0.1}) == Matrix<double>(2));
}

TEST_CASE("find_critical_points on W") {
  auto sols = find_critical_points(unit(W()));
  REQUIRE(sols.size() == 2);
  double s = 1 / std::sqrt(5.0);
  std::vector<std::vector<double>> pts{sols[0].point, sols[1].point};
  std::sort(pts.begin(), pts.end());
  CHECK(std::abs(pts[0][0] + s) < 1e-9);
  CHECK(std::abs(pts[0][1] - s) < 1e-9);
  CHECK(std::abs(pts[1][0] - s) < 1e-9);
  CHECK(std::abs(pts[1][1] + s) < 1e-9);
  for (const auto& sol : sols) {
    CHECK(sol.gradient_norm <= 2e-10);
    CHECK(orientation_of_point(W(), sol.point) == sol.orientation);
  }
  CHECK(verify_sdr(sols, W()));
}

TEST_CASE("find_critical_points on P4 and WHEEL7") {
  auto p = find_critical_points(unit(P4()));
  REQUIRE(p.size() == 1);
  CHECK(p[0].point[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(p[0].point[1] == doctest::Approx(2.0 / 3).epsilon(1e-12));

  auto wheel = find_critical_points(unit(WHEEL7()));
  REQUIRE(wheel.size() == 9);
  int rational = 0;
  for (const auto& sol : wheel) {
    bool all_rational = true;
    for (double v : sol.point) {
      bool hit = false;
      for (int den = 1; den <= 100 && !hit; ++den) hit = std::abs(v * den - std::round(v * den)) < 1e-9 * den;
      all_rational = all_rational && hit;
    }
    if (all_rational) {
      ++rational;
      std::vector<double> expected{0.0, 0.6, -0.6, -0.6, 0.6};
      for (int i = 0; i < 5; ++i) CHECK(std::abs(sol.point[i] - expected[i]) < 1e-9);
    }
  }
  CHECK(rational == 1);
  CHECK(verify_sdr(wheel, WHEEL7()));
}

TEST_CASE("rational critical point on the 15-wheel") {
  NetworkInstance wheel = wheel_network(15);
  const Graph& g = wheel.graph();
  auto balanced = [&](const std::vector<Rational>& outer) {
    std::vector<Rational> x(g.vertex_count(), Rational(0));
    for (int r = 0; r < 14; ++r) x[*g.index_of((r < 10 ? "o0" : "o") + std::to_string(r))] = outer[r];
    for (int v : wheel.interior()) {
      Rational sum = 0;
      for (int w : g.neighbors(v)) {
        if (x[v] == x[w]) return false;
        sum += 1 / Rational(x[v] - x[w]);
      }
      if (sum != 0) return false;
    }
    return true;
  };
  // o00 = 1 and o07 = -1 with the hub at 0
  std::vector<Rational> drawn{q(1),       q(11, 13),  q(77, 117), q(77, 195),  q(-77, 195), q(-77, 117), q(-11, 13),
                              q(-1),      q(-11, 13), q(-77, 117), q(-77, 195), q(77, 195),  q(77, 117),  q(11, 13)};
  std::vector<Rational> product_rule{q(1),     q(7, 9),  q(7, 15),  q(-7, 15), q(7, 15),  q(-7, 15), q(-7, 9),
                                     q(-1),    q(-7, 9), q(-7, 15), q(7, 15),  q(-7, 15), q(7, 15),  q(7, 9)};
  CHECK(balanced(drawn));
  CHECK_FALSE(balanced(product_rule));
}

TEST_CASE("find_critical_points errors") {
  MasterFunction bad{W(), {1.0, 1.0, 0.0, 1.0, 1.0}};
  try {
    find_critical_points(bad);
    FAIL("expected NotPositiveWeights");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveWeights);
  }
  SolverOptions strict;
  strict.max_iter = 0;
  try {
    find_critical_points(unit(W()), strict);
    FAIL("expected DidNotConverge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DidNotConverge);
  }
}

TEST_CASE("eta_harmonic_functions examples") {
  NetworkInstance w = W();
  auto sols = eta_harmonic_functions(unit(w));
  REQUIRE(sols.size() == 2);
  double s = 1 / std::sqrt(5.0);
  int ei = *w.graph().edge_index_by_key("i1-i2");
  int ej = *w.graph().edge_index_by_key("i1-j1");
  for (const auto& sol : sols) {
    CHECK(sol.conductances[ei] == doctest::Approx(1.25));
    if (sol.point[0] > 0) CHECK(sol.conductances[ej] == doctest::Approx(1 / ((1 - s) * (1 - s))));
  }

  NetworkInstance p4 = P4();
  auto p = eta_harmonic_functions(MasterFunction{p4, std::vector<double>(3, 1.0 / 9)});
  REQUIRE(p.size() == 1);
  for (double g : p[0].conductances) CHECK(g == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("verify_sdr rejects duplicates and omissions") {
  auto sols = find_critical_points(unit(W()));
  auto dup = sols;
  dup[1] = dup[0];
  CHECK_FALSE(verify_sdr(dup, W()));
  auto drop = sols;
  drop.pop_back();
  CHECK_FALSE(verify_sdr(drop, W()));
}

TEST_CASE("calculus checks over the small corpus") {
  std::mt19937_64 rng(5);
  for (const auto& entry : small_corpus()) {
    const NetworkInstance& net = entry.net;
    CAPTURE(entry.id);
    MasterFunction mf{net, to_double(random_rationals(rng, net.graph().edge_count(), true))};
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 20; ++trial) {
      std::vector<double> x = random_point(rng, net.n());
      auto err = gradient_error(mf, x);
      if (!err) continue;
      ++tested;
      CHECK(*err <= 1e-5);
      Matrix<double> h = master_hessian(mf, x);
      std::vector<double> gamma = conductances_from_point(net, mf.eta, extend_point(net, x));
      Matrix<double> k = laplacian(net, gamma, true);
      for (int i = 0; i < net.n(); ++i) {
        for (int j = 0; j < net.n(); ++j) {
          CHECK(std::abs(h(i, j) + k(i, j)) <= 1e-12 * std::max(1.0, std::abs(k(i, j))));
        }
      }
    }
    auto sols = eta_harmonic_functions(mf);
    CHECK(BigInt(sols.size()) == chamber_counts(net).bounded);
    CHECK(verify_sdr(sols, net));
    for (const auto& sol : sols) {
      CHECK(max_eigenvalue(master_hessian(mf, sol.point)) < 0);
      for (double g : sol.conductances) CHECK(g > 0);
    }
  }
}

}  // TEST_SUITE
