#include "dirichlet/master.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>

namespace dirichlet {
namespace {

/// Edge seen from interior coordinates: slot -1 means a boundary endpoint
/// with the stored fixed value.
struct Factor {
  int a, b;
  double ua, ub;
};

std::vector<Factor> factors(const NetworkInstance& net) {
  std::vector<Factor> out;
  const Graph& g = net.graph();
  for (const Edge& e : g.edges()) {
    Factor f{net.interior_slot(e.a), net.interior_slot(e.b), 0.0, 0.0};
    if (f.a < 0) f.ua = net.value(e.a).get_d();
    if (f.b < 0) f.ub = net.value(e.b).get_d();
    out.push_back(f);
  }
  return out;
}

double difference(const Factor& f, const std::vector<double>& x) {
  return (f.a >= 0 ? x[f.a] : f.ua) - (f.b >= 0 ? x[f.b] : f.ub);
}

void check_inputs(const MasterFunction& mf, const std::vector<double>& x) {
  if (static_cast<int>(mf.eta.size()) != mf.net.graph().edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "energies do not cover the edge set");
  }
  if (static_cast<int>(x.size()) != mf.net.n()) {
    throw Error(ErrorCode::InvalidArgument, "point has the wrong number of interior coordinates");
  }
}

std::vector<double> differences(const MasterFunction& mf, const std::vector<Factor>& fs,
                                const std::vector<double>& x) {
  std::vector<double> out;
  out.reserve(fs.size());
  for (std::size_t e = 0; e < fs.size(); ++e) {
    double d = difference(fs[e], x);
    if (d == 0.0) {
      throw Error(ErrorCode::OnHyperplane,
                  "point lies on the hyperplane of edge " + mf.net.graph().edge_key(static_cast<int>(e)));
    }
    out.push_back(d);
  }
  return out;
}

double value_of(const MasterFunction& mf, const std::vector<double>& diffs) {
  double sum = 0;
  for (std::size_t e = 0; e < diffs.size(); ++e) sum += mf.eta[e] * std::log(std::abs(diffs[e]));
  return sum;
}

std::string orientation_text(const Graph& g, const Orientation& o) {
  std::string out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!out.empty()) out += ",";
    out += g.label(o.tail(g, e)) + ">" + g.label(o.head(g, e));
  }
  return out;
}

CriticalPointSolution ascend(const MasterFunction& mf, const std::vector<Factor>& fs, const Orientation& o,
                             const SolverOptions& options) {
  const int n = mf.net.n();
  const Graph& g = mf.net.graph();
  const double threshold = options.tol * (1.0 + *std::max_element(mf.eta.begin(), mf.eta.end()));

  std::vector<double> sign(fs.size());
  for (int e = 0; e < g.edge_count(); ++e) sign[e] = o.forward[e] ? 1.0 : -1.0;

  CriticalPointSolution sol;
  sol.orientation = o;
  for (const auto& c : chamber_point(mf.net, o).coordinates) sol.point.push_back(c.get_d());

  std::vector<double> x = sol.point;
  double phi = master_value(mf, x);
  for (int iter = 0;; ++iter) {
    std::vector<double> grad = master_gradient(mf, x);
    double norm = 0;
    for (double v : grad) norm = std::max(norm, std::abs(v));
    sol.gradient_norm = norm;
    sol.iterations = iter;
    if (norm <= threshold) break;
    if (iter >= options.max_iter) {
      throw Error(ErrorCode::DidNotConverge, "Newton ascent did not converge in " + std::to_string(iter) +
                                                 " iterations for orientation " + orientation_text(g, o));
    }

    Matrix<double> h = master_hessian(mf, x);
    Eigen::MatrixXd k(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) k(i, j) = -h(i, j);
    }
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(grad.data(), n);
    Eigen::LLT<Eigen::MatrixXd> llt(k);
    Eigen::VectorXd step = llt.info() == Eigen::Success ? Eigen::VectorXd(llt.solve(rhs)) : rhs;

    bool moved = false;
    double alpha = 1.0;
    for (int halving = 0; halving < 60 && !moved; ++halving, alpha *= 0.5) {
      std::vector<double> trial(n);
      for (int i = 0; i < n; ++i) trial[i] = x[i] + alpha * step[i];
      bool inside = true;
      for (std::size_t e = 0; e < fs.size() && inside; ++e) {
        if (difference(fs[e], trial) * sign[e] <= 0.0) inside = false;
      }
      if (!inside) continue;
      double next = master_value(mf, trial);
      if (next >= phi - 1e-13 * (1.0 + std::abs(phi))) {
        x = std::move(trial);
        phi = next;
        moved = true;
      }
    }
    if (!moved) {
      throw Error(ErrorCode::DidNotConverge, "line search stalled after " + std::to_string(iter) +
                                                 " iterations for orientation " + orientation_text(g, o));
    }
  }
  sol.point = x;
  std::vector<double> z = extend_point(mf.net, x);
  sol.conductances = conductances_from_point(mf.net, mf.eta, z);
  return sol;
}

}  // namespace

double master_value(const MasterFunction& mf, const std::vector<double>& x) {
  check_inputs(mf, x);
  return value_of(mf, differences(mf, factors(mf.net), x));
}

std::vector<double> master_gradient(const MasterFunction& mf, const std::vector<double>& x) {
  check_inputs(mf, x);
  auto fs = factors(mf.net);
  auto diffs = differences(mf, fs, x);
  std::vector<double> grad(mf.net.n(), 0.0);
  for (std::size_t e = 0; e < fs.size(); ++e) {
    double t = mf.eta[e] / diffs[e];
    if (fs[e].a >= 0) grad[fs[e].a] += t;
    if (fs[e].b >= 0) grad[fs[e].b] -= t;
  }
  return grad;
}

Matrix<double> master_hessian(const MasterFunction& mf, const std::vector<double>& x) {
  check_inputs(mf, x);
  auto fs = factors(mf.net);
  auto diffs = differences(mf, fs, x);
  Matrix<double> h(mf.net.n());
  for (std::size_t e = 0; e < fs.size(); ++e) {
    // d^2/dx_p dx_q of eta ln|x_a - x_b| is -eta (df/dx_p)(df/dx_q) / f^2.
    double t = mf.eta[e] / (diffs[e] * diffs[e]);
    int a = fs[e].a, b = fs[e].b;
    if (a >= 0) h(a, a) -= t;
    if (b >= 0) h(b, b) -= t;
    if (a >= 0 && b >= 0) {
      h(a, b) += t;
      h(b, a) += t;
    }
  }
  return h;
}

std::vector<CriticalPointSolution> find_critical_points(const MasterFunction& mf, const SolverOptions& options,
                                                        const Limits& limits) {
  if (static_cast<int>(mf.eta.size()) != mf.net.graph().edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "energies do not cover the edge set");
  }
  for (double v : mf.eta) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::NotPositiveWeights, "energies must be strictly positive");
    }
  }
  auto fs = factors(mf.net);
  std::vector<CriticalPointSolution> out;
  for (const Orientation& o : enumerate_class(mf.net, OrientationMode::Compatible, limits)) {
    out.push_back(ascend(mf, fs, o, options));
  }
  return out;
}

std::vector<CriticalPointSolution> eta_harmonic_functions(const MasterFunction& mf, const SolverOptions& options,
                                                          const Limits& limits) {
  auto solutions = find_critical_points(mf, options, limits);
  const double eta_scale = 1.0 + *std::max_element(mf.eta.begin(), mf.eta.end());
  for (const auto& sol : solutions) {
    for (double c : sol.conductances) {
      if (!(c > 0.0)) throw Error(ErrorCode::RoundtripFailure, "recovered conductance is not positive");
    }
    std::vector<double> h = harmonic_solve(mf.net, sol.conductances);
    for (int s = 0; s < mf.net.n(); ++s) {
      if (std::abs(h[mf.net.interior()[s]] - sol.point[s]) > 1e-8) {
        throw Error(ErrorCode::RoundtripFailure, "harmonic solve does not reproduce the critical point");
      }
    }
    std::vector<double> eta = energy_map(mf.net, sol.conductances);
    for (std::size_t e = 0; e < eta.size(); ++e) {
      if (std::abs(eta[e] - mf.eta[e]) > 1e-8 * eta_scale) {
        throw Error(ErrorCode::RoundtripFailure, "energy map does not reproduce the energies");
      }
    }
  }
  return solutions;
}

bool verify_sdr(const std::vector<CriticalPointSolution>& solutions, const NetworkInstance& net,
                const Limits& limits) {
  std::set<std::vector<bool>> seen;
  for (const auto& sol : solutions) {
    Orientation o;
    try {
      o = orientation_of_point(net, sol.point);
    } catch (const Error&) {
      return false;
    }
    if (classify(net, o) != OrientationClass::Compatible) return false;
    if (!seen.insert(o.forward).second) return false;
  }
  auto compatible = enumerate_class(net, OrientationMode::Compatible, limits);
  return seen.size() == compatible.size();
}

}  // namespace dirichlet
