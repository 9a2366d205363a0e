#pragma once

#include <vector>

#include "dirichlet/harmonic.hpp"
#include "dirichlet/network.hpp"
#include "dirichlet/orientations.hpp"

namespace dirichlet {

/// Phi(x) = sum_e eta_e ln|f_e(x)| with f_e = x_a - x_b and boundary
/// coordinates fixed to u. Points are interior coordinate vectors.
struct MasterFunction {
  NetworkInstance net;
  std::vector<double> eta;  // canonical edge order
};

/// Throws OnHyperplane when some f_e vanishes.
double master_value(const MasterFunction& mf, const std::vector<double>& x);
/// d Phi / d x_i = sum_{j ~ i} eta_ij / (x_i - x_j).
std::vector<double> master_gradient(const MasterFunction& mf, const std::vector<double>& x);
/// Second derivatives, assembled directly; equals -K(gamma(x)) with
/// gamma_ij = eta_ij / (x_i - x_j)^2.
Matrix<double> master_hessian(const MasterFunction& mf, const std::vector<double>& x);

struct SolverOptions {
  double tol = 1e-10;  // on sup |grad|, scaled by 1 + max eta
  int max_iter = 200;
};

struct CriticalPointSolution {
  std::vector<double> point;         // interior coordinates
  Orientation orientation;           // compatible orientation of its chamber
  double gradient_norm = 0;          // sup norm
  std::vector<double> conductances;  // eta / (z_i - z_j)^2 per edge
  int iterations = 0;
};

/// One critical point per bounded chamber: damped Newton ascent seeded at
/// chamber_point, with step halving that keeps every edge sign and does not
/// decrease Phi. Sorted by orientation. Throws NotPositiveWeights and
/// DidNotConverge.
std::vector<CriticalPointSolution> find_critical_points(const MasterFunction& mf,
                                                        const SolverOptions& options = {},
                                                        const Limits& limits = {});

/// find_critical_points plus, for each solution, the checks that the
/// recovered conductances are positive and that harmonic_solve and
/// energy_map at them reproduce the point and eta within 1e-8.
/// Throws RoundtripFailure.
std::vector<CriticalPointSolution> eta_harmonic_functions(const MasterFunction& mf,
                                                          const SolverOptions& options = {},
                                                          const Limits& limits = {});

/// solution -> orientation_of_point is a bijection onto the compatible orientations.
bool verify_sdr(const std::vector<CriticalPointSolution>& solutions, const NetworkInstance& net,
                const Limits& limits = {});

}  // namespace dirichlet
