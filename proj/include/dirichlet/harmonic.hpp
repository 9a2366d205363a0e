#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "dirichlet/common.hpp"
#include "dirichlet/network.hpp"

namespace dirichlet {

/// One weight per edge in canonical edge order, exact or floating point.
/// The two kinds never mix inside one computation.
using EdgeWeights = std::variant<std::vector<Rational>, std::vector<double>>;

inline bool is_exact(const EdgeWeights& w) { return std::holds_alternative<std::vector<Rational>>(w); }
std::vector<double> to_double(const EdgeWeights& w);

/// Dense row-major square matrix.
template <typename T>
struct Matrix {
  int size = 0;
  std::vector<T> data;

  Matrix() = default;
  explicit Matrix(int n) : size(n), data(static_cast<std::size_t>(n) * n, T(0)) {}

  T& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * size + j]; }
  const T& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * size + j]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

// Exact linear algebra on rational matrices. Rows are scaled to integers and
// eliminated fraction-free (Bareiss) over arbitrary-precision integers.
Rational determinant(const Matrix<Rational>& a);
int rank(const std::vector<std::vector<Rational>>& rows);
/// Throws SingularSystem.
std::vector<Rational> solve(const Matrix<Rational>& a, const std::vector<Rational>& b);
Matrix<Rational> inverse(const Matrix<Rational>& a);

// Floating point counterparts (partial-pivot LU).
double determinant(const Matrix<double>& a);
std::vector<double> solve(const Matrix<double>& a, const std::vector<double>& b);

/// Full d x d weighted Laplacian, or the n x n block K on interior vertices.
template <typename T>
Matrix<T> laplacian(const NetworkInstance& net, const std::vector<T>& gamma, bool reduced);

/// det K != 0; for floats |det K| > 1e-12 (max absolute row sum)^n.
template <typename T>
bool is_generic(const NetworkInstance& net, const std::vector<T>& gamma);

/// Values on every vertex: u on the boundary and flow balance
/// sum_j gamma_ij (x_i - x_j) = 0 at every interior vertex. Throws SingularSystem.
template <typename T>
std::vector<T> harmonic_solve(const NetworkInstance& net, const std::vector<T>& gamma);

/// eta_ij = gamma_ij (h_i - h_j)^2 with h = harmonic_solve(net, gamma).
template <typename T>
std::vector<T> energy_map(const NetworkInstance& net, const std::vector<T>& gamma);

/// gamma_ij = eta_ij / (z_i - z_j)^2 for z given on every vertex. Throws OnHyperplane.
template <typename T>
std::vector<T> conductances_from_point(const NetworkInstance& net, const std::vector<T>& eta,
                                       const std::vector<T>& z);

/// Entry (r, s) of K^-1 for the path j1 - i1 - ... - i_n - j2 whose k = n + 1
/// edges carry conductances gamma_1..gamma_k in path order (1-based r, s):
///   e_(r-1)(g_1..g_r) e_(s-r)(g_(r+1)..g_s) e_(n-s)(g_(s+1)..g_k) / e_n(g_1..g_k)
/// for r <= s (symmetric otherwise). Throws SingularSystem when e_n = 0.
Rational path_inverse_entry(const std::vector<Rational>& conductances, int r, int s);

/// k-th elementary symmetric polynomial.
Rational elementary_symmetric(const std::vector<Rational>& values, int k);

struct SpanningTreeCheck {
  bool equal = true;
  std::vector<std::vector<Rational>> samples;  // gamma per sample
  std::vector<Rational> determinants;          // det K per sample
  std::vector<Rational> tree_sums;             // spanning-tree polynomial of the identified graph
};

/// Matrix-tree identity det K = sum over spanning trees T of the identified
/// graph of prod_{e in T} gamma_e, checked at `samples` random rational gamma.
/// Requires k <= limits.max_tree_edges.
SpanningTreeCheck spanning_tree_polynomial_check(const NetworkInstance& net, std::uint64_t seed = 1,
                                                 int samples = 3, const Limits& limits = {});

/// Spanning-tree generating polynomial of the identified graph evaluated at gamma.
Rational spanning_tree_sum(const NetworkInstance& net, const std::vector<Rational>& gamma,
                           const Limits& limits = {});

}  // namespace dirichlet
