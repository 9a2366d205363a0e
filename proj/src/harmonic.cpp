#include "dirichlet/harmonic.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <type_traits>

namespace dirichlet {
namespace {

using IntRows = std::vector<std::vector<BigInt>>;

/// Scales each row to integers; returns the product of the scale factors.
BigInt clear_denominators(const std::vector<std::vector<Rational>>& rows, IntRows& out) {
  BigInt product = 1;
  out.assign(rows.size(), {});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BigInt scale = 1;
    for (const auto& x : rows[i]) scale = lcm(scale, x.get_den());
    for (const auto& x : rows[i]) out[i].push_back(x.get_num() * (scale / x.get_den()));
    product *= scale;
  }
  return product;
}

/// Bareiss elimination on the first `pivot_cols` columns. Returns the number
/// of pivots found before the first pivot-free column and flips `sign` on
/// every row swap; stops early when a column has no pivot.
int bareiss(IntRows& m, int pivot_cols, int& sign) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  BigInt previous = 1;
  int r = 0;
  for (int c = 0; c < pivot_cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) return r;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      m[i][c] = 0;
    }
    previous = m[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> rows_of(const Matrix<Rational>& a) {
  std::vector<std::vector<Rational>> rows(a.size, std::vector<Rational>(a.size));
  for (int i = 0; i < a.size; ++i) {
    for (int j = 0; j < a.size; ++j) rows[i][j] = a(i, j);
  }
  return rows;
}

Eigen::MatrixXd to_eigen(const Matrix<double>& a) {
  Eigen::MatrixXd m(a.size, a.size);
  for (int i = 0; i < a.size; ++i) {
    for (int j = 0; j < a.size; ++j) m(i, j) = a(i, j);
  }
  return m;
}

template <typename T>
void check_weights(const NetworkInstance& net, const std::vector<T>& w) {
  if (static_cast<int>(w.size()) != net.graph().edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "edge weights do not cover the edge set");
  }
}

double float_scale(const Matrix<double>& k) {
  double row_max = 0;
  for (int i = 0; i < k.size; ++i) {
    double sum = 0;
    for (int j = 0; j < k.size; ++j) sum += std::abs(k(i, j));
    row_max = std::max(row_max, sum);
  }
  return std::pow(row_max, k.size);
}

template <typename T>
T from_rational(const Rational& q) {
  if constexpr (std::is_same_v<T, double>) {
    return q.get_d();
  } else {
    return q;
  }
}

bool generic_matrix(const Matrix<Rational>& k) { return determinant(k) != 0; }
bool generic_matrix(const Matrix<double>& k) {
  double det = determinant(k);
  return std::isfinite(det) && std::abs(det) > 1e-12 * float_scale(k);
}

}  // namespace

std::vector<double> to_double(const EdgeWeights& w) {
  if (const auto* d = std::get_if<std::vector<double>>(&w)) return *d;
  std::vector<double> out;
  for (const auto& x : std::get<std::vector<Rational>>(w)) out.push_back(x.get_d());
  return out;
}

Rational determinant(const Matrix<Rational>& a) {
  if (a.size == 0) return 1;
  IntRows m;
  BigInt scale = clear_denominators(rows_of(a), m);
  int sign = 1;
  if (bareiss(m, a.size, sign) < a.size) return 0;
  Rational det(m[a.size - 1][a.size - 1] * sign, scale);
  det.canonicalize();
  return det;
}

int rank(const std::vector<std::vector<Rational>>& input) {
  std::vector<std::vector<Rational>> rows = input;
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<Rational> solve(const Matrix<Rational>& a, const std::vector<Rational>& b) {
  const int n = a.size;
  std::vector<std::vector<Rational>> rows = rows_of(a);
  for (int i = 0; i < n; ++i) rows[i].push_back(b[i]);
  IntRows m;
  clear_denominators(rows, m);
  int sign = 1;
  if (bareiss(m, n, sign) < n) throw Error(ErrorCode::SingularSystem, "linear system is singular");
  std::vector<Rational> x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rational acc(m[i][n]);
    for (int j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j];
    x[i] = acc / Rational(m[i][i]);
    x[i].canonicalize();
  }
  return x;
}

Matrix<Rational> inverse(const Matrix<Rational>& a) {
  Matrix<Rational> out(a.size);
  for (int c = 0; c < a.size; ++c) {
    std::vector<Rational> unit(a.size, Rational(0));
    unit[c] = 1;
    std::vector<Rational> col = solve(a, unit);
    for (int r = 0; r < a.size; ++r) out(r, c) = col[r];
  }
  return out;
}

double determinant(const Matrix<double>& a) {
  if (a.size == 0) return 1.0;
  return to_eigen(a).partialPivLu().determinant();
}

std::vector<double> solve(const Matrix<double>& a, const std::vector<double>& b) {
  Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
  Eigen::VectorXd x = to_eigen(a).partialPivLu().solve(rhs);
  if (!x.allFinite()) throw Error(ErrorCode::SingularSystem, "linear system is singular");
  return {x.data(), x.data() + x.size()};
}

template <typename T>
Matrix<T> laplacian(const NetworkInstance& net, const std::vector<T>& gamma, bool reduced) {
  check_weights(net, gamma);
  const Graph& g = net.graph();
  if (!reduced) {
    Matrix<T> l(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      l(edge.a, edge.a) += gamma[e];
      l(edge.b, edge.b) += gamma[e];
      l(edge.a, edge.b) -= gamma[e];
      l(edge.b, edge.a) -= gamma[e];
    }
    return l;
  }
  Matrix<T> k(net.n());
  for (int e = 0; e < g.edge_count(); ++e) {
    int a = net.interior_slot(g.edge(e).a);
    int b = net.interior_slot(g.edge(e).b);
    if (a >= 0) k(a, a) += gamma[e];
    if (b >= 0) k(b, b) += gamma[e];
    if (a >= 0 && b >= 0) {
      k(a, b) -= gamma[e];
      k(b, a) -= gamma[e];
    }
  }
  return k;
}

template <typename T>
bool is_generic(const NetworkInstance& net, const std::vector<T>& gamma) {
  return generic_matrix(laplacian(net, gamma, true));
}

template <typename T>
std::vector<T> harmonic_solve(const NetworkInstance& net, const std::vector<T>& gamma) {
  const Graph& g = net.graph();
  Matrix<T> k = laplacian(net, gamma, true);
  if constexpr (std::is_same_v<T, double>) {
    if (!generic_matrix(k)) throw Error(ErrorCode::SingularSystem, "conductances are not generic");
  }
  std::vector<T> rhs(net.n(), T(0));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (net.is_boundary(edge.a)) rhs[net.interior_slot(edge.b)] += gamma[e] * from_rational<T>(net.value(edge.a));
    if (net.is_boundary(edge.b)) rhs[net.interior_slot(edge.a)] += gamma[e] * from_rational<T>(net.value(edge.b));
  }
  std::vector<T> interior = solve(k, rhs);
  std::vector<T> h(g.vertex_count());
  for (int r = 0; r < net.m(); ++r) h[net.boundary()[r]] = from_rational<T>(net.boundary_values()[r]);
  for (int s = 0; s < net.n(); ++s) h[net.interior()[s]] = interior[s];
  return h;
}

template <typename T>
std::vector<T> energy_map(const NetworkInstance& net, const std::vector<T>& gamma) {
  std::vector<T> h = harmonic_solve(net, gamma);
  std::vector<T> eta;
  for (int e = 0; e < net.graph().edge_count(); ++e) {
    T drop = h[net.graph().edge(e).a] - h[net.graph().edge(e).b];
    eta.push_back(gamma[e] * drop * drop);
  }
  return eta;
}

template <typename T>
std::vector<T> conductances_from_point(const NetworkInstance& net, const std::vector<T>& eta,
                                       const std::vector<T>& z) {
  check_weights(net, eta);
  const Graph& g = net.graph();
  if (static_cast<int>(z.size()) != g.vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "point must give a value for every vertex");
  }
  std::vector<T> gamma;
  for (int e = 0; e < g.edge_count(); ++e) {
    T drop = z[g.edge(e).a] - z[g.edge(e).b];
    if (drop == T(0)) {
      throw Error(ErrorCode::OnHyperplane, "point lies on the hyperplane of edge " + g.edge_key(e));
    }
    gamma.push_back(eta[e] / (drop * drop));
  }
  return gamma;
}

template Matrix<Rational> laplacian(const NetworkInstance&, const std::vector<Rational>&, bool);
template Matrix<double> laplacian(const NetworkInstance&, const std::vector<double>&, bool);
template bool is_generic(const NetworkInstance&, const std::vector<Rational>&);
template bool is_generic(const NetworkInstance&, const std::vector<double>&);
template std::vector<Rational> harmonic_solve(const NetworkInstance&, const std::vector<Rational>&);
template std::vector<double> harmonic_solve(const NetworkInstance&, const std::vector<double>&);
template std::vector<Rational> energy_map(const NetworkInstance&, const std::vector<Rational>&);
template std::vector<double> energy_map(const NetworkInstance&, const std::vector<double>&);
template std::vector<Rational> conductances_from_point(const NetworkInstance&, const std::vector<Rational>&,
                                                       const std::vector<Rational>&);
template std::vector<double> conductances_from_point(const NetworkInstance&, const std::vector<double>&,
                                                     const std::vector<double>&);

Rational elementary_symmetric(const std::vector<Rational>& values, int k) {
  if (k < 0 || k > static_cast<int>(values.size())) return 0;
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = 1;
  for (const auto& v : values) {
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e[k];
}

Rational path_inverse_entry(const std::vector<Rational>& conductances, int r, int s) {
  const int k = static_cast<int>(conductances.size());
  const int n = k - 1;
  if (r > s) std::swap(r, s);
  if (n < 1 || r < 1 || s > n) throw Error(ErrorCode::InvalidArgument, "path index out of range");
  auto slice = [&](int from, int to) {  // gamma_from .. gamma_to, 1-based inclusive
    return std::vector<Rational>(conductances.begin() + (from - 1), conductances.begin() + to);
  };
  Rational denominator = elementary_symmetric(conductances, n);
  if (denominator == 0) throw Error(ErrorCode::SingularSystem, "e_n of the conductances vanishes");
  Rational value = elementary_symmetric(slice(1, r), r - 1) * elementary_symmetric(slice(r + 1, s), s - r) *
                   elementary_symmetric(slice(s + 1, k), n - s) / denominator;
  value.canonicalize();
  return value;
}

Rational spanning_tree_sum(const NetworkInstance& net, const std::vector<Rational>& gamma,
                           const Limits& limits) {
  check_weights(net, gamma);
  if (net.graph().edge_count() > limits.max_tree_edges) {
    throw Error(ErrorCode::InstanceTooLarge,
                "spanning-tree enumeration capped at " + std::to_string(limits.max_tree_edges) + " edges");
  }
  Multigraph mg = identified_graph(net);
  const int vertices = mg.vertex_count();
  const int links = mg.edge_count();
  Rational total = 0;
  std::vector<int> parent(vertices);

  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  // Depth-first choice of links with union-find; undo by restoring the parent array.
  auto recurse = [&](auto&& self, int next, int chosen, Rational weight) -> void {
    if (chosen == vertices - 1) {
      total += weight;
      return;
    }
    for (int l = next; l <= links - (vertices - 1 - chosen); ++l) {
      int a = find(mg.links[l].a), b = find(mg.links[l].b);
      if (a == b) continue;
      std::vector<int> saved = parent;
      parent[a] = b;
      self(self, l + 1, chosen + 1, weight * gamma[mg.links[l].origin]);
      parent = std::move(saved);
    }
  };
  std::iota(parent.begin(), parent.end(), 0);
  recurse(recurse, 0, 0, Rational(1));
  total.canonicalize();
  return total;
}

SpanningTreeCheck spanning_tree_polynomial_check(const NetworkInstance& net, std::uint64_t seed, int samples,
                                                 const Limits& limits) {
  if (net.graph().edge_count() > limits.max_tree_edges) {
    throw Error(ErrorCode::InstanceTooLarge,
                "spanning-tree enumeration capped at " + std::to_string(limits.max_tree_edges) + " edges");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numerator(-12, 12), denominator(1, 12);
  SpanningTreeCheck out;
  for (int t = 0; t < samples; ++t) {
    std::vector<Rational> gamma;
    for (int e = 0; e < net.graph().edge_count(); ++e) {
      int p = 0;
      while (p == 0) p = numerator(rng);
      Rational x(p, denominator(rng));
      x.canonicalize();
      gamma.push_back(x);
    }
    out.determinants.push_back(determinant(laplacian(net, gamma, true)));
    out.tree_sums.push_back(spanning_tree_sum(net, gamma, limits));
    out.equal = out.equal && out.determinants.back() == out.tree_sums.back();
    out.samples.push_back(std::move(gamma));
  }
  return out;
}

}  // namespace dirichlet
