#pragma once

#include "dirichlet/common.hpp"
#include "dirichlet/network.hpp"
#include "dirichlet/polynomial.hpp"

namespace dirichlet {

/// Chromatic polynomial by deletion-contraction, memoised per call on the
/// degree-sorted adjacency encoding of each subgraph. Simplicial vertices and
/// complete graphs are peeled off in closed form. At most 64 vertices.
IntPolynomial chromatic_polynomial(const Graph& graph);

/// g \ e
Graph delete_edge(const Graph& graph, int e);
/// g / e: the endpoints merge into the lexicographically smaller label;
/// parallel edges collapse.
Graph contract_edge(const Graph& graph, int e);

/// chi(closure) / (t)_m by exact division. Equals the characteristic
/// polynomial of the Dirichlet arrangement; degree n, monic.
IntPolynomial precoloring_polynomial(const NetworkInstance& net);

/// Brute-force count of proper `colors`-colourings of g extending the
/// bijection that sends the r-th boundary node (label order) to colour r.
BigInt precoloring_count(const NetworkInstance& net, int colors, const Limits& limits = {});

/// Lagrange interpolation of precoloring_count at m, m+1, ..., m+n.
IntPolynomial precoloring_interpolated(const NetworkInstance& net, const Limits& limits = {});

struct ChamberCounts {
  BigInt total;
  BigInt bounded;
};

/// Zaslavsky: |pcp(-1)| chambers, |pcp(1)| of them bounded.
ChamberCounts chamber_counts(const NetworkInstance& net);

/// |chi'(1)|
BigInt beta_invariant(const Graph& graph);
/// |chi(-1)|
BigInt acyclic_orientation_count(const Graph& graph);

/// Writes the polynomial as a0 t^n - a1 t^(n-1) + ... with a_r >= 0 after
/// stripping any power-of-t factor, and checks a_r > 0 and
/// a_r^2 >= a_(r-1) a_(r+1). The zero polynomial is not log-concave.
bool is_log_concave(const IntPolynomial& poly);

}  // namespace dirichlet
