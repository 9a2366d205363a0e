#pragma once

#include <string>
#include <vector>

#include "dirichlet/network.hpp"

namespace dirichlet {

// Named networks used by the tests, the CLI census and the Python module.

/// Wheatstone bridge: j1, j2 boundary with u = (1, -1); interior i1, i2.
NetworkInstance wheatstone();

/// Path j1 - i1 - ... - i{d-2} - j2 with u(j1) = left, u(j2) = right.
NetworkInstance path_network(int d, const Rational& left = 0, const Rational& right = 1);

/// Complete join: interior clique i1..in, every boundary node j1..jm adjacent
/// to every interior vertex, u(j_r) = r - 1.
NetworkInstance complete_join(int m, int n);

/// Wheel on d vertices (d odd, >= 5): outer cycle o0..o{d-2}, hub "hub",
/// boundary o0 (u = 1) and the opposite outer vertex (u = -1).
NetworkInstance wheel_network(int d);

/// All connected graphs on exactly d vertices, one per isomorphism class,
/// labelled "a", "b", ... (d <= 8).
std::vector<Graph> connected_graphs(int d);

struct CorpusEntry {
  std::string id;  // "d<d>-g<k>-B<mask>"
  NetworkInstance net;
};

/// Every connected graph with 3..max_vertices vertices together with every
/// independent boundary set of size min_m..max_m, one per isomorphism class
/// of the pair (g, B). Boundary values are 0, 1, -1/2 in label order.
std::vector<CorpusEntry> corpus(int max_vertices, int min_m = 2, int max_m = 3);

}  // namespace dirichlet
