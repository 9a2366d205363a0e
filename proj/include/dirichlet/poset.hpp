#pragma once

#include <utility>
#include <vector>

#include "dirichlet/common.hpp"
#include "dirichlet/network.hpp"
#include "dirichlet/polynomial.hpp"

namespace dirichlet {

/// Partition of the vertex set into blocks that each induce a connected
/// subgraph. Blocks are sorted, and sorted by their smallest vertex.
struct ConnectedPartition {
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  /// block_of()[v] is the index of the block containing v.
  std::vector<int> block_of(int vertex_count) const;
  /// X refines Y: every block of X lies inside a block of Y.
  bool refines(const ConnectedPartition& other, int vertex_count) const;

  friend auto operator<=>(const ConnectedPartition&, const ConnectedPartition&) = default;
};

/// All connected partitions of g ordered by rank (|V| - #blocks), then by
/// block list. Index 0 is the partition into singletons.
std::vector<ConnectedPartition> connected_partitions(const Graph& graph, const Limits& limits = {});

/// Every block holds at most one boundary node.
bool is_boundary_separating(const ConnectedPartition& p, const NetworkInstance& net);

/// Subset closed downward under refinement inside `all`.
bool is_order_ideal(const std::vector<ConnectedPartition>& subset,
                    const std::vector<ConnectedPartition>& all, int vertex_count);

struct FinitePoset {
  std::vector<ConnectedPartition> elements;  // canonical order; elements[0] is the bottom
  std::vector<int> rank;
  std::vector<std::pair<int, int>> covers;   // (lower, upper)
  std::vector<BigInt> mobius;                // mu(bottom, X)
  int vertex_count = 0;

  int size() const { return static_cast<int>(elements.size()); }
  bool leq(int x, int y) const { return elements[x].refines(elements[y], vertex_count); }
};

/// Boundary-separating connected partitions ordered by refinement: the
/// intersection poset of the Dirichlet arrangement.
FinitePoset intersection_poset(const NetworkInstance& net, const Limits& limits = {});

/// sum over X of mu(bottom, X) t^(n - rank X).
IntPolynomial mobius_characteristic(const NetworkInstance& net, const Limits& limits = {});

}  // namespace dirichlet
