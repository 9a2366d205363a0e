#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dirichlet/common.hpp"

namespace dirichlet {

/// Undirected edge between vertex indices, always stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on string-labelled vertices.
///
/// Labels are kept in lexicographic order and vertex indices refer to that
/// order; edges are sorted by (a, b). Every vector indexed by vertex or edge
/// elsewhere in the library uses these canonical indices.
class Graph {
 public:
  Graph() = default;

  /// Throws MalformedInput on loops or duplicate edges/labels and
  /// UnknownVertex on undeclared endpoints.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  std::optional<int> index_of(std::string_view label) const;
  std::optional<int> edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }

  /// "a-b" with a < b lexicographically.
  std::string edge_key(int e) const;
  std::optional<int> edge_index_by_key(std::string_view key) const;

  bool connected() const;
  /// Subgraph induced by `vertices` (labels are preserved).
  Graph induced(std::span<const int> vertices) const;

  std::vector<std::pair<std::string, std::string>> labelled_edges() const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.labels_ == y.labels_ && x.edges_ == y.edges_;
  }

 private:
  void index();

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> edge_lookup_;  // edge_lookup_[u][k] pairs with adjacency_[u][k]
};

/// Multigraph whose edges remember which edge of the source graph produced them.
struct Multigraph {
  struct Link {
    int a = 0;
    int b = 0;
    int origin = 0;  // edge index in the source graph
  };
  std::vector<std::string> labels;
  std::vector<Link> links;

  int vertex_count() const { return static_cast<int>(labels.size()); }
  int edge_count() const { return static_cast<int>(links.size()); }
  /// Number of links joining u and v, in either orientation.
  int multiplicity(int u, int v) const;
};

/// A validated electrical network (g, B, u).
class NetworkInstance {
 public:
  const Graph& graph() const { return graph_; }
  /// Boundary vertex indices in lexicographic label order.
  const std::vector<int>& boundary() const { return boundary_; }
  /// Boundary values aligned with boundary().
  const std::vector<Rational>& boundary_values() const { return values_; }
  /// Interior vertex indices in lexicographic label order; position in this
  /// vector is the coordinate index of every interior vector and matrix.
  const std::vector<int>& interior() const { return interior_; }

  int m() const { return static_cast<int>(boundary_.size()); }
  int n() const { return static_cast<int>(interior_.size()); }

  bool is_boundary(int v) const { return boundary_slot_[v] >= 0; }
  /// Position of v in interior(), or -1.
  int interior_slot(int v) const { return interior_slot_[v]; }
  /// Position of v in boundary(), or -1.
  int boundary_slot(int v) const { return boundary_slot_[v]; }
  /// u(v) for a boundary vertex.
  const Rational& value(int v) const { return values_[boundary_slot_[v]]; }

  friend bool operator==(const NetworkInstance& x, const NetworkInstance& y) {
    return x.graph_ == y.graph_ && x.boundary_ == y.boundary_ && x.values_ == y.values_;
  }

 private:
  friend NetworkInstance validate_network(const Graph&, const std::vector<std::string>&,
                                          const std::vector<Rational>&);
  Graph graph_;
  std::vector<int> boundary_;
  std::vector<Rational> values_;
  std::vector<int> interior_;
  std::vector<int> interior_slot_;
  std::vector<int> boundary_slot_;
};

/// (g, psi): a graph with a finite set of forbidden values per vertex.
struct PsiAssignment {
  Graph graph;
  std::vector<std::vector<Rational>> psi;  // per vertex, sorted and unique
};

NetworkInstance validate_network(const Graph& graph, const std::vector<std::string>& boundary,
                                 const std::vector<Rational>& values);

/// Identifies boundary vertices sharing a value (merged label: the member
/// labels joined by '+'), drops boundary-boundary edges, then validates.
NetworkInstance normalize_network(const Graph& graph, const std::vector<std::string>& boundary,
                                  const std::vector<Rational>& values);

/// g with every pair of boundary nodes joined.
Graph closure_graph(const NetworkInstance& net);

/// g with all boundary nodes merged into one vertex (labelled by the member
/// labels joined with '+', placed first). Loops are discarded.
Multigraph identified_graph(const NetworkInstance& net);

/// Exhaustive simple-path search: does every interior vertex lie on a simple
/// path between two distinct boundary nodes?
bool every_interior_on_boundary_path(const NetworkInstance& net);

/// Connected with no cut vertex (Hopcroft-Tarjan low-link search).
bool is_biconnected(const Graph& graph);

/// Interior-induced subgraph with psi(i) = { u(j) : j in B adjacent to i }.
PsiAssignment to_psi_graphical(const NetworkInstance& net);

/// Adds one boundary vertex per distinct value (label "u=<value>") joined to
/// every vertex whose psi set contains it.
NetworkInstance from_psi_graphical(const PsiAssignment& pa);

}  // namespace dirichlet
