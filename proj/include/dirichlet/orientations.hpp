#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dirichlet/common.hpp"
#include "dirichlet/network.hpp"

namespace dirichlet {

/// Direction of every edge. forward[e] means edge(e).a -> edge(e).b, i.e. the
/// tail is the lexicographically smaller endpoint. An arc tail -> head
/// stands for x_tail > x_head.
struct Orientation {
  std::vector<bool> forward;

  int tail(const Graph& g, int e) const { return forward[e] ? g.edge(e).a : g.edge(e).b; }
  int head(const Graph& g, int e) const { return forward[e] ? g.edge(e).b : g.edge(e).a; }

  /// Canonical order: at the first differing edge, forward comes first.
  friend bool operator<(const Orientation& x, const Orientation& y) { return x.forward > y.forward; }
  friend bool operator==(const Orientation& x, const Orientation& y) = default;
};

enum class OrientationClass { NotAcyclic, Acyclic, Semicompatible, Compatible };
const char* to_string(OrientationClass c);

enum class OrientationMode { Acyclic, Semicompatible, Compatible };

/// Interior coordinates aligned with NetworkInstance::interior().
struct InteriorPoint {
  std::vector<Rational> coordinates;
  friend bool operator==(const InteriorPoint&, const InteriorPoint&) = default;
};

/// Coordinates for every vertex: u on the boundary, y on the interior.
std::vector<Rational> extend_point(const NetworkInstance& net, const InteriorPoint& y);
std::vector<double> extend_point(const NetworkInstance& net, const std::vector<double>& y);

/// Builds an orientation from "tail>head" style pairs given by vertex index.
Orientation orientation_from_arcs(const Graph& g, const std::vector<std::pair<int, int>>& arcs);

/// All acyclic orientations in canonical order (depth-first over edges with
/// reachability-based cycle pruning).
std::vector<Orientation> enumerate_acyclic(const Graph& graph, const Limits& limits = {});

OrientationClass classify(const NetworkInstance& net, const Orientation& o);

/// Orientations whose class is at least `mode`, in canonical order.
std::vector<Orientation> enumerate_class(const NetworkInstance& net, OrientationMode mode,
                                         const Limits& limits = {});

/// Exact representative of the chamber of a semicompatible orientation.
/// Throws NotSemicompatible otherwise.
InteriorPoint chamber_point(const NetworkInstance& net, const Orientation& o);

/// Edge {a,b} points a -> b iff x_a > x_b. Throws OnHyperplane on a tie.
Orientation orientation_of_point(const NetworkInstance& net, const InteriorPoint& y);
Orientation orientation_of_point(const NetworkInstance& net, const std::vector<double>& y);

struct ChamberAdjacency {
  std::vector<Orientation> chambers;  // compatible orientations, canonical order
  /// (i, j, e): chambers i < j share a facet on the hyperplane of edge e.
  std::vector<std::tuple<int, int, int>> edges;
  /// Exact point in the relative interior of each shared facet.
  std::vector<InteriorPoint> witnesses;
  bool connected = true;
};

/// Bounded chambers with facet adjacency. Two compatible orientations are
/// joined when they differ on exactly one edge e and the digraph obtained by
/// contracting e stays acyclic and consistent with u; the facet witness is
/// constructed and checked exactly. Requires n <= 6.
ChamberAdjacency chamber_adjacency_graph(const NetworkInstance& net, const Limits& limits = {});

}  // namespace dirichlet
