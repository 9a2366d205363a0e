#include "dirichlet/chordal.hpp"

#include <algorithm>
#include <deque>

namespace dirichlet {
namespace {

/// Shortest x-y path avoiding `blocked`; empty when none exists.
std::vector<int> shortest_path(const Graph& g, int x, int y, const std::vector<char>& blocked) {
  std::vector<int> parent(g.vertex_count(), -1);
  std::deque<int> queue{x};
  parent[x] = x;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == y) break;
    for (int w : g.neighbors(v)) {
      if (parent[w] >= 0 || blocked[w]) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  if (parent[y] < 0) return {};
  std::vector<int> path;
  for (int v = y; v != x; v = parent[v]) path.push_back(v);
  path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Cycle v, x, ..., y through a shortest x-y path outside N[v] \ {x, y}.
std::vector<int> cycle_through(const Graph& g, int v, int x, int y) {
  std::vector<char> blocked(g.vertex_count(), 0);
  blocked[v] = 1;
  for (int w : g.neighbors(v)) blocked[w] = 1;
  blocked[x] = blocked[y] = 0;
  std::vector<int> path = shortest_path(g, x, y, blocked);
  if (path.empty()) return {};
  std::vector<int> cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

std::vector<int> find_chordless_cycle(const Graph& g, int v0, int x0, int y0) {
  if (auto c = cycle_through(g, v0, x0, y0); !c.empty()) return c;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t p = 0; p < nb.size(); ++p) {
      for (std::size_t q = p + 1; q < nb.size(); ++q) {
        if (g.adjacent(nb[p], nb[q])) continue;
        if (auto c = cycle_through(g, v, nb[p], nb[q]); !c.empty()) return c;
      }
    }
  }
  return {};
}

}  // namespace

bool is_perfect_elimination_ordering(const Graph& graph, const std::vector<int>& order) {
  const int d = graph.vertex_count();
  if (static_cast<int>(order.size()) != d) return false;
  std::vector<int> position(d, -1);
  for (int p = 0; p < d; ++p) {
    if (order[p] < 0 || order[p] >= d || position[order[p]] >= 0) return false;
    position[order[p]] = p;
  }
  for (int v : order) {
    std::vector<int> later;
    for (int w : graph.neighbors(v)) {
      if (position[w] > position[v]) later.push_back(w);
    }
    for (std::size_t p = 0; p < later.size(); ++p) {
      for (std::size_t q = p + 1; q < later.size(); ++q) {
        if (!graph.adjacent(later[p], later[q])) return false;
      }
    }
  }
  return true;
}

bool is_chordless_cycle(const Graph& graph, const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 4) return false;
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int p = 0; p < len; ++p) {
    for (int q = p + 1; q < len; ++q) {
      bool consecutive = q == p + 1 || (p == 0 && q == len - 1);
      if (graph.adjacent(cycle[p], cycle[q]) != consecutive) return false;
    }
  }
  return true;
}

ChordalityResult perfect_elimination_ordering(const Graph& graph, const std::vector<int>& preferred) {
  const int d = graph.vertex_count();
  std::vector<char> favoured(d, 0), numbered(d, 0);
  for (int v : preferred) favoured[v] = 1;
  std::vector<int> weight(d, 0), selection;
  for (int step = 0; step < d; ++step) {
    int best = -1;
    for (int v = 0; v < d; ++v) {
      if (numbered[v]) continue;
      if (best < 0 || weight[v] > weight[best] ||
          (weight[v] == weight[best] && favoured[v] && !favoured[best])) {
        best = v;
      }
    }
    numbered[best] = 1;
    selection.push_back(best);
    for (int w : graph.neighbors(best)) {
      if (!numbered[w]) ++weight[w];
    }
  }
  std::reverse(selection.begin(), selection.end());

  ChordalityResult result;
  std::vector<int> position(d);
  for (int p = 0; p < d; ++p) position[selection[p]] = p;
  for (int v : selection) {
    int first = -1;
    for (int w : graph.neighbors(v)) {
      if (position[w] > position[v] && (first < 0 || position[w] < position[first])) first = w;
    }
    if (first < 0) continue;
    for (int w : graph.neighbors(v)) {
      if (w != first && position[w] > position[v] && !graph.adjacent(first, w)) {
        result.chordless_cycle = find_chordless_cycle(graph, v, first, w);
        return result;
      }
    }
  }
  result.chordal = true;
  result.ordering = std::move(selection);
  return result;
}

SupersolvabilityResult is_supersolvable(const NetworkInstance& net) {
  SupersolvabilityResult out;
  out.witness = perfect_elimination_ordering(closure_graph(net), net.boundary());
  out.supersolvable = out.free = out.witness.chordal;
  return out;
}

std::optional<EliminationOrdering> weighted_elimination_ordering(const NetworkInstance& net) {
  ChordalityResult peo = perfect_elimination_ordering(closure_graph(net), net.boundary());
  if (!peo.chordal) return std::nullopt;
  EliminationOrdering out;
  out.kind = EliminationOrdering::Kind::Weighted;
  for (int p = 0; p < net.n(); ++p) {
    int v = peo.ordering[p];
    if (net.is_boundary(v)) {
      throw Error(ErrorCode::InternalError, "elimination ordering does not end with the boundary");
    }
    out.order.push_back(net.interior_slot(v));
  }
  if (!is_weighted_elimination_ordering(to_psi_graphical(net), out.order)) {
    throw Error(ErrorCode::InternalError, "constructed ordering is not a weighted elimination ordering");
  }
  return out;
}

bool is_weighted_elimination_ordering(const PsiAssignment& pa, const std::vector<int>& order) {
  if (!is_perfect_elimination_ordering(pa.graph, order)) return false;
  std::vector<int> position(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<int>(p);
  for (const Edge& e : pa.graph.edges()) {
    int early = position[e.a] < position[e.b] ? e.a : e.b;
    int late = early == e.a ? e.b : e.a;
    if (!std::includes(pa.psi[late].begin(), pa.psi[late].end(), pa.psi[early].begin(), pa.psi[early].end())) {
      return false;
    }
  }
  return true;
}

}  // namespace dirichlet
