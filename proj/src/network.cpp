#include "dirichlet/network.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace dirichlet {

// ---------------------------------------------------------------- Graph

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(vertices)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw Error(ErrorCode::MalformedInput, "duplicate vertex label");
  }
  auto lookup = [&](const std::string& s) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), s);
    if (it == labels_.end() || *it != s) {
      throw Error(ErrorCode::UnknownVertex, "edge endpoint '" + s + "' is not a declared vertex");
    }
    return static_cast<int>(it - labels_.begin());
  };
  for (const auto& [x, y] : edges) {
    int a = lookup(x), b = lookup(y);
    if (a == b) throw Error(ErrorCode::MalformedInput, "loop at vertex '" + x + "'");
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorCode::MalformedInput, "duplicate edge");
  }
  index();
}

void Graph::index() {
  adjacency_.assign(labels_.size(), {});
  edge_lookup_.assign(labels_.size(), {});
  for (int e = 0; e < edge_count(); ++e) {
    adjacency_[edges_[e].a].push_back(edges_[e].b);
    adjacency_[edges_[e].b].push_back(edges_[e].a);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  for (int v = 0; v < vertex_count(); ++v) {
    for (int w : adjacency_[v]) {
      Edge key{std::min(v, w), std::max(v, w)};
      auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
      edge_lookup_[v].push_back(static_cast<int>(it - edges_.begin()));
    }
  }
}

std::optional<int> Graph::index_of(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                             [](const std::string& s, std::string_view x) { return s < x; });
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::optional<int> Graph::edge_index(int u, int v) const {
  const auto& nbrs = adjacency_[u];
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return edge_lookup_[u][it - nbrs.begin()];
}

std::string Graph::edge_key(int e) const {
  return labels_[edges_[e].a] + "-" + labels_[edges_[e].b];
}

std::optional<int> Graph::edge_index_by_key(std::string_view key) const {
  // Labels may themselves contain '-', so match against the known keys.
  for (int e = 0; e < edge_count(); ++e) {
    if (edge_key(e) == key) return e;
  }
  return std::nullopt;
}

bool Graph::connected() const {
  if (labels_.empty()) return true;
  std::vector<char> seen(labels_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertex_count();
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<char> keep(labels_.size(), 0);
  for (int v : vertices) keep[v] = 1;
  std::vector<std::string> names;
  for (int v = 0; v < vertex_count(); ++v) {
    if (keep[v]) names.push_back(labels_[v]);
  }
  std::vector<std::pair<std::string, std::string>> kept;
  for (const Edge& e : edges_) {
    if (keep[e.a] && keep[e.b]) kept.emplace_back(labels_[e.a], labels_[e.b]);
  }
  return Graph(std::move(names), kept);
}

std::vector<std::pair<std::string, std::string>> Graph::labelled_edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(labels_[e.a], labels_[e.b]);
  return out;
}

int Multigraph::multiplicity(int u, int v) const {
  return static_cast<int>(std::count_if(links.begin(), links.end(), [&](const Link& l) {
    return (l.a == u && l.b == v) || (l.a == v && l.b == u);
  }));
}

// ------------------------------------------------------- NetworkInstance

NetworkInstance validate_network(const Graph& graph, const std::vector<std::string>& boundary,
                                 const std::vector<Rational>& values) {
  if (boundary.size() != values.size()) {
    throw Error(ErrorCode::MalformedInput, "boundary and value lists differ in length");
  }
  const int d = graph.vertex_count();
  std::vector<std::pair<int, Rational>> pinned;
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    auto v = graph.index_of(boundary[k]);
    if (!v) throw Error(ErrorCode::UnknownVertex, "boundary vertex '" + boundary[k] + "' is not declared");
    pinned.emplace_back(*v, values[k]);
  }
  std::sort(pinned.begin(), pinned.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t k = 1; k < pinned.size(); ++k) {
    if (pinned[k].first == pinned[k - 1].first) {
      throw Error(ErrorCode::MalformedInput, "boundary vertex listed twice");
    }
  }
  if (pinned.size() < 2) {
    throw Error(ErrorCode::TooFewBoundaryNodes, "at least two boundary nodes are required");
  }
  if (!graph.connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
  for (std::size_t x = 0; x < pinned.size(); ++x) {
    for (std::size_t y = x + 1; y < pinned.size(); ++y) {
      if (graph.adjacent(pinned[x].first, pinned[y].first)) {
        throw Error(ErrorCode::BoundaryNotIndependent,
                    "boundary nodes '" + graph.label(pinned[x].first) + "' and '" +
                        graph.label(pinned[y].first) + "' are adjacent");
      }
      if (pinned[x].second == pinned[y].second) {
        throw Error(ErrorCode::BoundaryValuesNotInjective,
                    "boundary nodes '" + graph.label(pinned[x].first) + "' and '" +
                        graph.label(pinned[y].first) + "' share a value");
      }
    }
  }

  NetworkInstance net;
  net.graph_ = graph;
  net.interior_slot_.assign(d, -1);
  net.boundary_slot_.assign(d, -1);
  for (const auto& [v, value] : pinned) {
    net.boundary_slot_[v] = static_cast<int>(net.boundary_.size());
    net.boundary_.push_back(v);
    net.values_.push_back(value);
  }
  for (int v = 0; v < d; ++v) {
    if (net.boundary_slot_[v] < 0) {
      net.interior_slot_[v] = static_cast<int>(net.interior_.size());
      net.interior_.push_back(v);
    }
  }
  return net;
}

NetworkInstance normalize_network(const Graph& graph, const std::vector<std::string>& boundary,
                                  const std::vector<Rational>& values) {
  if (boundary.size() != values.size()) {
    throw Error(ErrorCode::MalformedInput, "boundary and value lists differ in length");
  }
  // Group boundary labels by value; each group becomes one vertex.
  std::map<Rational, std::vector<std::string>> groups;
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    if (!graph.index_of(boundary[k])) {
      throw Error(ErrorCode::UnknownVertex, "boundary vertex '" + boundary[k] + "' is not declared");
    }
    groups[values[k]].push_back(boundary[k]);
  }
  std::map<std::string, std::string> rename;
  std::vector<std::string> new_boundary;
  std::vector<Rational> new_values;
  for (auto& [value, members] : groups) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::string merged = members.front();
    for (std::size_t k = 1; k < members.size(); ++k) merged += "+" + members[k];
    for (const auto& s : members) rename[s] = merged;
    new_boundary.push_back(merged);
    new_values.push_back(value);
  }
  auto image = [&](const std::string& s) {
    auto it = rename.find(s);
    return it == rename.end() ? s : it->second;
  };

  std::set<std::string> names;
  for (const auto& s : graph.labels()) names.insert(image(s));
  std::set<std::string> boundary_names(new_boundary.begin(), new_boundary.end());
  std::set<std::pair<std::string, std::string>> kept;
  for (const auto& [x, y] : graph.labelled_edges()) {
    std::string a = image(x), b = image(y);
    if (a == b) continue;                                           // loop from identification
    if (boundary_names.count(a) && boundary_names.count(b)) continue;  // edge inside B
    kept.insert({std::min(a, b), std::max(a, b)});
  }
  Graph reduced(std::vector<std::string>(names.begin(), names.end()),
                std::vector<std::pair<std::string, std::string>>(kept.begin(), kept.end()));
  if (!reduced.connected()) {
    throw Error(ErrorCode::DisconnectedAfterNormalization,
                "graph is disconnected after removing boundary-boundary edges");
  }
  return validate_network(reduced, new_boundary, new_values);
}

Graph closure_graph(const NetworkInstance& net) {
  auto edges = net.graph().labelled_edges();
  const auto& b = net.boundary();
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t y = x + 1; y < b.size(); ++y) {
      edges.emplace_back(net.graph().label(b[x]), net.graph().label(b[y]));
    }
  }
  return Graph(net.graph().labels(), edges);
}

Multigraph identified_graph(const NetworkInstance& net) {
  const Graph& g = net.graph();
  Multigraph out;
  std::string merged;
  for (int j : net.boundary()) merged += (merged.empty() ? "" : "+") + g.label(j);
  out.labels.push_back(merged);
  std::vector<int> slot(g.vertex_count(), 0);
  for (int i : net.interior()) {
    slot[i] = static_cast<int>(out.labels.size());
    out.labels.push_back(g.label(i));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    int a = slot[g.edge(e).a], b = slot[g.edge(e).b];
    if (a == b) continue;
    out.links.push_back({std::min(a, b), std::max(a, b), e});
  }
  return out;
}

bool every_interior_on_boundary_path(const NetworkInstance& net) {
  const Graph& g = net.graph();
  const int d = g.vertex_count();
  std::vector<char> covered(d, 0), on_path(d, 0);
  std::vector<int> path;
  int remaining = net.n();

  // Depth-first enumeration of simple paths that start at a boundary node and
  // only touch another boundary node at their final vertex.
  std::function<bool(int, int)> extend = [&](int v, int start) -> bool {
    for (int w : g.neighbors(v)) {
      if (on_path[w]) continue;
      if (net.is_boundary(w)) {
        if (w == start) continue;
        for (int p : path) {
          if (!net.is_boundary(p) && !covered[p]) {
            covered[p] = 1;
            if (--remaining == 0) return true;
          }
        }
        continue;
      }
      on_path[w] = 1;
      path.push_back(w);
      if (extend(w, start)) return true;
      path.pop_back();
      on_path[w] = 0;
    }
    return false;
  };

  if (remaining == 0) return true;
  for (int j : net.boundary()) {
    std::fill(on_path.begin(), on_path.end(), 0);
    path.assign(1, j);
    on_path[j] = 1;
    if (extend(j, j)) return true;
  }
  return remaining == 0;
}

bool is_biconnected(const Graph& graph) {
  const int d = graph.vertex_count();
  if (d < 2 || !graph.connected()) return false;
  if (d == 2) return true;
  std::vector<int> disc(d, -1), low(d, 0);
  int timer = 0;
  bool cut = false;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : graph.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) cut = true;
    }
    if (parent < 0 && children > 1) cut = true;
  };
  dfs(0, -1);
  return !cut;
}

PsiAssignment to_psi_graphical(const NetworkInstance& net) {
  const Graph& g = net.graph();
  PsiAssignment pa{g.induced(net.interior()), {}};
  pa.psi.resize(net.n());
  for (int slot = 0; slot < net.n(); ++slot) {
    int i = net.interior()[slot];
    for (int j : g.neighbors(i)) {
      if (net.is_boundary(j)) pa.psi[slot].push_back(net.value(j));
    }
    std::sort(pa.psi[slot].begin(), pa.psi[slot].end());
  }
  return pa;
}

NetworkInstance from_psi_graphical(const PsiAssignment& pa) {
  const Graph& g = pa.graph;
  if (static_cast<int>(pa.psi.size()) != g.vertex_count()) {
    throw Error(ErrorCode::MalformedInput, "psi must assign a set to every vertex");
  }
  std::set<Rational> values;
  for (const auto& s : pa.psi) values.insert(s.begin(), s.end());

  std::set<std::string> taken(g.labels().begin(), g.labels().end());
  std::map<Rational, std::string> name;
  for (const auto& s : values) {
    std::string label = "u=" + format_rational(s);
    while (taken.count(label)) label = "_" + label;
    taken.insert(label);
    name[s] = label;
  }
  auto edges = g.labelled_edges();
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::set<Rational> distinct(pa.psi[v].begin(), pa.psi[v].end());
    for (const auto& s : distinct) edges.emplace_back(g.label(v), name[s]);
  }
  Graph augmented(std::vector<std::string>(taken.begin(), taken.end()), edges);
  if (values.size() < 2) {
    throw Error(ErrorCode::TooFewBoundaryNodes, "psi sets contain fewer than two distinct values");
  }
  if (!augmented.connected()) {
    throw Error(ErrorCode::DisconnectedAugmentation, "augmented graph is disconnected");
  }
  std::vector<std::string> boundary;
  std::vector<Rational> boundary_values;
  for (const auto& [s, label] : name) {
    boundary.push_back(label);
    boundary_values.push_back(s);
  }
  return validate_network(augmented, boundary, boundary_values);
}

}  // namespace dirichlet
