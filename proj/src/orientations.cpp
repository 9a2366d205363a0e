#include "dirichlet/orientations.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>

namespace dirichlet {
namespace {

using Mask = std::uint64_t;

void check_edges(const Graph& g, const Limits& limits) {
  if (g.edge_count() > limits.max_orientation_edges || g.vertex_count() > 64) {
    throw Error(ErrorCode::InstanceTooLarge,
                "orientation enumeration capped at " + std::to_string(limits.max_orientation_edges) +
                    " edges");
  }
}

class Enumerator {
 public:
  Enumerator(const Graph& g, const NetworkInstance* net, OrientationMode mode)
      : g_(g), net_(net), mode_(mode) {
    const int d = g.vertex_count();
    const int k = g.edge_count();
    reach_.assign(static_cast<std::size_t>(k + 1) * d, 0);
    in_.assign(d, 0);
    out_.assign(d, 0);
    last_edge_.assign(d, -1);
    for (int e = 0; e < k; ++e) {
      last_edge_[g.edge(e).a] = e;
      last_edge_[g.edge(e).b] = e;
    }
    bad_.assign(d, 0);
    if (net_ != nullptr && mode_ != OrientationMode::Acyclic) {
      for (int a : net_->boundary()) {
        for (int b : net_->boundary()) {
          if (net_->value(b) > net_->value(a)) bad_[a] |= Mask{1} << b;
        }
      }
    }
    current_.forward.assign(k, true);
  }

  std::vector<Orientation> run() {
    recurse(0);
    return std::move(found_);
  }

 private:
  Mask* layer(int depth) { return reach_.data() + static_cast<std::size_t>(depth) * g_.vertex_count(); }

  void recurse(int e) {
    const int d = g_.vertex_count();
    if (e == g_.edge_count()) {
      found_.push_back(current_);
      return;
    }
    for (bool fwd : {true, false}) {
      const Edge& edge = g_.edge(e);
      int t = fwd ? edge.a : edge.b;
      int h = fwd ? edge.b : edge.a;
      Mask* now = layer(e);
      if (now[h] >> t & 1U) continue;
      Mask* next = layer(e + 1);
      std::copy(now, now + d, next);
      Mask gained = now[h] | (Mask{1} << h);
      for (int x = 0; x < d; ++x) {
        if (x == t || (next[x] >> t & 1U)) next[x] |= gained;
      }
      if (!respects(next)) continue;
      ++out_[t];
      ++in_[h];
      if (sources_ok(e, t) && sources_ok(e, h)) {
        current_.forward[e] = fwd;
        recurse(e + 1);
      }
      --out_[t];
      --in_[h];
    }
    current_.forward[e] = true;
  }

  bool respects(const Mask* reach) const {
    if (net_ == nullptr || mode_ == OrientationMode::Acyclic) return true;
    for (int a : net_->boundary()) {
      if (reach[a] & bad_[a]) return false;
    }
    return true;
  }

  bool sources_ok(int e, int v) const {
    if (mode_ != OrientationMode::Compatible || last_edge_[v] != e || net_->is_boundary(v)) return true;
    return in_[v] > 0 && out_[v] > 0;
  }

  const Graph& g_;
  const NetworkInstance* net_;
  OrientationMode mode_;
  std::vector<Mask> reach_;  // reach_[depth * d + v]: vertices reachable from v
  std::vector<int> in_, out_, last_edge_;
  std::vector<Mask> bad_;
  Orientation current_;
  std::vector<Orientation> found_;
};

/// Values for the nodes of a DAG in which some nodes are pinned. Pinned nodes
/// are chained from high to low value, a topological order is taken (ties by
/// index), and free nodes are spread evenly between consecutive pinned values
/// or stepped by 1 beyond the extremes. Returns nullopt when the arcs and the
/// chain together contain a cycle.
std::optional<std::vector<Rational>> order_point(int nodes, std::vector<std::pair<int, int>> arcs,
                                                 const std::vector<std::optional<Rational>>& pinned) {
  std::vector<int> fixed;
  for (int v = 0; v < nodes; ++v) {
    if (pinned[v]) fixed.push_back(v);
  }
  std::sort(fixed.begin(), fixed.end(), [&](int x, int y) { return *pinned[x] > *pinned[y]; });
  for (std::size_t r = 0; r + 1 < fixed.size(); ++r) arcs.emplace_back(fixed[r], fixed[r + 1]);

  std::vector<std::vector<int>> succ(nodes);
  std::vector<int> indegree(nodes, 0);
  for (auto [t, h] : arcs) {
    succ[t].push_back(h);
    ++indegree[h];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < nodes; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : succ[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != nodes) return std::nullopt;

  std::vector<Rational> value(nodes);
  std::vector<int> anchors;
  for (int p = 0; p < nodes; ++p) {
    if (pinned[order[p]]) anchors.push_back(p);
  }
  if (anchors.empty()) {
    for (int p = 0; p < nodes; ++p) value[order[p]] = nodes - p;
    return value;
  }
  for (int p : anchors) value[order[p]] = *pinned[order[p]];
  const Rational& top = value[order[anchors.front()]];
  for (int p = 0; p < anchors.front(); ++p) value[order[p]] = top + (anchors.front() - p);
  for (std::size_t r = 0; r + 1 < anchors.size(); ++r) {
    const Rational& hi = value[order[anchors[r]]];
    const Rational& lo = value[order[anchors[r + 1]]];
    const int count = anchors[r + 1] - anchors[r] - 1;
    for (int t = 1; t <= count; ++t) {
      value[order[anchors[r] + t]] = hi - (hi - lo) * Rational(t, count + 1);
      value[order[anchors[r] + t]].canonicalize();
    }
  }
  const Rational& bottom = value[order[anchors.back()]];
  for (int p = anchors.back() + 1; p < nodes; ++p) value[order[p]] = bottom - (p - anchors.back());
  return value;
}

}  // namespace

const char* to_string(OrientationClass c) {
  switch (c) {
    case OrientationClass::NotAcyclic: return "not-acyclic";
    case OrientationClass::Acyclic: return "acyclic";
    case OrientationClass::Semicompatible: return "semicompatible";
    case OrientationClass::Compatible: return "compatible";
  }
  return "?";
}

std::vector<Rational> extend_point(const NetworkInstance& net, const InteriorPoint& y) {
  if (static_cast<int>(y.coordinates.size()) != net.n()) {
    throw Error(ErrorCode::InvalidArgument, "point has the wrong number of interior coordinates");
  }
  std::vector<Rational> x(net.graph().vertex_count());
  for (int r = 0; r < net.m(); ++r) x[net.boundary()[r]] = net.boundary_values()[r];
  for (int s = 0; s < net.n(); ++s) x[net.interior()[s]] = y.coordinates[s];
  return x;
}

std::vector<double> extend_point(const NetworkInstance& net, const std::vector<double>& y) {
  if (static_cast<int>(y.size()) != net.n()) {
    throw Error(ErrorCode::InvalidArgument, "point has the wrong number of interior coordinates");
  }
  std::vector<double> x(net.graph().vertex_count());
  for (int r = 0; r < net.m(); ++r) x[net.boundary()[r]] = net.boundary_values()[r].get_d();
  for (int s = 0; s < net.n(); ++s) x[net.interior()[s]] = y[s];
  return x;
}

Orientation orientation_from_arcs(const Graph& g, const std::vector<std::pair<int, int>>& arcs) {
  Orientation o;
  o.forward.assign(g.edge_count(), true);
  std::vector<char> set(g.edge_count(), 0);
  for (auto [t, h] : arcs) {
    auto e = g.edge_index(t, h);
    if (!e) throw Error(ErrorCode::InvalidArgument, "arc does not match an edge");
    if (set[*e]) throw Error(ErrorCode::InvalidArgument, "edge oriented twice");
    set[*e] = 1;
    o.forward[*e] = g.edge(*e).a == t;
  }
  if (std::find(set.begin(), set.end(), 0) != set.end()) {
    throw Error(ErrorCode::InvalidArgument, "orientation leaves an edge undirected");
  }
  return o;
}

std::vector<Orientation> enumerate_acyclic(const Graph& graph, const Limits& limits) {
  check_edges(graph, limits);
  return Enumerator(graph, nullptr, OrientationMode::Acyclic).run();
}

OrientationClass classify(const NetworkInstance& net, const Orientation& o) {
  const Graph& g = net.graph();
  const int d = g.vertex_count();
  if (static_cast<int>(o.forward.size()) != g.edge_count()) {
    throw Error(ErrorCode::InvalidArgument, "orientation does not match the edge set");
  }
  std::vector<std::vector<int>> succ(d);
  std::vector<int> indegree(d, 0), outdegree(d, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    succ[o.tail(g, e)].push_back(o.head(g, e));
    ++outdegree[o.tail(g, e)];
    ++indegree[o.head(g, e)];
  }
  std::vector<int> pending = indegree, stack;
  for (int v = 0; v < d; ++v) {
    if (pending[v] == 0) stack.push_back(v);
  }
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : succ[v]) {
      if (--pending[w] == 0) stack.push_back(w);
    }
  }
  if (seen != d) return OrientationClass::NotAcyclic;

  for (int a : net.boundary()) {
    std::vector<char> reached(d, 0);
    std::vector<int> frontier{a};
    reached[a] = 1;
    while (!frontier.empty()) {
      int v = frontier.back();
      frontier.pop_back();
      for (int w : succ[v]) {
        if (reached[w]) continue;
        reached[w] = 1;
        frontier.push_back(w);
      }
    }
    for (int b : net.boundary()) {
      if (b != a && reached[b] && !(net.value(a) > net.value(b))) return OrientationClass::Acyclic;
    }
  }
  for (int i : net.interior()) {
    if (indegree[i] == 0 || outdegree[i] == 0) return OrientationClass::Semicompatible;
  }
  return OrientationClass::Compatible;
}

std::vector<Orientation> enumerate_class(const NetworkInstance& net, OrientationMode mode,
                                         const Limits& limits) {
  check_edges(net.graph(), limits);
  return Enumerator(net.graph(), &net, mode).run();
}

InteriorPoint chamber_point(const NetworkInstance& net, const Orientation& o) {
  OrientationClass c = classify(net, o);
  if (c != OrientationClass::Semicompatible && c != OrientationClass::Compatible) {
    throw Error(ErrorCode::NotSemicompatible, std::string("orientation is ") + to_string(c));
  }
  const Graph& g = net.graph();
  std::vector<std::pair<int, int>> arcs;
  for (int e = 0; e < g.edge_count(); ++e) arcs.emplace_back(o.tail(g, e), o.head(g, e));
  std::vector<std::optional<Rational>> pinned(g.vertex_count());
  for (int j : net.boundary()) pinned[j] = net.value(j);
  auto values = order_point(g.vertex_count(), std::move(arcs), pinned);
  if (!values) throw Error(ErrorCode::NotSemicompatible, "orientation conflicts with the boundary order");

  InteriorPoint y;
  for (int i : net.interior()) y.coordinates.push_back((*values)[i]);
  if (!(orientation_of_point(net, y) == o)) {
    throw Error(ErrorCode::RoundtripFailure, "chamber point does not reproduce its orientation");
  }
  return y;
}

Orientation orientation_of_point(const NetworkInstance& net, const InteriorPoint& y) {
  const Graph& g = net.graph();
  std::vector<Rational> x = extend_point(net, y);
  Orientation o;
  o.forward.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (x[edge.a] == x[edge.b]) {
      throw Error(ErrorCode::OnHyperplane, "point lies on the hyperplane of edge " + g.edge_key(e));
    }
    o.forward[e] = x[edge.a] > x[edge.b];
  }
  return o;
}

Orientation orientation_of_point(const NetworkInstance& net, const std::vector<double>& y) {
  const Graph& g = net.graph();
  std::vector<double> x = extend_point(net, y);
  Orientation o;
  o.forward.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (x[edge.a] == x[edge.b]) {
      throw Error(ErrorCode::OnHyperplane, "point lies on the hyperplane of edge " + g.edge_key(e));
    }
    o.forward[e] = x[edge.a] > x[edge.b];
  }
  return o;
}

ChamberAdjacency chamber_adjacency_graph(const NetworkInstance& net, const Limits& limits) {
  if (net.n() > 6) throw Error(ErrorCode::InstanceTooLarge, "chamber adjacency needs n <= 6");
  const Graph& g = net.graph();
  ChamberAdjacency out;
  out.chambers = enumerate_class(net, OrientationMode::Compatible, limits);
  std::map<std::vector<bool>, int> index;
  for (std::size_t c = 0; c < out.chambers.size(); ++c) index[out.chambers[c].forward] = static_cast<int>(c);

  for (std::size_t c = 0; c < out.chambers.size(); ++c) {
    const Orientation& o = out.chambers[c];
    for (int e = 0; e < g.edge_count(); ++e) {
      std::vector<bool> flipped = o.forward;
      flipped[e] = !flipped[e];
      auto it = index.find(flipped);
      if (it == index.end() || it->second < static_cast<int>(c)) continue;

      // Contract e: its head merges into its tail.
      const int keep = g.edge(e).a, gone = g.edge(e).b;
      auto node = [&](int v) { return v == gone ? keep : v; };
      std::vector<int> compact(g.vertex_count(), -1);
      int nodes = 0;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (v != gone) compact[v] = nodes++;
      }
      std::vector<std::pair<int, int>> arcs;
      for (int f = 0; f < g.edge_count(); ++f) {
        if (f != e) arcs.emplace_back(compact[node(o.tail(g, f))], compact[node(o.head(g, f))]);
      }
      std::vector<std::optional<Rational>> pinned(nodes);
      for (int j : net.boundary()) pinned[compact[node(j)]] = net.value(j);
      auto values = order_point(nodes, std::move(arcs), pinned);
      if (!values) continue;

      InteriorPoint w;
      for (int i : net.interior()) w.coordinates.push_back((*values)[compact[node(i)]]);
      std::vector<Rational> x = extend_point(net, w);
      bool ok = x[keep] == x[gone];
      for (int f = 0; f < g.edge_count() && ok; ++f) {
        if (f != e && !(x[o.tail(g, f)] > x[o.head(g, f)])) ok = false;
      }
      if (!ok) throw Error(ErrorCode::RoundtripFailure, "facet witness failed exact verification");
      out.edges.emplace_back(static_cast<int>(c), it->second, e);
      out.witnesses.push_back(std::move(w));
    }
  }
  std::vector<std::size_t> perm(out.edges.size());
  for (std::size_t r = 0; r < perm.size(); ++r) perm[r] = r;
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return out.edges[x] < out.edges[y]; });
  decltype(out.edges) sorted_edges;
  std::vector<InteriorPoint> sorted_witnesses;
  for (std::size_t r : perm) {
    sorted_edges.push_back(out.edges[r]);
    sorted_witnesses.push_back(std::move(out.witnesses[r]));
  }
  out.edges = std::move(sorted_edges);
  out.witnesses = std::move(sorted_witnesses);

  const int count = static_cast<int>(out.chambers.size());
  if (count > 0) {
    std::vector<std::vector<int>> adj(count);
    for (auto [i, j, e] : out.edges) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
    std::vector<char> seen(count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    out.connected = reached == count;
  }
  return out;
}

}  // namespace dirichlet
