#include "dirichlet/chromatic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <numeric>
#include <unordered_map>

namespace dirichlet {
namespace {

using Masks = std::vector<std::uint64_t>;

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

std::uint64_t squeeze(std::uint64_t x, int v) {
  std::uint64_t low = x & ((std::uint64_t{1} << v) - 1);
  std::uint64_t high = v >= 63 ? 0 : (x >> (v + 1)) << v;
  return low | high;
}

Masks remove_vertex(const Masks& adj, int v) {
  Masks out;
  out.reserve(adj.size() - 1);
  for (int w = 0; w < static_cast<int>(adj.size()); ++w) {
    if (w != v) out.push_back(squeeze(adj[w], v));
  }
  return out;
}

class ChromaticSolver {
 public:
  IntPolynomial solve(const Masks& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 0) return IntPolynomial::constant(1);

    int edges2 = 0;
    for (auto x : adj) edges2 += popcount(x);
    if (edges2 == 0) return IntPolynomial::monomial(1, n);

    // Disconnected graphs factor over their components.
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (int v = 0; v < n; ++v) {
        if (frontier >> v & 1U) next |= adj[v];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != all) {
      return solve(restrict(adj, seen)) * solve(restrict(adj, all & ~seen));
    }

    if (edges2 == n * (n - 1)) return falling_factorial(n);

    std::string key = encode(adj);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    IntPolynomial result;
    int simplicial = -1;
    for (int v = 0; v < n && simplicial < 0; ++v) {
      bool clique = true;
      for (int w = 0; w < n && clique; ++w) {
        if (adj[v] >> w & 1U) {
          std::uint64_t others = adj[v] & ~(std::uint64_t{1} << w);
          if ((adj[w] & others) != others) clique = false;
        }
      }
      if (clique) simplicial = v;
    }
    if (simplicial >= 0) {
      result = IntPolynomial::linear_root(popcount(adj[simplicial])) *
               solve(remove_vertex(adj, simplicial));
    } else {
      // Contract the edge whose merged vertex has the largest degree.
      int bu = -1, bv = -1, best = -1;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!(adj[u] >> v & 1U)) continue;
          int merged = popcount((adj[u] | adj[v]) & ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v)));
          if (merged > best) {
            best = merged;
            bu = u;
            bv = v;
          }
        }
      }
      Masks deleted = adj;
      deleted[bu] &= ~(std::uint64_t{1} << bv);
      deleted[bv] &= ~(std::uint64_t{1} << bu);
      Masks contracted = deleted;
      contracted[bu] |= deleted[bv];
      for (int w = 0; w < n; ++w) {
        if (deleted[bv] >> w & 1U) contracted[w] |= std::uint64_t{1} << bu;
      }
      contracted = remove_vertex(contracted, bv);
      result = solve(deleted) - solve(contracted);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  static Masks restrict(const Masks& adj, std::uint64_t keep) {
    std::vector<int> slots;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
      if (keep >> v & 1U) slots.push_back(v);
    }
    Masks out(slots.size(), 0);
    for (std::size_t x = 0; x < slots.size(); ++x) {
      for (std::size_t y = 0; y < slots.size(); ++y) {
        if (adj[slots[x]] >> slots[y] & 1U) out[x] |= std::uint64_t{1} << y;
      }
    }
    return out;
  }

  static std::string encode(const Masks& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return popcount(adj[x]) < popcount(adj[y]); });
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[order[p]] = p;
    std::string key(static_cast<std::size_t>(n) * 8, '\0');
    for (int p = 0; p < n; ++p) {
      std::uint64_t mask = 0;
      for (int w = 0; w < n; ++w) {
        if (adj[order[p]] >> w & 1U) mask |= std::uint64_t{1} << pos[w];
      }
      std::memcpy(key.data() + 8 * p, &mask, 8);
    }
    return key;
  }

  std::unordered_map<std::string, IntPolynomial> memo_;
};

Masks to_masks(const Graph& graph) {
  if (graph.vertex_count() > 64) {
    throw Error(ErrorCode::InstanceTooLarge, "chromatic polynomial supports at most 64 vertices");
  }
  Masks adj(graph.vertex_count(), 0);
  for (const Edge& e : graph.edges()) {
    adj[e.a] |= std::uint64_t{1} << e.b;
    adj[e.b] |= std::uint64_t{1} << e.a;
  }
  return adj;
}

}  // namespace

IntPolynomial chromatic_polynomial(const Graph& graph) {
  ChromaticSolver solver;
  return solver.solve(to_masks(graph));
}

Graph delete_edge(const Graph& graph, int e) {
  auto edges = graph.labelled_edges();
  edges.erase(edges.begin() + e);
  return Graph(graph.labels(), edges);
}

Graph contract_edge(const Graph& graph, int e) {
  const Edge& gone = graph.edge(e);
  std::vector<std::string> labels;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (v != gone.b) labels.push_back(graph.label(v));
  }
  std::map<std::pair<std::string, std::string>, int> kept;
  for (const Edge& f : graph.edges()) {
    int a = f.a == gone.b ? gone.a : f.a;
    int b = f.b == gone.b ? gone.a : f.b;
    if (a == b) continue;
    kept[{graph.label(std::min(a, b)), graph.label(std::max(a, b))}] = 1;
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [pair, unused] : kept) edges.push_back(pair);
  return Graph(labels, edges);
}

IntPolynomial precoloring_polynomial(const NetworkInstance& net) {
  auto [quotient, remainder] = chromatic_polynomial(closure_graph(net)).divmod(falling_factorial(net.m()));
  if (!remainder.is_zero()) {
    throw Error(ErrorCode::NonzeroRemainder,
                "chromatic polynomial of the closure is not divisible by (t)_m: " + remainder.to_string());
  }
  return quotient;
}

BigInt precoloring_count(const NetworkInstance& net, int colors, const Limits& limits) {
  if (colors < net.m()) {
    throw Error(ErrorCode::InvalidArgument, "precoloring needs at least m colours");
  }
  const double states = std::pow(static_cast<double>(colors), net.n());
  if (states > static_cast<double>(limits.max_states)) {
    throw Error(ErrorCode::InstanceTooLarge,
                "precoloring enumeration exceeds the state cap of " + std::to_string(limits.max_states));
  }
  const Graph& g = net.graph();
  std::vector<int> color(g.vertex_count(), 0);
  for (int r = 0; r < net.m(); ++r) color[net.boundary()[r]] = r + 1;

  // Colour interior vertices in order of most already-coloured neighbours.
  std::vector<int> order;
  std::vector<char> placed(g.vertex_count(), 0);
  for (int j : net.boundary()) placed[j] = 1;
  for (int step = 0; step < net.n(); ++step) {
    int best = -1, best_score = -1;
    for (int i : net.interior()) {
      if (placed[i]) continue;
      int score = 0;
      for (int w : g.neighbors(i)) score += placed[w];
      if (score > best_score) {
        best = i;
        best_score = score;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  std::uint64_t total = 0;
  std::vector<int> used;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    int v = order[depth];
    if (depth + 1 == order.size()) {
      used.clear();
      for (int w : g.neighbors(v)) {
        if (color[w] != 0) used.push_back(color[w]);
      }
      std::sort(used.begin(), used.end());
      total += colors - (std::unique(used.begin(), used.end()) - used.begin());
      return;
    }
    for (int c = 1; c <= colors; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v)) {
        if (color[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      self(self, depth + 1);
      color[v] = 0;
    }
  };
  if (order.empty()) return 1;
  recurse(recurse, 0);
  return BigInt(std::to_string(total));
}

IntPolynomial precoloring_interpolated(const NetworkInstance& net, const Limits& limits) {
  std::vector<BigInt> xs, ys;
  for (int l = net.m(); l <= net.m() + net.n(); ++l) {
    xs.emplace_back(l);
    ys.push_back(precoloring_count(net, l, limits));
  }
  return interpolate(xs, ys);
}

ChamberCounts chamber_counts(const NetworkInstance& net) {
  IntPolynomial pcp = precoloring_polynomial(net);
  return {abs(pcp(BigInt(-1))), abs(pcp(BigInt(1)))};
}

BigInt beta_invariant(const Graph& graph) {
  return abs(chromatic_polynomial(graph).derivative()(BigInt(1)));
}

BigInt acyclic_orientation_count(const Graph& graph) {
  return abs(chromatic_polynomial(graph)(BigInt(-1)));
}

bool is_log_concave(const IntPolynomial& poly) {
  if (poly.is_zero()) return false;
  int low = 0;
  while (poly.coefficient(low) == 0) ++low;
  std::vector<BigInt> a;
  for (int k = poly.degree(); k >= low; --k) a.push_back(abs(poly.coefficient(k)));
  for (const auto& x : a) {
    if (x == 0) return false;
  }
  for (std::size_t r = 1; r + 1 < a.size(); ++r) {
    if (a[r] * a[r] < a[r - 1] * a[r + 1]) return false;
  }
  return true;
}

}  // namespace dirichlet
