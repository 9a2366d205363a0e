#include "dirichlet/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

namespace dirichlet {
namespace {

std::string numbered(const std::string& prefix, int k, int count) {
  std::string digits = std::to_string(k);
  std::size_t width = std::to_string(count).size();
  while (digits.size() < width) digits.insert(digits.begin(), '0');
  return prefix + digits;
}

using Masks = std::vector<std::uint32_t>;

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

/// Canonical form of a small vertex-coloured graph: vertices are ordered by a
/// refinement invariant and the adjacency bit string is minimised over all
/// orderings that respect it. Returns the key and the chosen ordering.
std::pair<std::string, std::vector<int>> canonical_form(const Masks& adj,
                                                        const std::vector<int>& color) {
  const int d = static_cast<int>(adj.size());
  std::vector<std::vector<int>> invariant(d);
  for (int v = 0; v < d; ++v) {
    invariant[v] = {color[v], popcount(adj[v])};
    std::vector<int> around;
    for (int w = 0; w < d; ++w) {
      if (adj[v] >> w & 1U) around.push_back(color[w] * 64 + popcount(adj[w]));
    }
    std::sort(around.begin(), around.end());
    invariant[v].insert(invariant[v].end(), around.begin(), around.end());
  }
  std::vector<int> order(d);
  for (int v = 0; v < d; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return invariant[x] < invariant[y]; });
  std::vector<std::pair<int, int>> classes;  // [begin, end) in order
  for (int p = 0; p < d;) {
    int q = p;
    while (q < d && invariant[order[q]] == invariant[order[p]]) ++q;
    classes.emplace_back(p, q);
    p = q;
  }

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_order = order;
  std::function<void(std::size_t)> search = [&](std::size_t c) {
    if (c == classes.size()) {
      std::uint64_t bits = 0;
      int bit = 0;
      for (int p = 0; p < d; ++p) {
        for (int q = p + 1; q < d; ++q, ++bit) {
          if (adj[order[p]] >> order[q] & 1U) bits |= std::uint64_t{1} << bit;
        }
      }
      if (bits < best) {
        best = bits;
        best_order = order;
      }
      return;
    }
    auto [b, e] = classes[c];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      search(c + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  search(0);

  std::string key = std::to_string(d) + ":";
  for (int v : best_order) {
    for (int x : invariant[v]) key += std::to_string(x) + ",";
    key += ";";
  }
  key += std::to_string(best);
  return {key, best_order};
}

std::vector<Masks> all_graphs(int d) {
  if (d <= 1) return {Masks(d, 0)};
  std::map<std::string, Masks> found;
  for (const Masks& smaller : all_graphs(d - 1)) {
    for (std::uint32_t nbrs = 0; nbrs < (1U << (d - 1)); ++nbrs) {
      Masks adj = smaller;
      adj.push_back(nbrs);
      for (int v = 0; v < d - 1; ++v) {
        if (nbrs >> v & 1U) adj[v] |= 1U << (d - 1);
      }
      auto [key, order] = canonical_form(adj, std::vector<int>(d, 0));
      if (found.count(key)) continue;
      Masks relabelled(d, 0);
      std::vector<int> position(d);
      for (int p = 0; p < d; ++p) position[order[p]] = p;
      for (int v = 0; v < d; ++v) {
        for (int w = 0; w < d; ++w) {
          if (adj[v] >> w & 1U) relabelled[position[v]] |= 1U << position[w];
        }
      }
      found.emplace(key, relabelled);
    }
  }
  std::vector<Masks> out;
  for (auto& [key, adj] : found) out.push_back(adj);
  return out;
}

bool mask_connected(const Masks& adj) {
  const int d = static_cast<int>(adj.size());
  if (d == 0) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < d; ++v) {
      if (frontier >> v & 1U) next |= adj[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (d == 32 ? ~0U : (1U << d) - 1);
}

Graph to_graph(const Masks& adj) {
  const int d = static_cast<int>(adj.size());
  std::vector<std::string> labels;
  for (int v = 0; v < d; ++v) labels.push_back(std::string(1, static_cast<char>('a' + v)));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v < d; ++v) {
    for (int w = v + 1; w < d; ++w) {
      if (adj[v] >> w & 1U) edges.emplace_back(labels[v], labels[w]);
    }
  }
  return Graph(labels, edges);
}

}  // namespace

NetworkInstance wheatstone() {
  Graph g({"i1", "i2", "j1", "j2"},
          {{"j1", "i1"}, {"j1", "i2"}, {"j2", "i1"}, {"j2", "i2"}, {"i1", "i2"}});
  return validate_network(g, {"j1", "j2"}, {Rational(1), Rational(-1)});
}

NetworkInstance path_network(int d, const Rational& left, const Rational& right) {
  if (d < 3) throw Error(ErrorCode::InvalidArgument, "path network needs at least 3 vertices");
  std::vector<std::string> chain{"j1"};
  for (int k = 1; k <= d - 2; ++k) chain.push_back(numbered("i", k, d - 2));
  chain.push_back("j2");
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) edges.emplace_back(chain[k], chain[k + 1]);
  return validate_network(Graph(chain, edges), {"j1", "j2"}, {left, right});
}

NetworkInstance complete_join(int m, int n) {
  if (m < 2 || n < 1) throw Error(ErrorCode::InvalidArgument, "complete join needs m >= 2, n >= 1");
  std::vector<std::string> labels, boundary;
  std::vector<Rational> values;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int r = 1; r <= m; ++r) {
    boundary.push_back(numbered("j", r, m));
    values.emplace_back(r - 1);
  }
  std::vector<std::string> interior;
  for (int r = 1; r <= n; ++r) interior.push_back(numbered("i", r, n));
  for (std::size_t x = 0; x < interior.size(); ++x) {
    for (std::size_t y = x + 1; y < interior.size(); ++y) edges.emplace_back(interior[x], interior[y]);
    for (const auto& j : boundary) edges.emplace_back(j, interior[x]);
  }
  labels = boundary;
  labels.insert(labels.end(), interior.begin(), interior.end());
  return validate_network(Graph(labels, edges), boundary, values);
}

NetworkInstance wheel_network(int d) {
  if (d < 5 || d % 2 == 0) {
    throw Error(ErrorCode::InvalidArgument, "wheel network needs an odd number of vertices >= 5");
  }
  const int outer = d - 1;
  std::vector<std::string> labels{"hub"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (int r = 0; r < outer; ++r) labels.push_back(numbered("o", r, outer - 1));
  for (int r = 0; r < outer; ++r) {
    edges.emplace_back(labels[1 + r], labels[1 + (r + 1) % outer]);
    edges.emplace_back("hub", labels[1 + r]);
  }
  return validate_network(Graph(labels, edges), {labels[1], labels[1 + outer / 2]},
                          {Rational(1), Rational(-1)});
}

std::vector<Graph> connected_graphs(int d) {
  if (d < 1 || d > 8) throw Error(ErrorCode::InvalidArgument, "graph catalogue covers 1..8 vertices");
  std::vector<Graph> out;
  for (const Masks& adj : all_graphs(d)) {
    if (mask_connected(adj)) out.push_back(to_graph(adj));
  }
  return out;
}

std::vector<CorpusEntry> corpus(int max_vertices, int min_m, int max_m) {
  static const Rational kValues[] = {Rational(0), Rational(1), Rational(-1, 2)};
  if (min_m < 2 || max_m > 3 || min_m > max_m) {
    throw Error(ErrorCode::InvalidArgument, "corpus boundary sizes must lie in 2..3");
  }
  std::vector<CorpusEntry> out;
  for (int d = 3; d <= max_vertices; ++d) {
    auto graphs = connected_graphs(d);
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      const Graph& g = graphs[k];
      Masks adj(d, 0);
      for (const Edge& e : g.edges()) {
        adj[e.a] |= 1U << e.b;
        adj[e.b] |= 1U << e.a;
      }
      std::set<std::string> seen;
      for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
        int m = popcount(mask);
        if (m < min_m || m > max_m || m == d) continue;
        bool independent = true;
        for (int v = 0; v < d && independent; ++v) {
          if ((mask >> v & 1U) && (adj[v] & mask)) independent = false;
        }
        if (!independent) continue;
        std::vector<int> color(d);
        for (int v = 0; v < d; ++v) color[v] = mask >> v & 1U;
        if (!seen.insert(canonical_form(adj, color).first).second) continue;

        std::vector<std::string> boundary;
        std::vector<Rational> values;
        for (int v = 0; v < d; ++v) {
          if (mask >> v & 1U) {
            values.push_back(kValues[boundary.size()]);
            boundary.push_back(g.label(v));
          }
        }
        out.push_back({"d" + std::to_string(d) + "-g" + std::to_string(k) + "-B" + std::to_string(mask),
                       validate_network(g, boundary, values)});
      }
    }
  }
  return out;
}

}  // namespace dirichlet
