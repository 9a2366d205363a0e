#include "dirichlet/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace dirichlet {
namespace {

using Mask = std::uint64_t;

struct Packed {
  std::vector<Mask> blocks;     // block masks
  std::vector<Mask> container;  // container[v] = mask of the block holding v
};

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.a] |= Mask{1} << e.b;
    adj[e.b] |= Mask{1} << e.a;
  }
  return adj;
}

/// Calls emit(S) once for every connected S with seed in S, S inside allowed.
template <typename Emit>
void grow(const std::vector<Mask>& adj, Mask allowed, Mask current, Mask extension, Mask forbidden,
          Emit& emit) {
  emit(current);
  while (extension) {
    int w = __builtin_ctzll(extension);
    Mask bit = Mask{1} << w;
    extension &= ~bit;
    Mask next = extension | (adj[w] & allowed & ~current & ~forbidden & ~bit);
    grow(adj, allowed, current | bit, next, forbidden | bit, emit);
    forbidden |= bit;
  }
}

void partitions(const std::vector<Mask>& adj, Mask remaining, std::vector<Mask>& stack,
                std::vector<std::vector<Mask>>& out) {
  if (remaining == 0) {
    out.push_back(stack);
    return;
  }
  int v = __builtin_ctzll(remaining);
  Mask seed = Mask{1} << v;
  auto emit = [&](Mask block) {
    stack.push_back(block);
    partitions(adj, remaining & ~block, stack, out);
    stack.pop_back();
  };
  grow(adj, remaining, seed, adj[v] & remaining, seed, emit);
}

ConnectedPartition unpack(const std::vector<Mask>& masks) {
  ConnectedPartition p;
  for (Mask b : masks) {
    std::vector<int> block;
    for (Mask x = b; x; x &= x - 1) block.push_back(__builtin_ctzll(x));
    p.blocks.push_back(std::move(block));
  }
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

Packed pack(const ConnectedPartition& p, int vertex_count) {
  Packed out;
  out.container.assign(vertex_count, 0);
  for (const auto& block : p.blocks) {
    Mask m = 0;
    for (int v : block) m |= Mask{1} << v;
    out.blocks.push_back(m);
    for (int v : block) out.container[v] = m;
  }
  return out;
}

bool packed_refines(const Packed& x, const Packed& y) {
  for (Mask b : x.blocks) {
    if ((b & ~y.container[__builtin_ctzll(b)]) != 0) return false;
  }
  return true;
}

void check_size(const Graph& g, const Limits& limits) {
  if (g.vertex_count() > limits.max_partition_vertices || g.vertex_count() > 63) {
    throw Error(ErrorCode::InstanceTooLarge,
                "connected partitions capped at " + std::to_string(limits.max_partition_vertices) +
                    " vertices");
  }
}

}  // namespace

std::vector<int> ConnectedPartition::block_of(int vertex_count) const {
  std::vector<int> out(vertex_count, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int v : blocks[b]) out[v] = static_cast<int>(b);
  }
  return out;
}

bool ConnectedPartition::refines(const ConnectedPartition& other, int vertex_count) const {
  std::vector<int> owner = other.block_of(vertex_count);
  for (const auto& block : blocks) {
    for (int v : block) {
      if (owner[v] != owner[block.front()]) return false;
    }
  }
  return true;
}

std::vector<ConnectedPartition> connected_partitions(const Graph& graph, const Limits& limits) {
  check_size(graph, limits);
  const int d = graph.vertex_count();
  std::vector<std::vector<Mask>> raw;
  std::vector<Mask> stack;
  Mask all = d == 0 ? 0 : (d == 64 ? ~Mask{0} : (Mask{1} << d) - 1);
  partitions(adjacency_masks(graph), all, stack, raw);

  std::vector<ConnectedPartition> out;
  out.reserve(raw.size());
  for (const auto& masks : raw) out.push_back(unpack(masks));
  std::sort(out.begin(), out.end(), [](const ConnectedPartition& x, const ConnectedPartition& y) {
    if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
    return x.blocks < y.blocks;
  });
  return out;
}

bool is_boundary_separating(const ConnectedPartition& p, const NetworkInstance& net) {
  for (const auto& block : p.blocks) {
    int count = 0;
    for (int v : block) count += net.is_boundary(v) ? 1 : 0;
    if (count > 1) return false;
  }
  return true;
}

bool is_order_ideal(const std::vector<ConnectedPartition>& subset,
                    const std::vector<ConnectedPartition>& all, int vertex_count) {
  std::set<ConnectedPartition> members(subset.begin(), subset.end());
  std::vector<Packed> packed_all;
  for (const auto& p : all) packed_all.push_back(pack(p, vertex_count));
  for (const auto& p : subset) {
    Packed top = pack(p, vertex_count);
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (packed_refines(packed_all[k], top) && !members.count(all[k])) return false;
    }
  }
  return true;
}

FinitePoset intersection_poset(const NetworkInstance& net, const Limits& limits) {
  const Graph& g = net.graph();
  FinitePoset poset;
  poset.vertex_count = g.vertex_count();
  for (auto& p : connected_partitions(g, limits)) {
    if (is_boundary_separating(p, net)) poset.elements.push_back(std::move(p));
  }
  const int size = poset.size();
  std::vector<Packed> packed;
  packed.reserve(size);
  for (const auto& p : poset.elements) {
    packed.push_back(pack(p, poset.vertex_count));
    poset.rank.push_back(poset.vertex_count - p.block_count());
  }

  // Elements are sorted by rank, so everything below x precedes it.
  poset.mobius.assign(size, BigInt(0));
  for (int x = 0; x < size; ++x) {
    if (x == 0) {
      poset.mobius[0] = 1;
      continue;
    }
    BigInt sum = 0;
    for (int y = 0; y < x; ++y) {
      if (poset.rank[y] >= poset.rank[x]) break;
      if (!packed_refines(packed[y], packed[x])) continue;
      sum += poset.mobius[y];
      if (poset.rank[y] + 1 == poset.rank[x]) poset.covers.emplace_back(y, x);
    }
    poset.mobius[x] = -sum;
  }
  std::sort(poset.covers.begin(), poset.covers.end());
  return poset;
}

IntPolynomial mobius_characteristic(const NetworkInstance& net, const Limits& limits) {
  FinitePoset poset = intersection_poset(net, limits);
  std::vector<BigInt> coeffs(net.n() + 1, BigInt(0));
  for (int x = 0; x < poset.size(); ++x) coeffs[net.n() - poset.rank[x]] += poset.mobius[x];
  return IntPolynomial(std::move(coeffs));
}

}  // namespace dirichlet
