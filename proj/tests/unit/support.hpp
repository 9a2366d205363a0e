#pragma once

#include <random>
#include <string>
#include <vector>

#include "dirichlet/dirichlet.hpp"

namespace fixtures {

using namespace dirichlet;

inline Graph make_graph(std::vector<std::string> vertices,
                        std::vector<std::pair<std::string, std::string>> edges) {
  return Graph(std::move(vertices), edges);
}

inline NetworkInstance W() { return wheatstone(); }
inline NetworkInstance P4() { return path_network(4, 0, 1); }
inline NetworkInstance J(int m, int n) { return complete_join(m, n); }
inline NetworkInstance WHEEL7() { return wheel_network(7); }

inline Graph complete_graph(int d) {
  std::vector<std::string> labels;
  for (int v = 0; v < d; ++v) labels.push_back(std::string(1, static_cast<char>('a' + v)));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int x = 0; x < d; ++x) {
    for (int y = x + 1; y < d; ++y) edges.emplace_back(labels[x], labels[y]);
  }
  return Graph(labels, edges);
}

inline Graph cycle_graph(int d) {
  std::vector<std::string> labels;
  for (int v = 0; v < d; ++v) labels.push_back(std::string(1, static_cast<char>('a' + v)));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v < d; ++v) edges.emplace_back(labels[v], labels[(v + 1) % d]);
  return Graph(labels, edges);
}

inline Graph path_graph(int d) {
  std::vector<std::string> labels;
  for (int v = 0; v < d; ++v) labels.push_back(std::string(1, static_cast<char>('a' + v)));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v + 1 < d; ++v) edges.emplace_back(labels[v], labels[v + 1]);
  return Graph(labels, edges);
}

inline IntPolynomial poly(std::vector<long> ascending) {
  std::vector<BigInt> c;
  for (long x : ascending) c.emplace_back(x);
  return IntPolynomial(c);
}

inline std::vector<Rational> ones(const NetworkInstance& net) {
  return std::vector<Rational>(net.graph().edge_count(), Rational(1));
}

inline Rational q(long p, long r = 1) {
  Rational x(p, r);
  x.canonicalize();
  return x;
}

/// Corpus restricted to small graphs for quick property sweeps.
inline const std::vector<CorpusEntry>& small_corpus() {
  static const std::vector<CorpusEntry> entries = corpus(6);
  return entries;
}

inline std::vector<Rational> random_rationals(std::mt19937_64& rng, int count, bool positive) {
  std::uniform_int_distribution<int> num(positive ? 1 : -9, 9), den(1, 9);
  std::vector<Rational> out;
  for (int k = 0; k < count; ++k) {
    int p = 0;
    while (p == 0) p = num(rng);
    out.push_back(q(p, den(rng)));
  }
  return out;
}

}  // namespace fixtures
