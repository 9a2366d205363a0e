#pragma once

#include <optional>
#include <vector>

#include "dirichlet/network.hpp"

namespace dirichlet {

struct EliminationOrdering {
  enum class Kind { Perfect, Weighted };
  std::vector<int> order;
  Kind kind = Kind::Perfect;
};

/// Either a verified perfect elimination ordering or a chordless cycle of
/// length >= 4.
struct ChordalityResult {
  bool chordal = false;
  std::vector<int> ordering;
  std::vector<int> chordless_cycle;
};

/// Maximum cardinality search. Ties go to vertices in `preferred` first, then
/// to the smallest index; the reversed selection order is the candidate
/// ordering, so preferred vertices (when they form a clique) end up last.
ChordalityResult perfect_elimination_ordering(const Graph& graph, const std::vector<int>& preferred = {});

/// Each vertex is simplicial among itself and its successors.
bool is_perfect_elimination_ordering(const Graph& graph, const std::vector<int>& order);
/// Simple cycle of length >= 4 with no chords.
bool is_chordless_cycle(const Graph& graph, const std::vector<int>& cycle);

struct SupersolvabilityResult {
  bool supersolvable = false;
  /// Same verdict: the arrangement is free iff the closure graph is chordal.
  bool free = false;
  ChordalityResult witness;  // on closure_graph(net)
};

SupersolvabilityResult is_supersolvable(const NetworkInstance& net);

/// Ordering of the interior vertices (as indices of to_psi_graphical(net).graph,
/// which coincide with interior slots) that is perfect on the interior graph
/// and satisfies psi(i_r) inside psi(i_s) whenever i_r ~ i_s, r < s.
/// Built from a perfect elimination ordering of the closure graph that ends
/// with the boundary; nullopt when the closure graph is not chordal.
std::optional<EliminationOrdering> weighted_elimination_ordering(const NetworkInstance& net);

bool is_weighted_elimination_ordering(const PsiAssignment& pa, const std::vector<int>& order);

}  // namespace dirichlet
