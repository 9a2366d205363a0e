#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dirichlet/harmonic.hpp"
#include "dirichlet/network.hpp"
#include "dirichlet/orientations.hpp"

namespace dirichlet {

/// Network file contents: graph, boundary data and optional per-edge weights.
struct NetworkDocument {
  NetworkInstance net;
  std::optional<EdgeWeights> conductances;
  std::optional<EdgeWeights> energies;
};

/// JSON object with "vertices", "edges", "boundary" and optional
/// "conductances" / "energies" keyed by "a-b". Weights given as JSON
/// floating-point numbers make the whole map floating point; integers and
/// rational strings stay exact. Throws MalformedInput and validation errors.
NetworkDocument parse_network(std::string_view json_text);
NetworkDocument read_network_file(const std::string& path);

/// Inverse of parse_network (canonical key order, exact values as strings).
std::string write_network(const NetworkInstance& net, const std::optional<EdgeWeights>& conductances = {},
                          const std::optional<EdgeWeights>& energies = {});

/// Starts from `base` (all ones when absent) and overrides entries from a
/// "key=value,key=value" list. Override values are exact rationals.
EdgeWeights override_weights(const Graph& g, const std::optional<EdgeWeights>& base, std::string_view overrides);

/// Map edge key -> "tail>head" rendered as compact JSON.
std::string orientation_json(const Graph& g, const Orientation& o);

}  // namespace dirichlet
