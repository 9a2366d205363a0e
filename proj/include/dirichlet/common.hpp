#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dirichlet {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
  // input validation
  MalformedInput,
  UnknownVertex,
  Disconnected,
  TooFewBoundaryNodes,
  BoundaryNotIndependent,
  BoundaryValuesNotInjective,
  DisconnectedAfterNormalization,
  DisconnectedAugmentation,
  InvalidArgument,
  // size guards
  InstanceTooLarge,
  // geometry / numerics
  NotSemicompatible,
  OnHyperplane,
  SingularSystem,
  NotPositiveWeights,
  DidNotConverge,
  RoundtripFailure,
  // internal consistency
  NonzeroRemainder,
  InternalError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Enumeration guards. Every exhaustive routine checks its input against one
/// of these before doing any work and throws InstanceTooLarge when exceeded.
struct Limits {
  std::uint64_t max_states = 100'000'000;  // colorings examined by precoloring_count
  int max_partition_vertices = 10;         // connected_partitions / poset
  int max_orientation_edges = 20;          // orientation enumeration
  int max_tree_edges = 12;                 // spanning-tree enumeration

  /// Defaults, with DIRICHLET_MAX_STATES (if set) overriding every cap.
  /// The edge caps become floor(log2(N)) and the partition cap the largest d
  /// with Bell(d) <= N.
  static Limits from_env();
  static Limits from_states(std::uint64_t states);
};

/// Accepts "p/q", integers and finite decimals ("0.25"). Throws MalformedInput.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace dirichlet
