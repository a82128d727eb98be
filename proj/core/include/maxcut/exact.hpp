#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "maxcut/graph.hpp"

namespace maxcut {

enum class ExactMethod { brute_force, branch_and_bound };

struct ExactResult {
  std::int64_t optimum = 0;
  CutAssignment witness;
  std::uint64_t nodes_explored = 0;
  ExactMethod method = ExactMethod::brute_force;
  /// False only when branch_and_bound hit its time limit; the result is
  /// then the best incumbent, not a certificate.
  bool optimal = true;
};

/// Exhaustive enumeration with vertex 0 fixed to +1 (global spin flip
/// leaves the cut unchanged), walking assignments in Gray-code order so
/// each step is a single O(deg) delta update.
ExactResult brute_force(const Graph& g, int limit = 30);

/// Depth-first spin fixing with the bound
///   cut(decided edges) + sum |w| over edges with an undecided endpoint.
/// With no time limit the result is certified optimal.
ExactResult branch_and_bound(
    const Graph& g,
    std::optional<std::chrono::duration<double>> time_limit = std::nullopt);

}  // namespace maxcut
