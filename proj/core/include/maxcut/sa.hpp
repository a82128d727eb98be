#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "maxcut/graph.hpp"

namespace maxcut {

enum class CoolingLaw {
  geometric,  // T <- T * (1 - d) per move
  linear,     // T <- T - d per move
};

struct SaSchedule {
  double initial_temp = 0;
  double decrement = 0;
  double min_temp = 0.125;
  int moves_per_temp = 1;
  CoolingLaw law = CoolingLaw::geometric;

  void validate() const;
  /// Number of proposed moves until T drops below min_temp.
  std::uint64_t total_moves() const;
};

/// Schedule used for the fast variant: T0 = 10000, d = 2e-4.
SaSchedule sa1_preset();
/// Schedule used for the slow variant: T0 = 40000, d = 2e-6.
SaSchedule sa2_preset();

/// Metropolis rule used inside sa_solve: always accept non-worsening
/// moves, otherwise with probability exp(delta / temp). Exposed so the
/// rule can be characterized statistically on its own.
bool sa_accept(std::int64_t delta, double temp, std::mt19937_64& rng);

enum class SaInit { random, all_plus, given };

struct SaRunConfig {
  SaSchedule schedule;
  std::uint64_t seed = 0;
  int restarts = 1;
  SaInit init = SaInit::random;
  CutAssignment initial_assignment;  // used when init == given
};

struct SolveResult {
  std::int64_t best_value = 0;
  CutAssignment best_assignment;
  double wall_time_s = 0;
  std::uint64_t moves_attempted = 0;
  std::uint64_t moves_accepted = 0;
  std::string solver_id;
  std::uint64_t seed = 0;
};

/// Single-flip simulated annealing. Per move: pick a uniform random
/// vertex, compute the cut delta, accept if non-negative, otherwise with
/// probability exp(delta / T); cool after every move. Best-so-far is
/// tracked across the trajectory and across restarts (restart r runs on
/// RNG stream seed ^ r). Fully deterministic given (g, cfg).
SolveResult sa_solve(const Graph& g, const SaRunConfig& cfg);

/// Repeatedly applies the best improving single flip; the result is
/// 1-flip locally optimal.
SolveResult greedy_descent(const Graph& g, const CutAssignment& x0);

}  // namespace maxcut
