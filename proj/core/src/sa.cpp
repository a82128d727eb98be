#include "maxcut/sa.hpp"

#include <chrono>
#include <cmath>
#include <random>

namespace maxcut {

void SaSchedule::validate() const {
  if (!(initial_temp > 0) || !(min_temp > 0) || initial_temp <= min_temp)
    throw InvalidArgument("schedule requires initial_temp > min_temp > 0");
  if (law == CoolingLaw::geometric && !(decrement > 0 && decrement < 1))
    throw InvalidArgument("geometric decrement must lie in (0,1)");
  if (law == CoolingLaw::linear && !(decrement > 0))
    throw InvalidArgument("linear decrement must be positive");
  if (moves_per_temp < 1)
    throw InvalidArgument("moves_per_temp must be at least 1");
}

std::uint64_t SaSchedule::total_moves() const {
  validate();
  double steps;
  if (law == CoolingLaw::geometric)
    steps = std::ceil(std::log(min_temp / initial_temp) /
                      std::log1p(-decrement));
  else
    steps = std::ceil((initial_temp - min_temp) / decrement);
  return static_cast<std::uint64_t>(steps) * moves_per_temp;
}

SaSchedule sa1_preset() { return {.initial_temp = 10000, .decrement = 2e-4}; }
SaSchedule sa2_preset() { return {.initial_temp = 40000, .decrement = 2e-6}; }

namespace {

// Deterministic uniform double in [0,1) from the top 53 bits; avoids the
// unspecified stdlib distribution algorithms so runs are reproducible
// across toolchains.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int uniform_vertex(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

}  // namespace

bool sa_accept(std::int64_t delta, double temp, std::mt19937_64& rng) {
  return delta >= 0 ||
         uniform01(rng) < std::exp(static_cast<double>(delta) / temp);
}

SolveResult sa_solve(const Graph& g, const SaRunConfig& cfg) {
  cfg.schedule.validate();
  if (cfg.restarts < 1) throw InvalidArgument("restarts must be at least 1");
  if (cfg.init == SaInit::given &&
      static_cast<int>(cfg.initial_assignment.size()) != g.n())
    throw InvalidArgument("initial assignment length does not match graph");

  const auto t0 = std::chrono::steady_clock::now();
  SolveResult res;
  res.solver_id = "sa";
  res.seed = cfg.seed;
  res.best_assignment.assign(g.n(), +1);

  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(cfg.seed ^ static_cast<std::uint64_t>(r));
    CutAssignment x;
    switch (cfg.init) {
      case SaInit::all_plus:
        x.assign(g.n(), +1);
        break;
      case SaInit::given:
        x = cfg.initial_assignment;
        break;
      case SaInit::random:
        x.resize(g.n());
        for (auto& s : x) s = (rng() & 1) ? std::int8_t(+1) : std::int8_t(-1);
        break;
    }
    std::int64_t cur = cut_value(g, x);
    std::int64_t best = cur;
    CutAssignment best_x = x;

    double temp = cfg.schedule.initial_temp;
    while (temp >= cfg.schedule.min_temp && g.n() > 0) {
      for (int m = 0; m < cfg.schedule.moves_per_temp; ++m) {
        const int i = uniform_vertex(rng, g.n());
        const std::int64_t delta = cut_delta(g, x, i);
        ++res.moves_attempted;
        if (sa_accept(delta, temp, rng)) {
          x[i] = -x[i];
          cur += delta;
          ++res.moves_accepted;
          if (cur > best) {
            best = cur;
            best_x = x;
          }
        }
      }
      if (cfg.schedule.law == CoolingLaw::geometric)
        temp *= 1.0 - cfg.schedule.decrement;
      else
        temp -= cfg.schedule.decrement;
    }

    if (r == 0 || best > res.best_value) {  // ties keep the earliest restart
      res.best_value = best;
      res.best_assignment = std::move(best_x);
    }
  }

  res.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

SolveResult greedy_descent(const Graph& g, const CutAssignment& x0) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult res;
  res.solver_id = "greedy";
  CutAssignment x = x0;
  std::int64_t cur = cut_value(g, x);
  for (;;) {
    std::int64_t best_delta = 0;
    int best_i = -1;
    for (int i = 0; i < g.n(); ++i) {
      const std::int64_t d = cut_delta(g, x, i);
      if (d > best_delta) {
        best_delta = d;
        best_i = i;
      }
    }
    ++res.moves_attempted;
    if (best_i < 0) break;
    x[best_i] = -x[best_i];
    cur += best_delta;
    ++res.moves_accepted;
  }
  res.best_value = cur;
  res.best_assignment = std::move(x);
  res.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

}  // namespace maxcut
