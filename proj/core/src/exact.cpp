#include "maxcut/exact.hpp"

#include <bit>

namespace maxcut {

ExactResult brute_force(const Graph& g, int limit) {
  if (g.n() > limit)
    throw InvalidArgument("instance too large for brute force (n=" +
                          std::to_string(g.n()) + ", limit=" +
                          std::to_string(limit) + ")");
  ExactResult res;
  res.method = ExactMethod::brute_force;
  CutAssignment x(g.n(), +1);
  res.witness = x;
  res.nodes_explored = 1;
  if (g.n() <= 1) return res;

  std::int64_t cur = 0;  // all-plus cut
  std::int64_t best = 0;
  const std::uint64_t total = std::uint64_t(1) << (g.n() - 1);
  for (std::uint64_t k = 1; k < total; ++k) {
    const int flip = std::countr_zero(k) + 1;  // vertex 0 stays fixed
    cur += cut_delta(g, x, flip);
    x[flip] = -x[flip];
    ++res.nodes_explored;
    if (cur > best) {
      best = cur;
      res.witness = x;
    }
  }
  res.optimum = best;
  return res;
}

namespace {

struct BnbState {
  const Graph& g;
  std::vector<std::int64_t> pending_abs;  // |w| of edges not yet decided at depth d
  CutAssignment x;
  CutAssignment best_x;
  std::int64_t best;
  std::uint64_t nodes = 0;
  bool timed_out = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void dfs(int depth, std::int64_t decided_cut) {
    ++nodes;
    if (deadline && (nodes & 0xfff) == 0 &&
        std::chrono::steady_clock::now() > *deadline) {
      timed_out = true;
      return;
    }
    if (depth == g.n()) {
      if (decided_cut > best) {
        best = decided_cut;
        best_x = x;
      }
      return;
    }
    if (decided_cut + pending_abs[depth] <= best) return;  // cannot improve
    for (std::int8_t spin : {std::int8_t(+1), std::int8_t(-1)}) {
      if (depth == 0 && spin == -1) break;  // gauge: vertex 0 stays +1
      x[depth] = spin;
      std::int64_t gained = 0;
      for (const Graph::Neighbor& nb : g.neighbors(depth))
        if (nb.to < depth && x[nb.to] != spin) gained += nb.w;
      dfs(depth + 1, decided_cut + gained);
      if (timed_out) return;
    }
  }
};

}  // namespace

ExactResult branch_and_bound(
    const Graph& g, std::optional<std::chrono::duration<double>> time_limit) {
  BnbState st{.g = g,
              .pending_abs = std::vector<std::int64_t>(g.n() + 1, 0),
              .x = CutAssignment(g.n(), +1),
              .best_x = CutAssignment(g.n(), +1),
              .best = 0};
  // pending_abs[d]: edges (u,v) with v >= d are still undecided there.
  for (int d = g.n() - 1; d >= 0; --d) {
    st.pending_abs[d] = st.pending_abs[d + 1];
    for (const Edge& e : g.edges())
      if (e.v == d) st.pending_abs[d] += e.w < 0 ? -e.w : e.w;
  }
  if (time_limit)
    st.deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      *time_limit);
  // Empty cut (all +1) is always feasible, so best starts at 0 with the
  // pruning rule "bound <= best" still admitting an improving witness.
  if (g.n() > 0) st.dfs(0, 0);

  ExactResult res;
  res.method = ExactMethod::branch_and_bound;
  res.optimum = st.best;
  res.witness = st.best_x;
  res.nodes_explored = st.nodes;
  res.optimal = !st.timed_out;
  return res;
}

}  // namespace maxcut
