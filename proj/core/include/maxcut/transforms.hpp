#pragma once

#include <cstdint>
#include <vector>

#include "maxcut/graph.hpp"

namespace maxcut {

/// QUBO: minimize y^T Q y over y in {0,1}^n, Q symmetric (diagonal allowed).
class QuboInstance {
 public:
  QuboInstance() = default;
  explicit QuboInstance(int n) : n_(n), q_(std::size_t(n) * n, 0) {}

  int n() const { return n_; }
  std::int64_t operator()(int i, int j) const {
    return q_[std::size_t(i) * n_ + j];
  }
  /// Sets Q_ij and Q_ji.
  void set(int i, int j, std::int64_t v) {
    q_[std::size_t(i) * n_ + j] = v;
    q_[std::size_t(j) * n_ + i] = v;
  }

  std::int64_t objective(const std::vector<std::int8_t>& y) const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> q_;
};

/// Ising: minimize H = 1/2 sum_ij J_ij s_i s_j + sum_i h_i s_i over
/// s in {-1,+1}^n. J symmetric with zero diagonal, so H is always an
/// integer despite the 1/2.
class IsingInstance {
 public:
  IsingInstance() = default;
  explicit IsingInstance(int n)
      : n_(n), j_(std::size_t(n) * n, 0), h_(n, 0) {}

  int n() const { return n_; }
  std::int64_t coupling(int i, int j) const {
    return j_[std::size_t(i) * n_ + j];
  }
  void set_coupling(int i, int j, std::int64_t v) {
    if (i == j) throw InvalidArgument("Ising coupling diagonal must stay zero");
    j_[std::size_t(i) * n_ + j] = v;
    j_[std::size_t(j) * n_ + i] = v;
  }
  std::int64_t field(int i) const { return h_[i]; }
  void set_field(int i, std::int64_t v) { h_[i] = v; }

 private:
  int n_ = 0;
  std::vector<std::int64_t> j_;
  std::vector<std::int64_t> h_;
};

std::int64_t ising_energy(const IsingInstance& inst, const CutAssignment& s);

/// Outcome of a formulation change. The objective identity, which holds
/// pointwise for every assignment mapped by the documented map (not just
/// at the optimum), is
///
///   source_mult * f_source(a) == offset - target_mult * f_target(map(a))
///
/// where f_source / f_target are the native objectives (Ising/QUBO energy
/// to be minimized, cut value to be maximized).
template <typename TargetT>
struct TransformResult {
  TargetT instance;
  std::int64_t offset = 0;
  std::int64_t source_mult = 1;
  std::int64_t target_mult = 1;
};

/// Homogenizes the field term with a gauge spin at vertex 0: edge
/// (0, i+1) carries weight h_i, edge (i+1, j+1) carries J_ij.
/// Identity: H(s) == offset - 2 * cut(g, (+1, s)).
TransformResult<Graph> ising_to_maxcut(const IsingInstance& inst);

/// J = A, h = 0 on the same vertex set.
/// Identity: H(x) == offset - 2 * cut(g, x).
TransformResult<IsingInstance> maxcut_to_ising(const Graph& g);

/// Gauge vertex 0, binary variables for vertices 1..n-1 via
/// y_i = (1 - x_0 x_i) / 2.  Identity: cut(g, x) == -qubo(y).
TransformResult<QuboInstance> maxcut_to_qubo(const Graph& g);

/// Substitution y_i = (1 - x_0 x_{i+1}) / 2 with gauge vertex 0; weights
/// are uniformly doubled to stay integral.
/// Identity: 4 * qubo(y) == -2 * cut(g, x).
TransformResult<Graph> qubo_to_maxcut(const QuboInstance& q);

// Assignment maps matching the identities above.
CutAssignment embed_spins_with_gauge(const CutAssignment& s);  // (+1, s...)
std::vector<std::int8_t> maxcut_assignment_to_qubo(const CutAssignment& x);
CutAssignment qubo_assignment_to_maxcut(const std::vector<std::int8_t>& y);

}  // namespace maxcut
