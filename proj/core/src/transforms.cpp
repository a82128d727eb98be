#include "maxcut/transforms.hpp"

namespace maxcut {

std::int64_t QuboInstance::objective(const std::vector<std::int8_t>& y) const {
  if (static_cast<int>(y.size()) != n_)
    throw InvalidArgument("assignment length does not match QUBO dimension");
  std::int64_t acc = 0;
  for (int i = 0; i < n_; ++i) {
    if (!y[i]) continue;
    std::int64_t row = 0;
    for (int j = 0; j < n_; ++j)
      if (y[j]) row += (*this)(i, j);
    acc += row;
  }
  return acc;
}

std::int64_t ising_energy(const IsingInstance& inst, const CutAssignment& s) {
  if (static_cast<int>(s.size()) != inst.n())
    throw InvalidArgument("spin vector length does not match Ising dimension");
  std::int64_t pair_sum = 0;  // sum over i<j, so the 1/2 is already applied
  for (int i = 0; i < inst.n(); ++i)
    for (int j = i + 1; j < inst.n(); ++j)
      pair_sum += inst.coupling(i, j) * s[i] * s[j];
  std::int64_t field_sum = 0;
  for (int i = 0; i < inst.n(); ++i) field_sum += inst.field(i) * s[i];
  return pair_sum + field_sum;
}

TransformResult<Graph> ising_to_maxcut(const IsingInstance& inst) {
  const int n = inst.n();
  std::vector<Edge> edges;
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    if (inst.field(i) != 0) edges.push_back({0, i + 1, inst.field(i)});
    total += inst.field(i);
    for (int j = i + 1; j < n; ++j) {
      if (inst.coupling(i, j) != 0)
        edges.push_back({i + 1, j + 1, inst.coupling(i, j)});
      total += inst.coupling(i, j);
    }
  }
  return {Graph(n + 1, std::move(edges)), total, 1, 2};
}

TransformResult<IsingInstance> maxcut_to_ising(const Graph& g) {
  IsingInstance inst(g.n());
  for (const Edge& e : g.edges()) inst.set_coupling(e.u, e.v, e.w);
  return {std::move(inst), g.total_weight(), 1, 2};
}

TransformResult<QuboInstance> maxcut_to_qubo(const Graph& g) {
  if (g.n() < 2)
    throw InvalidArgument("maxcut_to_qubo needs at least two vertices");
  // Variables y_1..y_{n-1}; vertex 0 is fixed to +1. Then
  //   cut(x) = sum_i d_i y_i - 2 sum_{i<j} a_ij y_i y_j
  // and y^T Q y = -cut with Q_ii = -d_i, Q_ij = a_ij (i,j >= 1).
  QuboInstance q(g.n() - 1);
  for (int v = 1; v < g.n(); ++v) q.set(v - 1, v - 1, -g.weighted_degree(v));
  for (const Edge& e : g.edges())
    if (e.u >= 1) q.set(e.u - 1, e.v - 1, e.w);
  return {std::move(q), 0, 1, 1};
}

TransformResult<Graph> qubo_to_maxcut(const QuboInstance& q) {
  const int n = q.n();
  // 4 * y^T Q y = (S + tr) + sum_{u<v} a_uv x_u x_v with
  //   a_{0,i+1} = -2 * rowsum_i,  a_{i+1,j+1} = 2 * Q_ij,
  // and the constant cancels against the graph's total weight, leaving
  // the pointwise identity 4 * qubo(y) == -2 * cut(x).
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    std::int64_t row = 0;
    for (int j = 0; j < n; ++j) row += q(i, j);
    if (row != 0) edges.push_back({0, i + 1, -2 * row});
    for (int j = i + 1; j < n; ++j)
      if (q(i, j) != 0) edges.push_back({i + 1, j + 1, 2 * q(i, j)});
  }
  return {Graph(n + 1, std::move(edges)), 0, 4, 2};
}

CutAssignment embed_spins_with_gauge(const CutAssignment& s) {
  CutAssignment x;
  x.reserve(s.size() + 1);
  x.push_back(+1);
  x.insert(x.end(), s.begin(), s.end());
  return x;
}

std::vector<std::int8_t> maxcut_assignment_to_qubo(const CutAssignment& x) {
  if (x.empty()) throw InvalidArgument("empty assignment");
  std::vector<std::int8_t> y(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i)
    y[i - 1] = (x[0] != x[i]) ? 1 : 0;
  return y;
}

CutAssignment qubo_assignment_to_maxcut(const std::vector<std::int8_t>& y) {
  CutAssignment x;
  x.reserve(y.size() + 1);
  x.push_back(+1);
  for (std::int8_t b : y) x.push_back(b ? -1 : +1);
  return x;
}

}  // namespace maxcut
