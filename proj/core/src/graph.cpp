#include "maxcut/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace maxcut {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InvalidArgument("vertex count must be non-negative");
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v)
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n)
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") out of range for n=" +
                            std::to_string(n));
    if (e.w == 0)
      throw InvalidArgument("zero-weight edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ")");
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) {
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k - 1].u == edges_[k].u && edges_[k - 1].v == edges_[k].v)
      throw InvalidArgument("duplicate edge (" + std::to_string(edges_[k].u) +
                            "," + std::to_string(edges_[k].v) + ")");
  }

  std::vector<int> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
    total_weight_ += e.w;
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(edges_.size() * 2);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[cursor[e.u]++] = {e.v, e.w};
    adj_[cursor[e.v]++] = {e.u, e.w};
  }
}

std::int64_t Graph::weighted_degree(int v) const {
  std::int64_t d = 0;
  for (const Neighbor& nb : neighbors(v)) d += nb.w;
  return d;
}

void LaplacianMatrix::validate() const {
  for (int i = 0; i < n_; ++i) {
    std::int64_t row = 0;
    for (int j = 0; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i))
        throw InvalidArgument("Laplacian not symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
      row += (*this)(i, j);
    }
    if (row != 0)
      throw InvalidArgument("Laplacian row " + std::to_string(i) +
                            " does not sum to zero");
  }
}

std::int64_t cut_value(const Graph& g, const CutAssignment& x) {
  if (static_cast<int>(x.size()) != g.n())
    throw InvalidArgument("assignment length does not match vertex count");
  std::int64_t cut = 0;
  for (const Edge& e : g.edges())
    if (x[e.u] != x[e.v]) cut += e.w;
  return cut;
}

LaplacianMatrix laplacian(const Graph& g) {
  LaplacianMatrix L(g.n());
  for (const Edge& e : g.edges()) {
    L.at(e.u, e.v) -= e.w;
    L.at(e.v, e.u) -= e.w;
    L.at(e.u, e.u) += e.w;
    L.at(e.v, e.v) += e.w;
  }
  return L;
}

std::int64_t quad_form(const LaplacianMatrix& L, const CutAssignment& x) {
  if (static_cast<int>(x.size()) != L.n())
    throw InvalidArgument("assignment length does not match matrix dimension");
  std::int64_t acc = 0;
  for (int i = 0; i < L.n(); ++i) {
    std::int64_t row = 0;
    for (int j = 0; j < L.n(); ++j) row += L(i, j) * x[j];
    acc += row * x[i];
  }
  return acc;
}

std::int64_t cut_delta(const Graph& g, const CutAssignment& x, int i) {
  if (i < 0 || i >= g.n()) throw InvalidArgument("vertex index out of range");
  if (static_cast<int>(x.size()) != g.n())
    throw InvalidArgument("assignment length does not match vertex count");
  std::int64_t s = 0;
  for (const Graph::Neighbor& nb : g.neighbors(i)) s += nb.w * x[nb.to];
  return x[i] * s;
}

}  // namespace maxcut
