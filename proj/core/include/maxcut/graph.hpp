#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxcut {

/// Thrown when inputs violate a documented precondition (dimension
/// mismatch, index out of range, malformed instance).
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int u = 0;  // u < v always
  int v = 0;
  std::int64_t w = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Spin vector x in {-1,+1}^n encoding a bipartition: x[i] == -1 puts
/// vertex i on the first side.
using CutAssignment = std::vector<std::int8_t>;

/// Simple weighted undirected graph. Immutable after construction;
/// edge list and adjacency lists describe the same edge multiset.
class Graph {
 public:
  Graph() = default;
  /// Edges may be given in any order and with endpoints in either
  /// orientation; they are normalized to u < v and sorted. Self-loops,
  /// duplicate pairs, zero weights and out-of-range indices are rejected.
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  struct Neighbor {
    int to;
    std::int64_t w;
  };
  std::span<const Neighbor> neighbors(int v) const {
    return {adj_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }

  /// Sum of all edge weights.
  std::int64_t total_weight() const { return total_weight_; }
  /// Weighted degree sum at v (row sum of the adjacency matrix).
  std::int64_t weighted_degree(int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Neighbor> adj_;
  std::vector<int> offsets_{0};
  std::int64_t total_weight_ = 0;
};

/// Dense symmetric Laplacian L = Diag(Ae) - A; rows sum to zero.
class LaplacianMatrix {
 public:
  LaplacianMatrix() = default;
  explicit LaplacianMatrix(int n) : n_(n), entries_(std::size_t(n) * n, 0) {}

  int n() const { return n_; }
  std::int64_t operator()(int i, int j) const {
    return entries_[std::size_t(i) * n_ + j];
  }
  std::int64_t& at(int i, int j) { return entries_[std::size_t(i) * n_ + j]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  /// Symmetry + zero row sums; throws InvalidArgument on violation.
  void validate() const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Sum of weights of edges whose endpoints carry opposite spins.
std::int64_t cut_value(const Graph& g, const CutAssignment& x);

LaplacianMatrix laplacian(const Graph& g);

/// x^T L x; equals 4 * cut_value(g, x) when L = laplacian(g).
std::int64_t quad_form(const LaplacianMatrix& L, const CutAssignment& x);

/// Change in cut value caused by flipping spin i: x_i * sum_j a_ij x_j.
/// O(deg(i)).
std::int64_t cut_delta(const Graph& g, const CutAssignment& x, int i);

}  // namespace maxcut
