#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>

#include "maxcut/graph.hpp"
#include "maxcut/transforms.hpp"

namespace maxcut {

/// Parse failure with file and line context in what().
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class LaplacianScale { full, quarter };  // L vs 1/4 L

/// Triangular serialization convention for the coupling dictionaries:
///   be_bqp: -1/4 L, lower triangle including the diagonal
///   gset:   -L, strictly lower triangle
enum class DictConvention { be_bqp, gset };

/// Lower-triangular minimization-objective map read from / written to a
/// dictionary file; keys are 0-indexed (row, col) with row >= col.
struct CouplingDict {
  DictConvention convention = DictConvention::gset;
  std::map<std::pair<int, int>, std::int64_t> entries;
};

// Edge-list instance files: header "n m", then m lines "i j w",
// 1-indexed. An unweighted variant "i j" is not accepted.
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

// Dense Laplacian matrix files, one whitespace-separated row per line.
// Reading validates symmetry and zero row sums (scaled rows also sum to
// zero). Writing at quarter scale requires every entry of L to be
// divisible by 4.
void write_laplacian(const Graph& g, LaplacianScale scale,
                     const std::filesystem::path& path);
LaplacianMatrix read_laplacian(const std::filesystem::path& path,
                               LaplacianScale scale = LaplacianScale::full);

// Coupling dictionary files, one "(i, j): w" entry per line, sorted by
// (i, j); the reader also accepts the whole dictionary brace-wrapped on
// a single line.
void write_coupling_dict(const Graph& g, DictConvention convention,
                         const std::filesystem::path& path);
CouplingDict read_coupling_dict(const std::filesystem::path& path,
                                DictConvention convention);
/// Reconstructs the graph underlying a dictionary (inverts the stated
/// convention; be_bqp diagonal entries are checked for consistency).
Graph coupling_dict_to_graph(const CouplingDict& dict, int n);

// Cut-vector files: one spin per line, +-1 or 0/1 (0 maps to -1).
CutAssignment read_cut_vector(const std::filesystem::path& path, int n);
void write_cut_vector(const CutAssignment& x,
                      const std::filesystem::path& path);

// Optimum-value files: a single integer.
std::int64_t read_opt_value(const std::filesystem::path& path);
void write_opt_value(std::int64_t value, const std::filesystem::path& path);

// Sparse QUBO files: header "n m", then m lines "i j q" with 1-indexed
// i <= j setting Q_ij = Q_ji = q.
QuboInstance read_qubo_sparse(const std::filesystem::path& path);
void write_qubo_sparse(const QuboInstance& q,
                       const std::filesystem::path& path);

}  // namespace maxcut
