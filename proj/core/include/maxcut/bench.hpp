#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "maxcut/exact.hpp"
#include "maxcut/sa.hpp"

namespace maxcut {

enum class Dataset { be, bqp, G, custom };

Dataset dataset_from_string(const std::string& s);
std::string dataset_to_string(Dataset d);

// be/bqp files encode a minimization, so their published values are the
// negated cut; G values are the cut itself.
std::int64_t table_value_to_cut(Dataset d, std::int64_t table_value);
std::int64_t cut_to_table_value(Dataset d, std::int64_t cut);

struct InstanceRecord {
  std::string name;
  std::filesystem::path path;  // may be empty when only external results run
  Dataset dataset = Dataset::custom;
  int n = 0;
  std::optional<std::int64_t> best_known;  // internal cut units
  bool optimum_certified = false;
};

/// One line of an external-results file; `value` is in the source
/// table's sign convention.
struct ExternalResult {
  std::string instance;
  std::string solver_id;
  std::int64_t value = 0;
  std::optional<double> time_s;
  std::optional<std::filesystem::path> cut_vector;
};

struct SolverConfig {
  enum class Kind { exact, branch_and_bound, sa };
  std::string id;
  Kind kind = Kind::sa;
  SaRunConfig sa;
  std::optional<double> time_limit_s;  // branch_and_bound only
};

struct SolverSummary {
  int best = 0;
  int only = 0;
  int worst = 0;

  friend bool operator==(const SolverSummary&, const SolverSummary&) = default;
};

struct BenchRow {
  std::string instance;
  Dataset dataset = Dataset::custom;
  std::string solver_id;
  std::int64_t cut = 0;  // internal units; printed in table convention
  std::optional<double> time_s;
  std::optional<std::int64_t> gap_to_best_known;  // best_known - cut
};

struct BenchReport {
  std::vector<BenchRow> rows;  // manifest order, then solver column order
  std::map<std::string, SolverSummary> summary;
};

/// Table 5 tallies. `values` maps instance -> solver -> value (any
/// consistent sign; larger is better). Per instance: every solver at the
/// maximum scores "best", a unique maximum scores "only", and when the
/// minimum is strictly below the maximum every solver at the minimum
/// scores "worst". Solvers missing on an instance are excluded from that
/// instance's comparison.
std::map<std::string, SolverSummary> summarize(
    const std::map<std::string, std::map<std::string, std::int64_t>>& values);

/// Runs every local solver on every manifest instance (parallel across
/// jobs, deterministic output), merges external records, and tallies the
/// summary. External cut vectors, when given, are checked against the
/// declared value under the dataset's sign convention.
BenchReport run_bench(const std::vector<InstanceRecord>& manifest,
                      const std::vector<SolverConfig>& solvers,
                      const std::vector<ExternalResult>& external,
                      int parallelism = 1);

// Manifest (JSON) and external-results (key=value lines) loaders.
std::vector<InstanceRecord> read_manifest(const std::filesystem::path& path);
std::vector<ExternalResult> read_external_results(
    const std::filesystem::path& path);

// `include_times` drops the wall-time column; measured times vary run to
// run, so byte-reproducible reports need them off (externally supplied
// times are data and stay deterministic either way).
void write_report_csv(const BenchReport& report, std::ostream& out,
                      bool include_times = true);
void write_report_markdown(const BenchReport& report, std::ostream& out,
                           bool include_times = true);

struct ValidationEntry {
  std::string name;
  bool ok = false;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;
  bool all_ok() const;
};

/// Checks every (instance, opt_cut, opt_value) triple under `dir`:
/// cut_value(instance, vector) must equal the published magnitude.
/// Parse errors are reported per file, not thrown.
ValidationReport validate_dataset(const std::filesystem::path& dir);

}  // namespace maxcut
