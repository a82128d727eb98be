// Command-line harness: dataset conversion, solver runs, benchmark
// comparison and dataset validation.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "maxcut/bench.hpp"
#include "maxcut/io.hpp"
#include "maxcut/transforms.hpp"

namespace {

using namespace maxcut;

Graph load_graph(const std::filesystem::path& in, const std::string& format,
                 int n_hint) {
  if (format == "edgelist") return read_edge_list(in);
  if (format == "dict-gset" || format == "dict-bebqp") {
    const auto conv = format == "dict-gset" ? DictConvention::gset
                                            : DictConvention::be_bqp;
    CouplingDict d = read_coupling_dict(in, conv);
    int n = n_hint;
    if (n == 0)
      for (const auto& [key, _] : d.entries) n = std::max(n, key.first + 1);
    return coupling_dict_to_graph(d, n);
  }
  if (format == "qubo-sparse") {
    const auto tr = qubo_to_maxcut(read_qubo_sparse(in));
    return tr.instance;
  }
  throw InvalidArgument("cannot read graphs from format '" + format + "'");
}

int cmd_convert(const std::filesystem::path& in, const std::string& from,
                const std::filesystem::path& out, const std::string& to,
                int n_hint) {
  const Graph g = load_graph(in, from, n_hint);
  if (to == "edgelist")
    write_edge_list(g, out);
  else if (to == "laplacian")
    write_laplacian(g, LaplacianScale::full, out);
  else if (to == "quarter-laplacian")
    write_laplacian(g, LaplacianScale::quarter, out);
  else if (to == "dict-gset")
    write_coupling_dict(g, DictConvention::gset, out);
  else if (to == "dict-bebqp")
    write_coupling_dict(g, DictConvention::be_bqp, out);
  else if (to == "qubo-sparse")
    write_qubo_sparse(maxcut_to_qubo(g).instance, out);
  else
    throw InvalidArgument("unknown target format '" + to + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-Cut solver suite and benchmark harness"};
  app.require_subcommand(1);

  // convert
  std::string cv_in, cv_out, cv_from = "edgelist", cv_to = "edgelist";
  int cv_n = 0;
  auto* convert = app.add_subcommand("convert", "convert between file formats");
  convert->add_option("--in", cv_in, "input file")->required();
  convert->add_option("--out", cv_out, "output file")->required();
  convert
      ->add_option("--from", cv_from,
                   "edgelist|dict-gset|dict-bebqp|qubo-sparse")
      ->check(CLI::IsMember(
          {"edgelist", "dict-gset", "dict-bebqp", "qubo-sparse"}));
  convert
      ->add_option("--to", cv_to,
                   "edgelist|laplacian|quarter-laplacian|dict-gset|dict-bebqp|"
                   "qubo-sparse")
      ->check(CLI::IsMember({"edgelist", "laplacian", "quarter-laplacian",
                             "dict-gset", "dict-bebqp", "qubo-sparse"}));
  convert->add_option("--n", cv_n,
                      "vertex count hint for dictionary inputs whose last "
                      "vertices are isolated");

  // solve
  std::string sv_in, sv_solver = "sa", sv_preset = "sa2", sv_witness;
  std::uint64_t sv_seed = 0;
  int sv_restarts = 1;
  double sv_time_limit = 0;
  double sv_t0 = 0, sv_decrement = 0, sv_min_temp = 0;
  auto* solve = app.add_subcommand("solve", "solve a single instance");
  solve->add_option("--in", sv_in, "edge-list instance file")->required();
  solve->add_option("--solver", sv_solver, "exact|bb|sa")
      ->check(CLI::IsMember({"exact", "bb", "sa"}));
  solve->add_option("--preset", sv_preset, "sa1|sa2")
      ->check(CLI::IsMember({"sa1", "sa2"}));
  solve->add_option("--seed", sv_seed, "RNG seed");
  solve->add_option("--restarts", sv_restarts, "independent SA restarts")
      ->check(CLI::PositiveNumber);
  solve->add_option("--time-limit", sv_time_limit,
                    "branch-and-bound time limit in seconds");
  solve->add_option("--initial-temp", sv_t0, "override schedule T0");
  solve->add_option("--decrement", sv_decrement, "override cooling decrement");
  solve->add_option("--min-temp", sv_min_temp, "override stopping temperature");
  solve->add_option("--write-cut", sv_witness,
                    "write the best cut vector to this file");

  // bench
  std::string bn_manifest, bn_out_format = "csv", bn_out_file;
  std::vector<std::string> bn_external;
  std::vector<std::string> bn_solvers;
  std::uint64_t bn_seed = 0;
  int bn_restarts = 1, bn_jobs = 1;
  auto* bench = app.add_subcommand("bench", "run the comparison harness");
  bench->add_option("--manifest", bn_manifest, "instance manifest (JSON)")
      ->required();
  bench->add_option("--external", bn_external,
                    "external results file(s), key=value lines");
  bench->add_option("--solver", bn_solvers,
                    "local solver(s): exact|bb|sa1|sa2");
  bench->add_option("--seed", bn_seed, "base RNG seed for local SA runs");
  bench->add_option("--restarts", bn_restarts, "SA restarts per instance")
      ->check(CLI::PositiveNumber);
  bench->add_option("--jobs", bn_jobs, "parallel worker count")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", bn_out_format, "report format: csv|md")
      ->check(CLI::IsMember({"csv", "md"}));
  bench->add_option("--out-file", bn_out_file,
                    "write the report here instead of stdout");
  bool bn_no_times = false;
  bench->add_flag("--no-times", bn_no_times,
                  "omit the wall-time column (byte-reproducible reports)");

  // validate
  std::string vd_dir;
  auto* validate =
      app.add_subcommand("validate", "check (instance, cut, value) triples");
  validate->add_option("dir", vd_dir, "dataset directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*convert) return cmd_convert(cv_in, cv_from, cv_out, cv_to, cv_n);

    if (*solve) {
      const Graph g = read_edge_list(sv_in);
      SolveResult result;
      if (sv_solver == "exact") {
        const auto t0 = std::chrono::steady_clock::now();
        ExactResult er = brute_force(g);
        result.best_value = er.optimum;
        result.best_assignment = std::move(er.witness);
        result.solver_id = "exact";
        result.wall_time_s = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        std::cout << "optimum " << result.best_value << " (certified)\n";
      } else if (sv_solver == "bb") {
        const auto t0 = std::chrono::steady_clock::now();
        std::optional<std::chrono::duration<double>> limit;
        if (sv_time_limit > 0)
          limit = std::chrono::duration<double>(sv_time_limit);
        ExactResult er = branch_and_bound(g, limit);
        result.best_value = er.optimum;
        result.best_assignment = std::move(er.witness);
        result.solver_id = "bb";
        result.wall_time_s = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        std::cout << (er.optimal ? "optimum " : "best-so-far ")
                  << result.best_value << (er.optimal ? " (certified)" : "")
                  << ", nodes " << er.nodes_explored << "\n";
      } else {
        SaRunConfig cfg;
        cfg.schedule = sv_preset == "sa1" ? sa1_preset() : sa2_preset();
        if (sv_t0 > 0) cfg.schedule.initial_temp = sv_t0;
        if (sv_decrement > 0) cfg.schedule.decrement = sv_decrement;
        if (sv_min_temp > 0) cfg.schedule.min_temp = sv_min_temp;
        cfg.seed = sv_seed;
        cfg.restarts = sv_restarts;
        result = sa_solve(g, cfg);
        std::cout << "best " << result.best_value << ", moves "
                  << result.moves_accepted << "/" << result.moves_attempted
                  << " accepted\n";
      }
      std::cout << "time_s " << result.wall_time_s << "\n";
      if (!sv_witness.empty())
        write_cut_vector(result.best_assignment, sv_witness);
      return 0;
    }

    if (*bench) {
      const auto manifest = read_manifest(bn_manifest);
      std::vector<ExternalResult> external;
      for (const auto& f : bn_external) {
        auto recs = read_external_results(f);
        external.insert(external.end(), recs.begin(), recs.end());
      }
      std::vector<SolverConfig> solvers;
      for (const auto& s : bn_solvers) {
        SolverConfig cfg;
        cfg.id = s;
        if (s == "exact") {
          cfg.kind = SolverConfig::Kind::exact;
        } else if (s == "bb") {
          cfg.kind = SolverConfig::Kind::branch_and_bound;
        } else if (s == "sa1" || s == "sa2") {
          cfg.kind = SolverConfig::Kind::sa;
          cfg.sa.schedule = s == "sa1" ? sa1_preset() : sa2_preset();
          cfg.sa.seed = bn_seed;
          cfg.sa.restarts = bn_restarts;
        } else {
          throw InvalidArgument("unknown solver '" + s + "'");
        }
        solvers.push_back(std::move(cfg));
      }
      const BenchReport report =
          run_bench(manifest, solvers, external, bn_jobs);
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!bn_out_file.empty()) {
        file.open(bn_out_file);
        if (!file) throw ParseError("cannot open " + bn_out_file);
        out = &file;
      }
      if (bn_out_format == "csv")
        write_report_csv(report, *out, !bn_no_times);
      else
        write_report_markdown(report, *out, !bn_no_times);
      return 0;
    }

    if (*validate) {
      const ValidationReport report = validate_dataset(vd_dir);
      for (const auto& e : report.entries)
        std::cout << (e.ok ? "ok   " : "FAIL ") << e.name << ": " << e.message
                  << "\n";
      if (report.entries.empty()) {
        std::cerr << "no (instance, opt_cut, opt_value) triples found in "
                  << vd_dir << "\n";
        return 1;
      }
      return report.all_ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
