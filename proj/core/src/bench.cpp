#include "maxcut/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "maxcut/io.hpp"

namespace maxcut {

Dataset dataset_from_string(const std::string& s) {
  if (s == "be") return Dataset::be;
  if (s == "bqp") return Dataset::bqp;
  if (s == "G" || s == "g" || s == "gset") return Dataset::G;
  if (s == "custom") return Dataset::custom;
  throw InvalidArgument("unknown dataset '" + s + "'");
}

std::string dataset_to_string(Dataset d) {
  switch (d) {
    case Dataset::be: return "be";
    case Dataset::bqp: return "bqp";
    case Dataset::G: return "G";
    case Dataset::custom: return "custom";
  }
  return "custom";
}

std::int64_t table_value_to_cut(Dataset d, std::int64_t v) {
  return (d == Dataset::be || d == Dataset::bqp) ? -v : v;
}

std::int64_t cut_to_table_value(Dataset d, std::int64_t cut) {
  return (d == Dataset::be || d == Dataset::bqp) ? -cut : cut;
}

std::map<std::string, SolverSummary> summarize(
    const std::map<std::string, std::map<std::string, std::int64_t>>& values) {
  if (values.empty()) throw InvalidArgument("summarize: no instances");
  std::map<std::string, SolverSummary> out;
  for (const auto& [instance, by_solver] : values) {
    if (by_solver.empty())
      throw InvalidArgument("summarize: instance '" + instance +
                            "' has no values");
    std::int64_t best = by_solver.begin()->second;
    std::int64_t worst = by_solver.begin()->second;
    for (const auto& [_, v] : by_solver) {
      best = std::max(best, v);
      worst = std::min(worst, v);
    }
    int n_best = 0;
    for (const auto& [_, v] : by_solver)
      if (v == best) ++n_best;
    for (const auto& [solver, v] : by_solver) {
      SolverSummary& s = out[solver];
      if (v == best) {
        ++s.best;
        if (n_best == 1) ++s.only;
      }
      if (v == worst && worst < best) ++s.worst;
    }
  }
  return out;
}

namespace {

SolveResult run_solver(const Graph& g, const SolverConfig& cfg,
                       std::uint64_t seed_offset) {
  switch (cfg.kind) {
    case SolverConfig::Kind::exact: {
      const auto t0 = std::chrono::steady_clock::now();
      ExactResult er = brute_force(g);
      SolveResult sr;
      sr.best_value = er.optimum;
      sr.best_assignment = std::move(er.witness);
      sr.solver_id = cfg.id;
      sr.wall_time_s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
      return sr;
    }
    case SolverConfig::Kind::branch_and_bound: {
      const auto t0 = std::chrono::steady_clock::now();
      std::optional<std::chrono::duration<double>> limit;
      if (cfg.time_limit_s)
        limit = std::chrono::duration<double>(*cfg.time_limit_s);
      ExactResult er = branch_and_bound(g, limit);
      SolveResult sr;
      sr.best_value = er.optimum;
      sr.best_assignment = std::move(er.witness);
      sr.solver_id = cfg.id;
      sr.wall_time_s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
      return sr;
    }
    case SolverConfig::Kind::sa: {
      SaRunConfig rc = cfg.sa;
      rc.seed ^= seed_offset;  // stable per-instance stream
      SolveResult sr = sa_solve(g, rc);
      sr.solver_id = cfg.id;
      return sr;
    }
  }
  throw InvalidArgument("unknown solver kind");
}

// FNV-1a; stable across runs and toolchains, unlike std::hash.
std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_time(double t) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(3);
  ss << t;
  return ss.str();
}

}  // namespace

BenchReport run_bench(const std::vector<InstanceRecord>& manifest,
                      const std::vector<SolverConfig>& solvers,
                      const std::vector<ExternalResult>& external,
                      int parallelism) {
  if (parallelism < 1) throw InvalidArgument("parallelism must be >= 1");
  std::set<std::string> known;
  for (const auto& rec : manifest) known.insert(rec.name);
  for (const auto& ext : external)
    if (!known.count(ext.instance))
      throw InvalidArgument("external result references unknown instance '" +
                            ext.instance + "'");

  // Graphs are needed for local solvers and for external cut-vector checks.
  std::vector<std::optional<Graph>> graphs(manifest.size());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    index[manifest[i].name] = i;
    bool need = !solvers.empty();
    for (const auto& ext : external)
      if (ext.instance == manifest[i].name && ext.cut_vector) need = true;
    if (need) {
      if (manifest[i].path.empty())
        throw InvalidArgument("instance '" + manifest[i].name +
                              "' has no file but a solver run requires one");
      graphs[i] = read_edge_list(manifest[i].path);
    }
  }

  // instance index x solver index jobs, results in fixed slots so the
  // report is independent of scheduling.
  struct Job {
    std::size_t inst;
    std::size_t solver;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < manifest.size(); ++i)
    for (std::size_t s = 0; s < solvers.size(); ++s) jobs.push_back({i, s});
  std::vector<SolveResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      try {
        const Job& job = jobs[k];
        results[k] = run_solver(*graphs[job.inst], solvers[job.solver],
                                stable_hash(manifest[job.inst].name));
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int workers = static_cast<int>(std::min<std::size_t>(
        parallelism, std::max<std::size_t>(jobs.size(), 1)));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);

  BenchReport report;
  std::map<std::string, std::map<std::string, std::int64_t>> values;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const InstanceRecord& rec = manifest[jobs[k].inst];
    BenchRow row;
    row.instance = rec.name;
    row.dataset = rec.dataset;
    row.solver_id = solvers[jobs[k].solver].id;
    row.cut = results[k].best_value;
    row.time_s = results[k].wall_time_s;
    if (rec.best_known) row.gap_to_best_known = *rec.best_known - row.cut;
    values[row.instance][row.solver_id] = row.cut;
    report.rows.push_back(std::move(row));
  }
  for (const auto& ext : external) {
    const InstanceRecord& rec = manifest[index.at(ext.instance)];
    BenchRow row;
    row.instance = ext.instance;
    row.dataset = rec.dataset;
    row.solver_id = ext.solver_id;
    row.cut = table_value_to_cut(rec.dataset, ext.value);
    row.time_s = ext.time_s;
    if (rec.best_known) row.gap_to_best_known = *rec.best_known - row.cut;
    if (ext.cut_vector) {
      const Graph& g = *graphs.at(index.at(ext.instance));
      const CutAssignment x = read_cut_vector(*ext.cut_vector, g.n());
      if (cut_value(g, x) != row.cut)
        throw InvalidArgument("external cut vector for '" + ext.instance +
                              "' is inconsistent with its declared value");
    }
    values[row.instance][row.solver_id] = row.cut;
    report.rows.push_back(std::move(row));
  }
  if (!values.empty()) report.summary = summarize(values);
  return report;
}

std::vector<InstanceRecord> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  std::vector<InstanceRecord> out;
  const auto base = path.parent_path();
  for (const auto& item : j.at("instances")) {
    InstanceRecord rec;
    rec.name = item.at("name").get<std::string>();
    if (item.contains("path")) {
      std::filesystem::path p = item.at("path").get<std::string>();
      rec.path = p.is_absolute() ? p : base / p;
    }
    if (item.contains("dataset"))
      rec.dataset = dataset_from_string(item.at("dataset").get<std::string>());
    if (item.contains("n")) rec.n = item.at("n").get<int>();
    if (item.contains("best_known"))
      rec.best_known = table_value_to_cut(
          rec.dataset, item.at("best_known").get<std::int64_t>());
    if (item.contains("optimum_certified"))
      rec.optimum_certified = item.at("optimum_certified").get<bool>();
    if (rec.optimum_certified && !rec.best_known)
      throw ParseError(path.string() + ": instance '" + rec.name +
                       "' is marked certified but has no best_known value");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ExternalResult> read_external_results(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<ExternalResult> out;
  std::string line;
  int lineno = 0;
  const auto base = path.parent_path();
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#' ||
        line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    ExternalResult rec;
    bool have_instance = false, have_solver = false, have_value = false;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos)
        throw ParseError(path.string() + ":" + std::to_string(lineno) +
                         ": expected key=value, got '" + tok + "'");
      const std::string key = tok.substr(0, eq);
      const std::string val = tok.substr(eq + 1);
      if (key == "instance") {
        rec.instance = val;
        have_instance = true;
      } else if (key == "solver") {
        rec.solver_id = val;
        have_solver = true;
      } else if (key == "value") {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc() || p != val.data() + val.size())
          throw ParseError(path.string() + ":" + std::to_string(lineno) +
                           ": bad value '" + val + "'");
        rec.value = v;
        have_value = true;
      } else if (key == "time_s") {
        rec.time_s = std::stod(val);
      } else if (key == "cut_vector") {
        std::filesystem::path p = val;
        rec.cut_vector = p.is_absolute() ? p : base / p;
      } else {
        throw ParseError(path.string() + ":" + std::to_string(lineno) +
                         ": unknown field '" + key + "'");
      }
    }
    if (!have_instance || !have_solver || !have_value)
      throw ParseError(path.string() + ":" + std::to_string(lineno) +
                       ": record needs instance, solver and value fields");
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_report_csv(const BenchReport& report, std::ostream& out,
                      bool include_times) {
  out << (include_times ? "instance,dataset,solver,value,cut,time_s,gap\n"
                        : "instance,dataset,solver,value,cut,gap\n");
  for (const BenchRow& r : report.rows) {
    out << csv_quote(r.instance) << ',' << dataset_to_string(r.dataset) << ','
        << csv_quote(r.solver_id) << ','
        << cut_to_table_value(r.dataset, r.cut) << ',' << r.cut << ',';
    if (include_times) {
      if (r.time_s) out << format_time(*r.time_s);
      out << ',';
    }
    if (r.gap_to_best_known) out << *r.gap_to_best_known;
    out << '\n';
  }
  out << "\nsolver,best,only,worst\n";
  for (const auto& [solver, s] : report.summary)
    out << csv_quote(solver) << ',' << s.best << ',' << s.only << ','
        << s.worst << '\n';
}

void write_report_markdown(const BenchReport& report, std::ostream& out,
                           bool include_times) {
  if (include_times) {
    out << "| instance | dataset | solver | value | time (s) | gap |\n";
    out << "|---|---|---|---:|---:|---:|\n";
  } else {
    out << "| instance | dataset | solver | value | gap |\n";
    out << "|---|---|---|---:|---:|\n";
  }
  for (const BenchRow& r : report.rows) {
    out << "| " << r.instance << " | " << dataset_to_string(r.dataset)
        << " | " << r.solver_id << " | "
        << cut_to_table_value(r.dataset, r.cut) << " | ";
    if (include_times) {
      if (r.time_s) out << format_time(*r.time_s);
      out << " | ";
    }
    if (r.gap_to_best_known) out << *r.gap_to_best_known;
    out << " |\n";
  }
  out << "\n| solver | best | only | worst |\n|---|---:|---:|---:|\n";
  for (const auto& [solver, s] : report.summary)
    out << "| " << solver << " | " << s.best << " | " << s.only << " | "
        << s.worst << " |\n";
}

bool ValidationReport::all_ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ValidationEntry& e) { return e.ok; });
}

ValidationReport validate_dataset(const std::filesystem::path& dir) {
  ValidationReport report;
  std::vector<std::filesystem::path> value_files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (name.size() > 14 && name.ends_with("_opt_value.txt"))
      value_files.push_back(entry.path());
  }
  std::sort(value_files.begin(), value_files.end());
  for (const auto& vf : value_files) {
    std::string base = vf.filename().string();
    base.resize(base.size() - std::string("_opt_value.txt").size());
    ValidationEntry e;
    e.name = base;
    try {
      std::filesystem::path instance;
      for (const char* suffix : {".sparse.mc", ".mc", ".txt", ""}) {
        auto candidate = dir / (base + suffix);
        if (std::filesystem::is_regular_file(candidate)) {
          instance = candidate;
          break;
        }
      }
      if (instance.empty())
        throw ParseError("no instance file found for '" + base + "'");
      const Graph g = read_edge_list(instance);
      const CutAssignment x =
          read_cut_vector(dir / (base + "_opt_cut.txt"), g.n());
      const std::int64_t declared = read_opt_value(vf);
      const std::int64_t magnitude = declared < 0 ? -declared : declared;
      const std::int64_t cut = cut_value(g, x);
      if (cut == magnitude) {
        e.ok = true;
        e.message = "cut " + std::to_string(cut) + " matches";
      } else {
        e.message = "cut " + std::to_string(cut) + " != declared " +
                    std::to_string(declared);
      }
    } catch (const std::exception& ex) {
      e.message = ex.what();
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace maxcut
