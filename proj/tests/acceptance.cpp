// Acceptance suite: one pass/fail line per criterion. Expects the
// repository's data directory as argv[1]. Optional environment:
//   MAXCUT_BE_DIR   directory with the be100 instance/cut/value triples
//   MAXCUT_GSET_DIR directory with G-set edge-list files (G1 etc.)
// When those directories are absent, criterion 4 falls back to its
// random-instance substitute and criterion 5 is skipped.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "maxcut/bench.hpp"
#include "maxcut/exact.hpp"
#include "maxcut/io.hpp"
#include "maxcut/sa.hpp"
#include "maxcut/transforms.hpp"
#include "test_util.hpp"

using namespace maxcut;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << detail << "\n";
  if (!ok) ++failures;
}

void skip(int criterion, const std::string& detail) {
  std::cout << "SKIP criterion " << criterion << ": " << detail << "\n";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// 1. brute_force == naive enumeration oracle, branch_and_bound agrees.
void criterion1() {
  std::mt19937_64 rng(20240101);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + int(rng() % 14);
    Graph g = testutil::random_graph(rng, n, -10, 10);
    const std::int64_t oracle = testutil::enumerate_max_cut(g);
    if (brute_force(g).optimum != oracle ||
        branch_and_bound(g).optimum != oracle) {
      report(1, false, "solver disagreement on random instance " +
                           std::to_string(t));
      return;
    }
    ++checked;
  }
  report(1, true,
         "brute force, branch-and-bound and naive enumeration agree on " +
             std::to_string(checked) + " random graphs (n <= 14)");
}

// 2. quad_form(laplacian(g), x) == 4 * cut_value(g, x).
void criterion2() {
  std::mt19937_64 rng(20240102);
  int pairs = 0;
  while (pairs < 10000) {
    const int n = 1 + int(rng() % 16);
    Graph g = testutil::random_graph(rng, n, -10, 10);
    LaplacianMatrix L = laplacian(g);
    for (int k = 0; k < 100 && pairs < 10000; ++k, ++pairs) {
      CutAssignment x = testutil::random_assignment(rng, n);
      if (quad_form(L, x) != 4 * cut_value(g, x)) {
        report(2, false, "Laplacian identity violated");
        return;
      }
    }
  }
  report(2, true, "x^T L x == 4 cut on 10000 random (g, x) pairs");
}

// 3. transform optimal-value identities and roundtrips, exhaustively.
void criterion3() {
  std::mt19937_64 rng(20240103);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + int(rng() % 10);
    QuboInstance q = testutil::random_qubo(rng, n);
    const auto tr = qubo_to_maxcut(q);
    if (tr.source_mult * testutil::enumerate_min_qubo(q) !=
        tr.offset - tr.target_mult * testutil::enumerate_max_cut(tr.instance)) {
      report(3, false, "QUBO -> Max-Cut identity violated");
      return;
    }
  }
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + int(rng() % 10);
    IsingInstance inst = testutil::random_ising(rng, n);
    const auto tr = ising_to_maxcut(inst);
    if (tr.source_mult * testutil::enumerate_min_ising(inst) !=
        tr.offset - tr.target_mult * testutil::enumerate_max_cut(tr.instance)) {
      report(3, false, "Ising -> Max-Cut identity violated");
      return;
    }
  }
  for (int t = 0; t < 25; ++t) {
    const int n = 2 + int(rng() % 9);
    Graph g = testutil::random_graph(rng, n);
    const auto qubo = maxcut_to_qubo(g);
    const auto back = qubo_to_maxcut(qubo.instance);
    // composed scaling: cut' == 2 * cut
    if (testutil::enumerate_max_cut(back.instance) !=
        2 * testutil::enumerate_max_cut(g)) {
      report(3, false, "Max-Cut <-> QUBO roundtrip lost the optimum");
      return;
    }
  }
  report(3, true,
         "transform identities exact on 50 QUBO + 50 Ising instances, "
         "roundtrips preserve optima");
}

// 4. be100 Table 1 reproduction, or the documented substitute.
void criterion4() {
  static const std::int64_t kBe100[] = {19412, 17290, 17565, 19125, 15868,
                                        17368, 18629, 18649, 13294, 15352};
  const char* be_dir = std::getenv("MAXCUT_BE_DIR");
  if (be_dir && fs::is_directory(be_dir)) {
    for (int i = 1; i <= 10; ++i) {
      const std::string base = "be100." + std::to_string(i);
      fs::path instance;
      for (const char* suffix : {".sparse.mc", ".mc", ".txt"})
        if (fs::is_regular_file(fs::path(be_dir) / (base + suffix)))
          instance = fs::path(be_dir) / (base + suffix);
      if (instance.empty()) {
        report(4, false, "missing instance file for " + base);
        return;
      }
      Graph g = read_edge_list(instance);
      SaRunConfig cfg;
      cfg.schedule = sa2_preset();
      cfg.seed = 1;
      cfg.restarts = 5;
      const std::int64_t got = sa_solve(g, cfg).best_value;
      if (got != kBe100[i - 1]) {
        report(4, false, base + ": SA2 found " + std::to_string(got) +
                             ", published optimum " +
                             std::to_string(kBe100[i - 1]));
        return;
      }
    }
    report(4, true, "SA2 (<=5 restarts) reaches the published optimum on all "
                    "10 be100 instances");
    return;
  }

  // substitute: SA2 matches brute force on >=95 of 100 random graphs
  std::mt19937_64 rng(20240104);
  int hits = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 6 + int(rng() % 9);
    Graph g = testutil::random_graph(rng, n, -10, 10);
    SaRunConfig cfg;
    cfg.schedule = sa2_preset();
    cfg.seed = t;
    if (sa_solve(g, cfg).best_value == brute_force(g).optimum) ++hits;
  }
  report(4, hits >= 95,
         "be100 files unavailable; substitute: SA2 matched brute force on " +
             std::to_string(hits) + "/100 random graphs (needs >= 95)");
}

// 5. G1 quality targets for SA1 and SA2.
void criterion5() {
  const char* gset_dir = std::getenv("MAXCUT_GSET_DIR");
  fs::path g1;
  for (const fs::path candidate :
       {gset_dir ? fs::path(gset_dir) / "G1" : fs::path(),
        gset_dir ? fs::path(gset_dir) / "G1.txt" : fs::path()})
    if (!candidate.empty() && fs::is_regular_file(candidate)) g1 = candidate;
  if (g1.empty()) {
    skip(5, "G1 instance file not available (set MAXCUT_GSET_DIR); the "
            "targets cut >= 11566 (SA2, 15 min) and >= 11450 (SA1, 30 s) "
            "were not exercised");
    return;
  }
  Graph g = read_edge_list(g1);

  auto best_within = [&](const SaSchedule& schedule, double budget_s,
                         std::int64_t target) {
    std::int64_t best = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t seed = 0; best < target; ++seed) {
      SaRunConfig cfg;
      cfg.schedule = schedule;
      cfg.seed = seed;
      best = std::max(best, sa_solve(g, cfg).best_value);
      if (seconds_since(t0) > budget_s) break;
    }
    return best;
  };

  const std::int64_t sa1_best = best_within(sa1_preset(), 30.0, 11450);
  const std::int64_t sa2_best = best_within(sa2_preset(), 15 * 60.0, 11566);
  const bool ok = sa1_best >= 11450 && sa2_best >= 11566;
  report(5, ok, "G1: SA1 best " + std::to_string(sa1_best) +
                    " (target 11450, 30 s), SA2 best " +
                    std::to_string(sa2_best) + " (target 11566, 15 min)");
}

// 6. Table 5 reproduction from the published G-set value matrix.
void criterion6(const fs::path& data) {
  const auto manifest = read_manifest(data / "g_manifest.json");
  const auto external = read_external_results(data / "g_published_results.ext");
  if (manifest.size() != 69 || external.size() != 69 * 4) {
    report(6, false, "expected 69 instances x 4 solvers of published data");
    return;
  }
  const BenchReport rep = run_bench(manifest, {}, external);
  const std::map<std::string, SolverSummary> want = {
      {"Hybrid", {17, 0, 11}},
      {"SBM", {58, 26, 0}},
      {"SA1", {8, 0, 53}},
      {"SA2", {41, 11, 3}},
  };
  for (const auto& [solver, expect] : want) {
    const auto it = rep.summary.find(solver);
    if (it == rep.summary.end() || !(it->second == expect)) {
      std::ostringstream msg;
      msg << solver << " summary (" << it->second.best << "," << it->second.only
          << "," << it->second.worst << ") != (" << expect.best << ","
          << expect.only << "," << expect.worst << ")";
      report(6, false, msg.str());
      return;
    }
  }
  report(6, true,
         "69-instance G matrix yields Hybrid (17,0,11), SBM (58,26,0), "
         "SA1 (8,0,53), SA2 (41,11,3)");
}

// 7. every shipped (instance, opt_cut, opt_value) triple is consistent.
void criterion7(const fs::path& data) {
  std::vector<fs::path> dirs;
  if (fs::is_directory(data / "samples")) dirs.push_back(data / "samples");
  if (const char* be_dir = std::getenv("MAXCUT_BE_DIR");
      be_dir && fs::is_directory(be_dir))
    dirs.push_back(be_dir);
  if (dirs.empty()) {
    report(7, false, "no dataset directory with triples found");
    return;
  }
  int total = 0;
  for (const auto& dir : dirs) {
    const ValidationReport rep = validate_dataset(dir);
    for (const auto& e : rep.entries) {
      ++total;
      if (!e.ok) {
        report(7, false, dir.string() + "/" + e.name + ": " + e.message);
        return;
      }
    }
  }
  report(7, total > 0,
         std::to_string(total) + " (instance, opt_cut, opt_value) triples "
                                 "validated");
}

// 8. bench reports are byte-identical across reruns.
void criterion8(const fs::path& data) {
  // externally supplied results (times included) must reproduce exactly
  const auto manifest = read_manifest(data / "g_manifest.json");
  const auto external = read_external_results(data / "g_published_results.ext");
  auto render_external = [&] {
    std::ostringstream out;
    write_report_csv(run_bench(manifest, {}, external, 2), out);
    return out.str();
  };
  if (render_external() != render_external()) {
    report(8, false, "external-results report differs between runs");
    return;
  }

  // local SA runs: identical seeds and parallelism, times excluded
  std::mt19937_64 rng(20240108);
  const fs::path tmp =
      fs::temp_directory_path() / "maxcut_acceptance_determinism";
  fs::create_directories(tmp);
  std::vector<InstanceRecord> local;
  for (int i = 0; i < 4; ++i) {
    const std::string name = "rand" + std::to_string(i);
    write_edge_list(testutil::random_graph(rng, 24), tmp / (name + ".mc"));
    local.push_back({.name = name,
                     .path = tmp / (name + ".mc"),
                     .dataset = Dataset::custom,
                     .n = 24});
  }
  SolverConfig sa1{.id = "sa1", .kind = SolverConfig::Kind::sa};
  sa1.sa.schedule = sa1_preset();
  sa1.sa.seed = 7;
  sa1.sa.restarts = 2;
  auto render_local = [&] {
    std::ostringstream out;
    write_report_csv(run_bench(local, {sa1}, {}, 4), out,
                     /*include_times=*/false);
    return out.str();
  };
  const bool ok = render_local() == render_local();
  fs::remove_all(tmp);
  report(8, ok, ok ? "CSV reports byte-identical across reruns "
                     "(external with times; local SA without)"
                   : "local-solver report differs between runs");
}

// 9. empirical acceptance rate at T=100, delta=-50 ~ exp(-0.5).
void criterion9() {
  std::mt19937_64 rng(20240109);
  const int trials = 100000;
  const double p = std::exp(-0.5);
  int accepted = 0;
  for (int t = 0; t < trials; ++t)
    if (sa_accept(-50, 100.0, rng)) ++accepted;
  const double freq = double(accepted) / trials;
  const double sigma = std::sqrt(p * (1 - p) / trials);
  std::ostringstream msg;
  msg << "acceptance rate " << freq << " vs exp(-0.5) = " << p << " (3 sigma = "
      << 3 * sigma << ")";
  report(9, std::abs(freq - p) < 3 * sigma, msg.str());
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path data = argc > 1 ? argv[1] : "data";
  if (!fs::is_directory(data)) {
    std::cerr << "data directory not found: " << data << "\n";
    return 2;
  }
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6(data);
    criterion7(data);
    criterion8(data);
    criterion9();
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
