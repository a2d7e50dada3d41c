// biq: exact counts of sums of distinct p^a q^b, the m-ary partition
// function, and the experiments built on them.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "biq/analytics.hpp"
#include "biq/exact_counter.hpp"
#include "biq/experiments.hpp"
#include "biq/recurrence.hpp"
#include "biq/report_io.hpp"
#include "biq/table_cache.hpp"
#include "biq/version.hpp"

namespace fs = std::filesystem;
using namespace biq;

namespace {

constexpr int kUsageError = 2;
constexpr int kCheckFailed = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BasePair make_base(std::uint64_t p, std::uint64_t q) {
  try {
    return BasePair(p, q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::size_t> parse_points(const std::vector<std::string>& raw) {
  std::vector<std::size_t> out;
  for (const auto& s : raw) {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw UsageError("bad sample point '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_windows(const std::vector<std::string>& raw) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& s : raw) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("window must be START:LENGTH, got '" + s + "'");
    out.emplace_back(std::stoull(s.substr(0, colon)), std::stoull(s.substr(colon + 1)));
  }
  return out;
}

struct ExperimentArgs {
  std::string out_dir = "biq-out";
  bool no_cache = false;
  std::uint64_t p = 2, q = 3;
  std::size_t x = 1'000'000;
  std::size_t limit = 10'000;
  std::uint64_t ell = 2;
  std::vector<std::string> points;
  std::vector<std::string> windows{"100:100", "1000:1000", "10000:1000", "100000:1000"};
  std::uint64_t n = 100'000;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  double small_exponent = 4.0;
  double completion_exponent = 1.5;
  std::uint64_t budget = kDefaultSearchBudget;
  std::size_t nmax = 60;
  std::size_t naive_limit = 60;
};

int write_experiment(const ExperimentOutput& result, const ExperimentArgs& args,
                     const std::vector<std::string>& argv, double seconds) {
  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  const fs::path csv = dir / (result.name + ".csv");
  const fs::path manifest_path = dir / (result.name + ".manifest.json");
  {
    std::ofstream out(csv, std::ios::binary | std::ios::trunc);
    out << result.csv.str();
  }
  RunManifest m;
  m.argv = argv;
  m.parameters = result.parameters;
  m.seed = result.seed;
  m.tool_version = kToolVersion;
  m.wall_seconds = seconds;
  m.outputs = {csv.string()};
  {
    std::ofstream out(manifest_path, std::ios::trunc);
    out << to_json(m).dump(2) << '\n';
  }
  for (const auto& line : result.summary) std::cerr << line << '\n';
  std::cout << csv.string() << '\n';
  return result.passed ? 0 : kCheckFailed;
}

int run(const std::vector<std::string>& argv);

int replay(const std::string& manifest_file, const std::optional<std::string>& out_dir) {
  std::ifstream in(manifest_file);
  if (!in) throw UsageError("cannot read manifest " + manifest_file);
  const RunManifest m = manifest_from_json(nlohmann::json::parse(in));
  std::vector<std::string> args;
  for (std::size_t i = 0; i < m.argv.size(); ++i) {
    if (out_dir && m.argv[i] == "--out" && i + 1 < m.argv.size()) {
      ++i;
      continue;
    }
    args.push_back(m.argv[i]);
  }
  if (out_dir) {
    args.push_back("--out");
    args.push_back(*out_dir);
  }
  if (args.empty() || args.front() == "replay") throw UsageError("manifest has no runnable command");
  return run(args);
}

int run(const std::vector<std::string>& argv) {
  CLI::App app{"Exact representation counts over {p^a q^b} and related experiments", "biq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  // count
  std::uint64_t count_p = 2, count_q = 3, count_n = 1;
  bool count_oracle = false;
  std::size_t oracle_cap = kDefaultOracleCap;
  auto* count = app.add_subcommand("count", "Print f_{p,q}(n)");
  count->add_option("--p", count_p, "first base")->required();
  count->add_option("--q", count_q, "second base")->required();
  count->add_option("--n", count_n, "argument n >= 1")->required()->check(CLI::PositiveNumber);
  count->add_flag("--oracle", count_oracle, "use the subset-sum oracle (always used when p != 2)");
  count->add_option("--cap", oracle_cap, "largest n the oracle accepts")->capture_default_str();

  // verify
  std::uint64_t verify_p = 2, verify_q = 3;
  std::size_t verify_nmax = 2000;
  bool verify_serial = false;
  auto* verify = app.add_subcommand("verify", "Run every exact invariant up to nmax");
  verify->add_option("--p", verify_p)->required();
  verify->add_option("--q", verify_q)->required();
  verify->add_option("--nmax", verify_nmax)->capture_default_str();
  verify->add_flag("--serial", verify_serial, "use the serial reference kernels");

  // table
  std::string table_kind = "f_pq";
  std::uint64_t table_p = 2, table_q = 3;
  std::size_t table_nmax = 1000;
  bool table_oracle = false, table_stdout = false;
  auto* table = app.add_subcommand("table", "Tabulate into the cache ($BIQ_CACHE_DIR)");
  table->add_option("--kind", table_kind)->check(CLI::IsMember({"f_pq", "b_m", "g_seq"}))->capture_default_str();
  table->add_option("--p", table_p)->capture_default_str();
  table->add_option("--q", table_q, "second base, or m for b_m")->capture_default_str();
  table->add_option("--nmax", table_nmax)->capture_default_str();
  table->add_flag("--oracle", table_oracle, "build f_pq with the subset-sum oracle");
  table->add_flag("--stdout", table_stdout, "also print the table file");

  // experiment
  ExperimentArgs ea;
  auto* experiment = app.add_subcommand("experiment", "Write one experiment CSV and its manifest");
  experiment->require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", ea.out_dir, "output directory")->capture_default_str();
    sub->add_flag("--no-cache", ea.no_cache, "do not read or write the table cache");
  };
  auto* parity = experiment->add_subcommand("parity", "Even/odd density of f_{2,q}");
  parity->add_option("--q", ea.q)->capture_default_str();
  parity->add_option("--x", ea.x)->capture_default_str();
  auto* ratio = experiment->add_subcommand("ratio", "Windows of f(n+1)/f(n) for p = 2");
  ratio->add_option("--q", ea.q)->capture_default_str();
  ratio->add_option("--window", ea.windows, "START:LENGTH, repeatable");
  auto* signs = experiment->add_subcommand("signs", "Signs of f(n+1) - f(n)");
  signs->add_option("--p", ea.p)->capture_default_str();
  signs->add_option("--q", ea.q)->capture_default_str();
  signs->add_option("--limit", ea.limit)->capture_default_str();
  auto* scaling = experiment->add_subcommand("scaling", "Empirical exponent of f(ell n)/f(n)");
  scaling->add_option("--p", ea.p)->capture_default_str();
  scaling->add_option("--q", ea.q)->capture_default_str();
  scaling->add_option("--ell", ea.ell)->capture_default_str();
  scaling->add_option("--n", ea.points, "sample points, repeatable");
  auto* asymptotic = experiment->add_subcommand("asymptotic", "Normalized exponent of f");
  asymptotic->add_option("--p", ea.p)->capture_default_str();
  asymptotic->add_option("--q", ea.q)->capture_default_str();
  asymptotic->add_option("--n", ea.points, "sample points, repeatable");
  auto* probe = experiment->add_subcommand("lower-bound-probe", "Subset-plus-completion expressions");
  probe->add_option("--p", ea.p)->capture_default_str();
  probe->add_option("--q", ea.q)->capture_default_str();
  probe->add_option("--n", ea.n)->capture_default_str();
  probe->add_option("--samples", ea.samples)->capture_default_str();
  probe->add_option("--seed", ea.seed)->capture_default_str();
  probe->add_option("--small-exponent", ea.small_exponent)->capture_default_str();
  probe->add_option("--completion-exponent", ea.completion_exponent)->capture_default_str();
  probe->add_option("--budget", ea.budget)->capture_default_str();
  auto* birch = experiment->add_subcommand("birch", "Representability of every n up to limit");
  birch->add_option("--p", ea.p)->capture_default_str();
  birch->add_option("--q", ea.q)->capture_default_str();
  birch->add_option("--limit", ea.limit)->capture_default_str();
  auto* antichain = experiment->add_subcommand("antichain", "Divisibility-antichain counts for (2,3)");
  antichain->add_option("--nmax", ea.nmax)->capture_default_str();
  antichain->add_option("--naive-limit", ea.naive_limit)->capture_default_str();
  auto* sweep = experiment->add_subcommand("threshold-sweep", "Largest completion threshold");
  sweep->add_option("--p", ea.p)->capture_default_str();
  sweep->add_option("--q", ea.q)->capture_default_str();
  sweep->add_option("--n", ea.points, "targets, repeatable");
  sweep->add_option("--budget", ea.budget)->capture_default_str();
  for (auto* sub : {parity, ratio, signs, scaling, asymptotic, probe, birch, antichain, sweep})
    common(sub);

  // replay
  std::string replay_manifest;
  std::optional<std::string> replay_out;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run the experiment recorded in a manifest");
  replay_cmd->add_option("--manifest", replay_manifest)->required();
  replay_cmd->add_option("--out", replay_out, "override the output directory");

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (count->parsed()) {
    const BasePair base = make_base(count_p, count_q);
    if (count_oracle || !base.has_binary_fast_path()) {
      if (count_n > oracle_cap)
        throw UsageError("n = " + std::to_string(count_n) + " exceeds the oracle cap " +
                         std::to_string(oracle_cap) +
                         (base.has_binary_fast_path() ? "; drop --oracle to use the recurrence"
                                                      : "; only p = 2 with odd q has a recurrence"));
      std::cout << count_distinct_representations(base, count_n, Exec::parallel, oracle_cap)[count_n]
                << '\n';
    } else {
      std::cout << tabulate_f2q(base.q(), count_n)[count_n] << '\n';
    }
    return 0;
  }

  if (verify->parsed()) {
    if (verify_p == 2 && verify_q % 2 == 0)
      throw UsageError("q must be odd for the p = 2 recurrence path");
    const BasePair base = make_base(verify_p, verify_q);
    const auto results =
        run_invariant_suite(base, verify_nmax, verify_serial ? Exec::serial : Exec::parallel);
    bool all = true;
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (r.counterexample) std::cout << " counterexample n=" << *r.counterexample;
      std::cout << "  (" << r.detail << ")\n";
      all = all && r.passed;
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return all ? 0 : kCheckFailed;
  }

  if (table->parsed()) {
    TableProvider tables{TableCache(TableCache::default_dir())};
    std::optional<CountTable> t;
    if (table_kind == "f_pq") {
      const BasePair base = make_base(table_p, table_q);
      t = tables.f_table(base, table_nmax, table_oracle);
    } else if (table_kind == "b_m") {
      t = tables.mary_table(table_q, table_nmax);
    } else {
      t = tables.g_table(table_q, table_nmax);
    }
    TableCache cache(TableCache::default_dir());
    std::cerr << (tables.cache_hits() ? "cache hit: " : "computed: ")
              << cache.path_for(key_of(*t)).string() << '\n';
    if (table_stdout) write_table(std::cout, *t);
    return 0;
  }

  if (replay_cmd->parsed()) return replay(replay_manifest, replay_out);

  // experiment
  const auto started = std::chrono::steady_clock::now();
  std::optional<TableCache> cache;
  if (!ea.no_cache) cache.emplace(TableCache::default_dir());
  TableProvider tables(cache);
  ExperimentOutput result;
  if (parity->parsed()) {
    result = run_parity(tables, ea.q, ea.x);
  } else if (ratio->parsed()) {
    result = run_ratio(tables, ea.q, parse_windows(ea.windows));
  } else if (signs->parsed()) {
    result = run_signs(tables, make_base(ea.p, ea.q), ea.limit);
  } else if (scaling->parsed()) {
    auto pts = parse_points(ea.points);
    if (pts.empty())
      for (std::size_t n = 10'000; n <= 100'000; n += 10'000) pts.push_back(n);
    result = run_scaling(tables, make_base(ea.p, ea.q), ea.ell, pts);
  } else if (asymptotic->parsed()) {
    auto pts = parse_points(ea.points);
    if (pts.empty()) pts = {1'000, 10'000, 100'000, 1'000'000};
    result = run_asymptotic(tables, make_base(ea.p, ea.q), pts);
  } else if (probe->parsed()) {
    result = run_lower_bound_probe(make_base(ea.p, ea.q), ea.n, ea.samples, ea.seed,
                                   ea.small_exponent, ea.completion_exponent, ea.budget);
  } else if (birch->parsed()) {
    result = run_birch(tables, make_base(ea.p, ea.q), ea.limit);
  } else if (antichain->parsed()) {
    result = run_antichain(tables, ea.nmax, ea.naive_limit);
  } else if (sweep->parsed()) {
    std::vector<std::uint64_t> ns;
    for (auto v : parse_points(ea.points)) ns.push_back(v);
    if (ns.empty()) ns = {100'000};
    result = run_threshold_sweep(make_base(ea.p, ea.q), ns, ea.budget);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return write_experiment(result, ea, argv, seconds);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}
