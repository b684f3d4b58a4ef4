#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "csp/bench.hpp"
#include "csp/exact.hpp"
#include "csp/instances.hpp"
#include "csp/lp.hpp"
#include "csp/rounding.hpp"

namespace csp::cli {

namespace {

using Clock = std::chrono::steady_clock;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << data;
  if (!f) throw IoError("failed writing '" + path + "'");
}

std::string format_millis(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

struct GenArgs {
  std::size_t m = 0;
  std::size_t n = 0;
  std::string alphabet = "ACGT";
  std::uint64_t seed = 1;
  std::string out;
};

struct SolveArgs {
  std::string alg = "c";
  double theta = kDefaultTheta;
  std::size_t retries = kDefaultRetries;
  std::string in;
  std::string format = "text";
  std::uint64_t node_limit = 1ULL << 24;
  double time_limit = 60.0;
  bool omit_timing = false;
};

struct BenchArgs {
  std::vector<std::size_t> m_list{10, 15, 20};
  std::vector<std::size_t> n_list{100, 200, 300};
  std::string alphabet = "ACGT";
  std::size_t batch = 3;
  std::uint64_t seed = 1;
  std::vector<std::string> algs{"c", "bnb"};
  double time_limit = 60.0;
  double theta = kDefaultTheta;
  std::size_t retries = kDefaultRetries;
  std::string out;
  bool omit_timing = false;
};

std::chrono::milliseconds to_millis(double seconds) {
  return std::chrono::milliseconds(static_cast<std::int64_t>(std::llround(seconds * 1000.0)));
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const Instance inst = generate_uniform({a.m, a.n, Alphabet(a.alphabet), a.seed});
  write_output(a.out, serialize_instance(inst), out);
  return kOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = parse_instance(read_file(a.in));
  SolveReport report;
  const auto t0 = Clock::now();
  if (a.alg == "a" || a.alg == "b" || a.alg == "c") {
    RoundingResult r = a.alg == "a"   ? algorithm_a(inst)
                       : a.alg == "b" ? algorithm_b(inst, a.theta)
                                      : algorithm_c(inst, a.theta, a.retries);
    report.center = r.center.chars;
    report.objective = r.center.objective;
    report.lp_bound = r.lp_bound;
    report.certified = r.exact_certified;
  } else {
    ExactResult e = a.alg == "brute" ? brute_force_center(inst, a.node_limit)
                                     : branch_and_bound(inst, to_millis(a.time_limit));
    const LpSolution root = solve_lp(build_csp_lp(inst));
    report.center = e.center.chars;
    report.objective = e.optimum;
    report.lp_bound = lp_lower_bound(root);
    report.certified = e.certified;
  }
  if (!a.omit_timing) {
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report.millis = std::round(ms * 1000.0) / 1000.0;
  }
  out << (a.format == "json" ? to_json(report) : to_text(report));
  return kOk;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  BenchConfig cfg;
  cfg.m_list = a.m_list;
  cfg.n_list = a.n_list;
  cfg.alphabet = Alphabet(a.alphabet);
  cfg.batch = a.batch;
  cfg.seed = a.seed;
  cfg.theta = a.theta;
  cfg.retries = a.retries;
  cfg.time_limit = to_millis(a.time_limit);
  cfg.heuristic.reset();
  cfg.oracle.reset();
  for (const auto& alg : a.algs) {
    std::optional<Heuristic> h;
    if (alg == "a") h = Heuristic::a;
    else if (alg == "b") h = Heuristic::b;
    else if (alg == "c") h = Heuristic::c;
    if (h) {
      if (cfg.heuristic) throw InvalidArgument("--algs accepts at most one of a, b, c");
      cfg.heuristic = h;
    } else if (alg == "brute" || alg == "bnb") {
      if (cfg.oracle) throw InvalidArgument("--algs accepts at most one of brute, bnb");
      cfg.oracle = alg == "brute" ? Oracle::brute : Oracle::bnb;
    } else {
      throw InvalidArgument("unknown algorithm '" + alg + "' in --algs");
    }
  }
  if (cfg.heuristic == Heuristic::b || cfg.heuristic == Heuristic::c) {
    if (!(cfg.theta > 0.5 && cfg.theta <= 1.0)) throw InvalidArgument("--theta must lie in (0.5, 1]");
  }
  const BenchReport report = run_bench(cfg);
  write_output(a.out, format_csv(report, !a.omit_timing), out);
  return kOk;
}

}  // namespace

std::string to_json(const SolveReport& r) {
  nlohmann::ordered_json j;
  j["center"] = r.center;
  j["objective"] = r.objective;
  j["lp_bound"] = r.lp_bound;
  j["certified"] = r.certified;
  j["millis"] = r.millis ? nlohmann::ordered_json(*r.millis) : nlohmann::ordered_json(nullptr);
  return j.dump() + "\n";
}

std::string to_text(const SolveReport& r) {
  std::string s;
  s += "center: " + r.center + "\n";
  s += "objective: " + std::to_string(r.objective) + "\n";
  s += "lp_bound: " + std::to_string(r.lp_bound) + "\n";
  s += std::string("certified: ") + (r.certified ? "true" : "false") + "\n";
  s += "millis: " + (r.millis ? format_millis(*r.millis) : std::string("null")) + "\n";
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closest string solver: LP iterative rounding and exact baselines", "cspsolve"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a uniform random instance");
  gen_cmd->add_option("--m", gen.m, "Number of strings")->required();
  gen_cmd->add_option("--n", gen.n, "String length")->required();
  gen_cmd->add_option("--alphabet", gen.alphabet, "Alphabet symbols, in tie-break order")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "SplitMix64 seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (stdout if omitted)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("--alg", solve.alg, "Algorithm")
      ->check(CLI::IsMember({"a", "b", "c", "brute", "bnb"}))
      ->capture_default_str();
  solve_cmd->add_option("--theta", solve.theta, "Batch rounding threshold")->capture_default_str();
  solve_cmd->add_option("--retries", solve.retries, "Algorithm C retry count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve_cmd->add_option("--in", solve.in, "Instance file")->required();
  solve_cmd->add_option("--format", solve.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  solve_cmd->add_option("--node-limit", solve.node_limit, "Node limit for brute")
      ->capture_default_str();
  solve_cmd->add_option("--time-limit", solve.time_limit, "Seconds allowed for bnb")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  solve_cmd->add_flag("--omit-timing", solve.omit_timing, "Report millis as null");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark batch and emit CSV");
  bench_cmd->add_option("--m-list", bench.m_list, "String counts")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--n-list", bench.n_list, "String lengths")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--alphabet", bench.alphabet, "Alphabet symbols")->capture_default_str();
  bench_cmd->add_option("--batch", bench.batch, "Instances per (m, n)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Base seed")->capture_default_str();
  bench_cmd->add_option("--algs", bench.algs, "Heuristic (a|b|c) and oracle (brute|bnb)")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--time-limit-per-instance", bench.time_limit, "Oracle seconds per instance")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench_cmd->add_option("--theta", bench.theta, "Batch rounding threshold")->capture_default_str();
  bench_cmd->add_option("--retries", bench.retries, "Algorithm C retry count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "Output CSV file (stdout if omitted)");
  bench_cmd->add_flag("--omit-timing", bench.omit_timing, "Leave timing columns empty");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("cspsolve");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*solve_cmd) return cmd_solve(solve, out);
    return cmd_bench(bench, out);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const LpFailure& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const InvalidState& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace csp::cli
