#include "csp/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "csp/exact.hpp"
#include "csp/instances.hpp"
#include "csp/lp.hpp"

namespace csp {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

RoundingResult run_heuristic(Heuristic h, const Instance& inst, const BenchConfig& cfg) {
  switch (h) {
    case Heuristic::a: return algorithm_a(inst);
    case Heuristic::b: return algorithm_b(inst, cfg.theta);
    case Heuristic::c: return algorithm_c(inst, cfg.theta, cfg.retries);
  }
  return algorithm_c(inst, cfg.theta, cfg.retries);
}

double timing_average(const std::vector<double>& ms) {
  if (ms.empty()) return 0.0;
  std::size_t skip = ms.size() > 1 ? 1 : 0;
  double sum = 0.0;
  for (std::size_t i = skip; i < ms.size(); ++i) sum += ms[i];
  return sum / static_cast<double>(ms.size() - skip);
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fixed2(const std::optional<double>& v) { return v ? fixed2(*v) : std::string(); }

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
  if (cfg.batch == 0) throw InvalidArgument("batch must be at least 1");
  if (cfg.m_list.empty() || cfg.n_list.empty()) {
    throw InvalidArgument("m-list and n-list must not be empty");
  }

  BenchReport report;
  for (std::size_t m : cfg.m_list) {
    for (std::size_t n : cfg.n_list) {
      BenchRow row;
      row.m = m;
      row.n = n;
      row.batch = cfg.batch;
      std::vector<double> lp_ms, alg_ms, exact_ms;
      double lp_sum = 0.0, alg_sum = 0.0, exact_sum = 0.0;
      double max_err = 0.0;
      bool exact_complete = cfg.oracle.has_value();

      for (std::size_t idx = 0; idx < cfg.batch; ++idx) {
        InstanceOutcome out;
        out.m = m;
        out.n = n;
        out.index = idx;
        out.seed = instance_seed(cfg.seed, idx);
        const Instance inst = generate_uniform({m, n, cfg.alphabet, out.seed});

        auto t0 = Clock::now();
        const LpSolution root = solve_lp(build_csp_lp(inst));
        out.lp_ms = millis_since(t0);
        out.lp_value = root.dvalue;
        out.lp_bound = lp_lower_bound(root);
        lp_ms.push_back(out.lp_ms);
        lp_sum += static_cast<double>(out.lp_bound);

        if (cfg.heuristic) {
          t0 = Clock::now();
          const RoundingResult r = run_heuristic(*cfg.heuristic, inst, cfg);
          out.alg_ms = millis_since(t0);
          out.alg_objective = r.center.objective;
          out.alg_certified = r.exact_certified;
          alg_ms.push_back(out.alg_ms);
          alg_sum += static_cast<double>(r.center.objective);
          max_err = std::max(max_err,
                             std::abs(static_cast<double>(r.center.objective) - out.lp_value));
        }

        if (cfg.oracle) {
          t0 = Clock::now();
          try {
            ExactResult e = *cfg.oracle == Oracle::brute
                                ? brute_force_center(inst, cfg.brute_node_limit)
                                : branch_and_bound(inst, cfg.time_limit);
            out.exact_ms = millis_since(t0);
            if (e.certified) {
              out.exact_optimum = e.optimum;
            } else {
              out.exact_timed_out = true;
            }
          } catch (const CapacityError&) {
            out.exact_ms = millis_since(t0);
          }
          exact_ms.push_back(out.exact_ms);
          if (out.exact_optimum) {
            exact_sum += static_cast<double>(*out.exact_optimum);
          } else {
            exact_complete = false;
          }
        }
        report.instances.push_back(out);
      }

      const double batch = static_cast<double>(cfg.batch);
      row.lp_avg = lp_sum / batch;
      row.lp_ms = timing_average(lp_ms);
      if (cfg.heuristic) {
        row.alg_avg = alg_sum / batch;
        row.max_dist_error = max_err;
        row.alg_ms = timing_average(alg_ms);
      }
      if (exact_complete) {
        row.exact_avg = exact_sum / batch;
        row.exact_ms = timing_average(exact_ms);
      }
      report.rows.push_back(row);
    }
  }
  return report;
}

std::string format_csv(const BenchReport& report, bool include_timing) {
  std::string out(kBenchCsvHeader);
  out.push_back('\n');
  for (const BenchRow& r : report.rows) {
    out += std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + std::to_string(r.batch) + ',' +
           fixed2(r.lp_avg) + ',' + fixed2(r.alg_avg) + ',' + fixed2(r.exact_avg) + ',' +
           fixed2(r.max_dist_error) + ',';
    if (include_timing) {
      out += fixed2(r.lp_ms) + ',' + fixed2(r.alg_ms) + ',' + fixed2(r.exact_ms);
    } else {
      out += ",,";
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace csp
