#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csp/core.hpp"
#include "csp/rounding.hpp"

namespace csp {

enum class Heuristic { a, b, c };
enum class Oracle { brute, bnb };

struct BenchConfig {
  std::vector<std::size_t> m_list{10, 15, 20};
  std::vector<std::size_t> n_list{100, 200, 300};
  Alphabet alphabet{"ACGT"};
  std::size_t batch = 3;
  std::uint64_t seed = 1;
  std::optional<Heuristic> heuristic = Heuristic::c;
  std::optional<Oracle> oracle = Oracle::bnb;
  double theta = kDefaultTheta;
  std::size_t retries = kDefaultRetries;
  std::chrono::milliseconds time_limit{60000};
  std::uint64_t brute_node_limit = 1ULL << 24;
};

/// Per-instance measurements behind a BenchRow.
struct InstanceOutcome {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t index = 0;
  std::uint64_t seed = 0;
  double lp_value = 0.0;
  std::size_t lp_bound = 0;
  std::optional<std::size_t> alg_objective;
  bool alg_certified = false;
  std::optional<std::size_t> exact_optimum;  // empty when skipped or timed out
  bool exact_timed_out = false;
  double lp_ms = 0.0;
  double alg_ms = 0.0;
  double exact_ms = 0.0;
};

/// One (m, n) entry. Averages run over the same `batch` instances; timing
/// averages drop the first instance of the batch as warm-up when batch > 1.
struct BenchRow {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t batch = 0;
  double lp_avg = 0.0;                  // mean of ceil(LP)
  std::optional<double> alg_avg;        // mean heuristic objective
  std::optional<double> exact_avg;      // mean certified optimum
  std::optional<double> max_dist_error; // max |objective - fractional LP|
  double lp_ms = 0.0;
  std::optional<double> alg_ms;
  std::optional<double> exact_ms;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<InstanceOutcome> instances;
};

/// Seed of instance `index` in a batch.
inline std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) noexcept {
  return seed ^ static_cast<std::uint64_t>(index);
}

BenchReport run_bench(const BenchConfig& cfg);

inline constexpr const char* kBenchCsvHeader =
    "m,n,batch,lp_avg,alg_avg,exact_avg,max_dist_error,lp_ms,alg_ms,exact_ms";

/// CSV with a fixed header. With `include_timing` false the three timing
/// columns are left empty so the output is reproducible byte for byte.
std::string format_csv(const BenchReport& report, bool include_timing = true);

}  // namespace csp
