#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csp/core.hpp"
#include "csp/lp.hpp"

namespace csp {

enum class FixBranch { threshold, argmax };

struct Fix {
  std::size_t position;
  char symbol;
  double value;  // fractional LP value of the chosen symbol when fixed
  FixBranch branch;

  bool operator==(const Fix&) const = default;
};

struct RoundingIteration {
  double lp_value;  // fractional optimum of the LP solved this round
  std::vector<Fix> fixes;

  bool operator==(const RoundingIteration&) const = default;
};

/// Record of one rounding run. `first`/`second` are kept for argmax fixes
/// only; threshold fixes are never candidates for a retry.
struct RoundingTrace {
  std::optional<std::pair<std::size_t, char>> preset;  // retry seed of a C run
  std::vector<RoundingIteration> iterations;
  std::map<std::size_t, double> first;
  std::map<std::size_t, char> second;

  std::size_t lp_solves() const noexcept { return iterations.size(); }
  bool operator==(const RoundingTrace&) const = default;
};

struct RoundingResult {
  CenterString center;
  std::size_t lp_bound = 0;  // ceil of the unconstrained LP optimum
  double lp_value = 0.0;     // the unconstrained LP optimum itself
  RoundingTrace trace;       // trace of the run that produced `center`
  bool exact_certified = false;
  std::size_t runs = 1;       // rounding runs performed (C: base + retries)
  std::size_t lp_solves = 0;  // over all runs
};

/// Thrown when an LP solve fails mid-run. Carries the trace accumulated so
/// far.
class LpFailure : public std::runtime_error {
 public:
  LpFailure(const std::string& what, RoundingTrace partial)
      : std::runtime_error(what), trace_(std::move(partial)) {}
  const RoundingTrace& trace() const noexcept { return trace_; }

 private:
  RoundingTrace trace_;
};

inline constexpr double kDefaultTheta = 0.9;
inline constexpr std::size_t kDefaultRetries = 8;

/// One position fixed per LP solve, always the globally largest value.
RoundingResult algorithm_a(const Instance& inst);

/// Fixes every position holding a value >= theta per LP solve, falling back
/// to a single argmax fix when none qualifies. theta must lie in (0.5, 1].
RoundingResult algorithm_b(const Instance& inst, double theta = kDefaultTheta);

/// Algorithm B followed, unless the first result already meets the LP
/// ceiling, by up to `retries` reruns each seeded with the runner-up symbol at
/// one of the least confident argmax positions. Returns the best candidate.
RoundingResult algorithm_c(const Instance& inst, double theta = kDefaultTheta,
                           std::size_t retries = kDefaultRetries);

}  // namespace csp
