#include "csp/rounding.hpp"

#include <algorithm>
#include <string>

namespace csp {

namespace {

// Values closer than this are ties; ties go to the lowest position, then to
// the earliest symbol in alphabet order.
constexpr double kTieTol = 1e-9;

enum class Mode { single, threshold };

struct Pick {
  std::size_t position;
  std::size_t symbol;
  double value;
};

struct Run {
  std::vector<std::optional<std::size_t>> fixed;
  RoundingTrace trace;
  double first_lp_value = 0.0;
};

Pick argmax_unfixed(const LpSolution& sol, const std::vector<std::optional<std::size_t>>& fixed) {
  Pick best{0, 0, -1.0};
  bool found = false;
  for (std::size_t j = 0; j < fixed.size(); ++j) {
    if (fixed[j]) continue;
    for (std::size_t a = 0; a < sol.symbols; ++a) {
      double v = sol.value(a, j);
      if (!found || v > best.value + kTieTol) {
        best = {j, a, v};
        found = true;
      }
    }
  }
  return best;
}

std::optional<std::size_t> runner_up(const LpSolution& sol, std::size_t position,
                                     std::size_t chosen) {
  std::optional<std::size_t> best;
  double best_value = 0.0;
  for (std::size_t a = 0; a < sol.symbols; ++a) {
    if (a == chosen) continue;
    double v = sol.value(a, position);
    if (!best || v > best_value + kTieTol) {
      best = a;
      best_value = v;
    }
  }
  return best;
}

Run run_rounding(const Instance& inst, Mode mode, double theta,
                 std::optional<std::pair<std::size_t, std::size_t>> preset) {
  const Alphabet& sigma = inst.alphabet();
  Run run;
  run.fixed.assign(inst.n(), std::nullopt);
  std::size_t unfixed = inst.n();
  if (preset) {
    run.fixed[preset->first] = preset->second;
    run.trace.preset = std::make_pair(preset->first, sigma.symbol(preset->second));
    --unfixed;
  }

  while (unfixed > 0) {
    const LpSolution sol = solve_lp(LpModel(inst, run.fixed));
    if (sol.status != LpStatus::optimal) {
      throw LpFailure(std::string("LP solve failed during rounding: ") + to_string(sol.status),
                      run.trace);
    }
    if (run.trace.iterations.empty()) run.first_lp_value = sol.dvalue;
    RoundingIteration round{sol.dvalue, {}};

    if (mode == Mode::threshold) {
      for (std::size_t j = 0; j < inst.n(); ++j) {
        if (run.fixed[j]) continue;
        for (std::size_t a = 0; a < sigma.size(); ++a) {
          double v = sol.value(a, j);
          if (v >= theta - kTieTol) {
            round.fixes.push_back({j, sigma.symbol(a), v, FixBranch::threshold});
            break;
          }
        }
      }
      for (const Fix& f : round.fixes) run.fixed[f.position] = *sigma.index_of(f.symbol);
      unfixed -= round.fixes.size();
    }

    if (round.fixes.empty()) {
      const Pick pick = argmax_unfixed(sol, run.fixed);
      round.fixes.push_back({pick.position, sigma.symbol(pick.symbol), pick.value,
                             FixBranch::argmax});
      run.fixed[pick.position] = pick.symbol;
      --unfixed;
      run.trace.first[pick.position] = pick.value;
      if (auto second = runner_up(sol, pick.position, pick.symbol)) {
        run.trace.second[pick.position] = sigma.symbol(*second);
      }
    }
    run.trace.iterations.push_back(std::move(round));
  }
  return run;
}

CenterString center_of(const Instance& inst, const Run& run) {
  std::string chars(inst.n(), '\0');
  for (std::size_t j = 0; j < inst.n(); ++j) chars[j] = inst.alphabet().symbol(*run.fixed[j]);
  return objective(chars, inst);
}

void check_theta(double theta) {
  if (!(theta > 0.5 && theta <= 1.0)) {
    throw InvalidArgument("theta must lie in (0.5, 1], got " + std::to_string(theta));
  }
}

RoundingResult finish(const Instance& inst, Run run) {
  RoundingResult res;
  res.center = center_of(inst, run);
  res.lp_value = run.first_lp_value;
  res.lp_bound = ceil_with_tolerance(run.first_lp_value);
  res.lp_solves = run.trace.lp_solves();
  res.trace = std::move(run.trace);
  res.exact_certified = res.center.objective == res.lp_bound;
  return res;
}

}  // namespace

RoundingResult algorithm_a(const Instance& inst) {
  return finish(inst, run_rounding(inst, Mode::single, 1.0, std::nullopt));
}

RoundingResult algorithm_b(const Instance& inst, double theta) {
  check_theta(theta);
  return finish(inst, run_rounding(inst, Mode::threshold, theta, std::nullopt));
}

RoundingResult algorithm_c(const Instance& inst, double theta, std::size_t retries) {
  check_theta(theta);
  if (retries == 0) throw InvalidArgument("retries must be positive");

  Run base = run_rounding(inst, Mode::threshold, theta, std::nullopt);
  std::size_t total_solves = base.trace.lp_solves();
  const double lp_value = base.first_lp_value;
  const std::size_t lp_bound = ceil_with_tolerance(lp_value);

  // Least confident argmax fixes first.
  std::vector<std::pair<double, std::size_t>> order;
  for (const auto& [position, value] : base.trace.first) {
    if (base.trace.second.count(position) != 0) order.emplace_back(value, position);
  }
  std::sort(order.begin(), order.end());
  if (order.size() > retries) order.resize(retries);

  RoundingResult best = finish(inst, std::move(base));
  if (best.exact_certified) {
    best.lp_solves = total_solves;
    return best;
  }

  const RoundingTrace base_trace = best.trace;
  std::size_t runs = 1;
  for (const auto& [value, position] : order) {
    const char second = base_trace.second.at(position);
    Run retry = run_rounding(inst, Mode::threshold, theta,
                             std::make_pair(position, *inst.alphabet().index_of(second)));
    ++runs;
    total_solves += retry.trace.lp_solves();
    CenterString center = center_of(inst, retry);
    if (center.objective < best.center.objective) {
      best.center = std::move(center);
      best.trace = std::move(retry.trace);
    }
  }
  best.lp_value = lp_value;
  best.lp_bound = lp_bound;
  best.exact_certified = best.center.objective == lp_bound;
  best.runs = runs;
  best.lp_solves = total_solves;
  return best;
}

}  // namespace csp
