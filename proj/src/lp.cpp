#include "csp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace csp {

LpModel::LpModel(Instance instance, std::vector<std::optional<std::size_t>> fixed)
    : instance_(std::move(instance)), fixed_(std::move(fixed)) {
  if (fixed_.size() != instance_.n()) {
    throw InvalidArgument("fixed assignment vector must have one entry per position");
  }
  for (const auto& f : fixed_) {
    if (f && *f >= symbols()) throw InvalidArgument("fixed symbol index out of range");
  }
}

std::size_t LpModel::fixed_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(fixed_.begin(), fixed_.end(), [](const auto& f) { return f.has_value(); }));
}

double LpModel::lower(std::size_t var) const {
  if (var == d_index()) return 0.0;
  std::size_t j = var / symbols();
  std::size_t a = var % symbols();
  return fixed_.at(j) && *fixed_[j] == a ? 1.0 : 0.0;
}

double LpModel::upper(std::size_t var) const {
  if (var == d_index()) return simplex::kInfinity;
  std::size_t j = var / symbols();
  std::size_t a = var % symbols();
  return fixed_.at(j) && *fixed_[j] != a ? 0.0 : 1.0;
}

std::vector<LinearConstraint> LpModel::constraints() const {
  const std::size_t n = positions();
  const std::size_t k = symbols();
  std::vector<LinearConstraint> rows;
  rows.reserve(n + strings());
  for (std::size_t j = 0; j < n; ++j) {
    LinearConstraint c{{}, RowSense::equal, 1.0};
    for (std::size_t a = 0; a < k; ++a) c.terms.push_back({x_index(a, j), 1.0});
    rows.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < strings(); ++i) {
    LinearConstraint c{{}, RowSense::greater_equal, static_cast<double>(n)};
    for (std::size_t j = 0; j < n; ++j) c.terms.push_back({x_index(instance_.code(i, j), j), 1.0});
    c.terms.push_back({d_index(), 1.0});
    rows.push_back(std::move(c));
  }
  return rows;
}

simplex::Problem LpModel::standard_form() const {
  const std::size_t n = positions();
  const std::size_t m = strings();
  const std::size_t vars = variable_count();
  simplex::Problem p(n + m, vars + m);
  for (std::size_t v = 0; v < vars; ++v) {
    p.lower[v] = lower(v);
    p.upper[v] = upper(v);
  }
  p.cost[d_index()] = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t a = 0; a < symbols(); ++a) p.at(j, x_index(a, j)) = 1.0;
    p.rhs[j] = 1.0;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = n + i;
    for (std::size_t j = 0; j < n; ++j) p.at(r, x_index(instance_.code(i, j), j)) = 1.0;
    p.at(r, d_index()) = 1.0;
    p.at(r, vars + i) = -1.0;
    p.rhs[r] = static_cast<double>(n);
  }
  return p;
}

simplex::Basis LpModel::crash_basis() const {
  const std::size_t n = positions();
  const std::size_t m = strings();
  const std::size_t k = symbols();
  const std::size_t vars = variable_count();

  // Start from the column-majority center (pinned symbols where fixed). The
  // farthest string's row takes d; every other string row takes its surplus,
  // which then equals d minus that string's distance.
  std::vector<std::size_t> center(n);
  std::vector<std::size_t> counts(k);
  for (std::size_t j = 0; j < n; ++j) {
    if (fixed_[j]) {
      center[j] = *fixed_[j];
      continue;
    }
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < m; ++i) ++counts[instance_.code(i, j)];
    center[j] = static_cast<std::size_t>(
        std::max_element(counts.begin(), counts.end()) - counts.begin());
  }
  std::size_t farthest = 0;
  std::size_t farthest_dist = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t dist = 0;
    for (std::size_t j = 0; j < n; ++j) dist += instance_.code(i, j) != center[j];
    if (i == 0 || dist > farthest_dist) {
      farthest = i;
      farthest_dist = dist;
    }
  }

  simplex::Basis basis;
  basis.basic_of_row.resize(n + m);
  basis.state.assign(vars + m, simplex::VarState::at_lower);
  for (std::size_t j = 0; j < n; ++j) basis.basic_of_row[j] = x_index(center[j], j);
  for (std::size_t i = 0; i < m; ++i) {
    basis.basic_of_row[n + i] = i == farthest ? d_index() : vars + i;
  }
  for (std::size_t c : basis.basic_of_row) basis.state[c] = simplex::VarState::basic;
  return basis;
}

const char* to_string(LpStatus status) noexcept {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::numeric_failure: return "numeric-failure";
  }
  return "unknown";
}

LpModel build_csp_lp(const Instance& inst, const FixedAssignment& fixed) {
  std::vector<std::optional<std::size_t>> pinned(inst.n());
  for (const auto& [position, symbol] : fixed) {
    if (position >= inst.n()) {
      throw InvalidArgument("fixed position " + std::to_string(position) +
                            " is outside the string length " + std::to_string(inst.n()));
    }
    auto idx = inst.alphabet().index_of(symbol);
    if (!idx) {
      throw InvalidArgument(std::string("fixed symbol '") + symbol + "' is not in the alphabet");
    }
    pinned[position] = *idx;
  }
  return LpModel(inst, std::move(pinned));
}

LpSolution solve_lp(const LpModel& model) {
  const simplex::Problem problem = model.standard_form();
  const simplex::Basis start = model.crash_basis();
  simplex::Options opts;
  opts.feasibility_tol = kLpTolerance;
  opts.optimality_tol = kLpTolerance;
  opts.pivot_tol = 1e-9;
  const simplex::Result res = simplex::solve(problem, opts, &start);

  LpSolution sol;
  sol.symbols = model.symbols();
  sol.iterations = res.iterations;
  switch (res.status) {
    case simplex::Status::optimal: sol.status = LpStatus::optimal; break;
    case simplex::Status::infeasible: sol.status = LpStatus::infeasible; break;
    default: sol.status = LpStatus::numeric_failure; break;
  }
  sol.values.assign(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(model.d_index()));
  sol.dvalue = res.x[model.d_index()];

  if (sol.status == LpStatus::optimal) {
    // d sits on the binding distance row at any optimum; recompute it from
    // x so the reported value matches the rows it bounds.
    const std::size_t n = model.positions();
    double worst = 0.0;
    for (std::size_t i = 0; i < model.strings(); ++i) {
      double agree = 0.0;
      for (std::size_t j = 0; j < n; ++j) agree += sol.value(model.instance().code(i, j), j);
      worst = std::max(worst, static_cast<double>(n) - agree);
    }
    if (std::abs(worst - sol.dvalue) > kLpTolerance * (1.0 + static_cast<double>(n))) {
      sol.status = LpStatus::numeric_failure;
    }
  }
  return sol;
}

std::size_t ceil_with_tolerance(double value, double eps) {
  double c = std::ceil(value - eps);
  return c <= 0.0 ? 0 : static_cast<std::size_t>(c);
}

std::size_t lp_lower_bound(const LpSolution& sol, double eps) {
  if (sol.status != LpStatus::optimal) {
    throw InvalidState(std::string("lp_lower_bound needs an optimal solution, status is ") +
                       to_string(sol.status));
  }
  return ceil_with_tolerance(sol.dvalue, eps);
}

}  // namespace csp
