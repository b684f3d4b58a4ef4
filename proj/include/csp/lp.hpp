#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "csp/core.hpp"
#include "csp/simplex.hpp"

namespace csp {

/// Partial assignment of center characters: position -> symbol.
using FixedAssignment = std::map<std::size_t, char>;

struct LinearTerm {
  std::size_t var;
  double coef;

  bool operator==(const LinearTerm&) const = default;
};

enum class RowSense { equal, greater_equal };

struct LinearConstraint {
  std::vector<LinearTerm> terms;
  RowSense sense;
  double rhs;
};

/// LP relaxation of the closest string integer program:
///
///   min d  s.t.  sum_a x(a,j) = 1                  for every position j
///                n - sum_j x(s_i[j], j) <= d        for every string i
///                0 <= x(a,j) <= 1,  d >= 0
///
/// Fixed positions are pinned through equal bounds rather than removed, so
/// variable indices stay stable as more positions get fixed.
class LpModel {
 public:
  LpModel(Instance instance, std::vector<std::optional<std::size_t>> fixed);

  const Instance& instance() const noexcept { return instance_; }
  std::size_t strings() const noexcept { return instance_.m(); }
  std::size_t positions() const noexcept { return instance_.n(); }
  std::size_t symbols() const noexcept { return instance_.alphabet().size(); }

  std::size_t variable_count() const noexcept { return symbols() * positions() + 1; }
  std::size_t x_index(std::size_t symbol, std::size_t position) const noexcept {
    return position * symbols() + symbol;
  }
  std::size_t d_index() const noexcept { return symbols() * positions(); }

  double lower(std::size_t var) const;
  double upper(std::size_t var) const;

  /// Symbol index pinned at each position, if any.
  const std::vector<std::optional<std::size_t>>& fixed() const noexcept { return fixed_; }
  std::size_t fixed_count() const noexcept;

  /// Position equalities first, then one distance row per string written as
  /// sum_j x(s_i[j], j) + d >= n.
  std::vector<LinearConstraint> constraints() const;

  /// Equality form with one surplus column per string row, plus a feasible
  /// starting basis derived from a column-majority center.
  simplex::Problem standard_form() const;
  simplex::Basis crash_basis() const;

 private:
  Instance instance_;
  std::vector<std::optional<std::size_t>> fixed_;
};

enum class LpStatus { optimal, infeasible, numeric_failure };

const char* to_string(LpStatus status) noexcept;

struct LpSolution {
  LpStatus status = LpStatus::numeric_failure;
  std::size_t symbols = 0;
  std::vector<double> values;  // x(a,j) at index j * symbols + a
  double dvalue = 0.0;
  std::size_t iterations = 0;

  double value(std::size_t symbol, std::size_t position) const {
    return values[position * symbols + symbol];
  }
};

inline constexpr double kLpTolerance = 1e-6;

LpModel build_csp_lp(const Instance& inst, const FixedAssignment& fixed = {});

LpSolution solve_lp(const LpModel& model);

/// ceil(value - eps): a lower bound on the integral optimum.
std::size_t ceil_with_tolerance(double value, double eps = kLpTolerance);

/// Throws InvalidState unless `sol` is optimal.
std::size_t lp_lower_bound(const LpSolution& sol, double eps = kLpTolerance);

}  // namespace csp
