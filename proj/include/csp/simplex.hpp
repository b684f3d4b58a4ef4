#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

// Dense-tableau primal simplex for bounded-variable LPs in the form
//
//   minimize    cost' x
//   subject to  A x = rhs,   lower <= x <= upper
//
// Nonbasic variables sit at one of their bounds. Entering variables are
// priced with the largest-coefficient rule; after a run of degenerate pivots
// the solver switches to Bland's rule until the objective moves again.

namespace csp::simplex {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Status { optimal, infeasible, unbounded, numeric_failure };

enum class VarState : std::uint8_t { basic, at_lower, at_upper };

struct Problem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> matrix;  // row-major, rows * cols
  std::vector<double> rhs;
  std::vector<double> cost;
  std::vector<double> lower;   // must be finite
  std::vector<double> upper;   // may be kInfinity

  Problem() = default;
  Problem(std::size_t rows, std::size_t cols);

  double& at(std::size_t r, std::size_t c) { return matrix[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return matrix[r * cols + c]; }

  /// Throws InvalidArgument on inconsistent sizes or bounds.
  void validate() const;
};

/// A starting basis: the basic column of every row plus the bound at which
/// each nonbasic column rests. It must be nonsingular and primal feasible,
/// otherwise the solver falls back to a phase-one start.
struct Basis {
  std::vector<std::size_t> basic_of_row;
  std::vector<VarState> state;
};

struct Options {
  double feasibility_tol = 1e-6;
  double optimality_tol = 1e-6;
  double pivot_tol = 1e-9;
  /// 0 selects a cap proportional to the problem size.
  std::size_t max_iterations = 0;
};

struct Result {
  Status status = Status::numeric_failure;
  std::vector<double> x;
  double objective = 0.0;
  std::size_t iterations = 0;
  std::size_t bland_pivots = 0;
  bool used_start_basis = false;
};

Result solve(const Problem& problem, const Options& options = {},
             const Basis* start = nullptr);

const char* to_string(Status status) noexcept;

}  // namespace csp::simplex
