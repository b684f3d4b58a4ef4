#include "csp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "csp/core.hpp"

namespace csp::simplex {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);
// Entries below this magnitude are treated as structural zeros when
// propagating a pivot row.
constexpr double kDropTol = 1e-13;
constexpr double kTieTol = 1e-11;
constexpr double kDegenerateStep = 1e-12;
constexpr int kMaxReinversions = 3;

class Solver {
 public:
  Solver(const Problem& p, const Options& o) : p_(p), o_(o) {
    rows_ = p.rows;
    orig_cols_ = p.cols;
    cap_ = o.max_iterations != 0 ? o.max_iterations
                                 : std::max<std::size_t>(10000, 50 * (rows_ + orig_cols_));
  }

  Result run(const Basis* start) {
    Result res;
    bool started = false;
    if (start != nullptr && load_start(*start)) {
      started = true;
      res.used_start_basis = true;
    }
    if (!started) {
      setup_phase_one();
      Status s = iterate();
      if (s != Status::optimal) return finish(res, s == Status::unbounded ? Status::numeric_failure : s);
      double infeas = 0.0;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (head_[r] >= orig_cols_) infeas += std::abs(xb_[r]);
      }
      if (infeas > o_.feasibility_tol) return finish(res, Status::infeasible);
      for (std::size_t j = orig_cols_; j < cols_; ++j) upper_[j] = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) cost_[j] = j < orig_cols_ ? p_.cost[j] : 0.0;
      compute_reduced_costs();
    }

    for (int attempt = 0;; ++attempt) {
      Status s = iterate();
      if (s != Status::optimal) return finish(res, s);
      if (verify()) return finish(res, Status::optimal);
      if (attempt >= kMaxReinversions || !reinvert()) {
        return finish(res, Status::numeric_failure);
      }
      compute_reduced_costs();
    }
  }

 private:
  Result& finish(Result& res, Status s) {
    res.status = s;
    res.iterations = iterations_;
    res.bland_pivots = bland_pivots_;
    res.x.assign(orig_cols_, 0.0);
    for (std::size_t j = 0; j < orig_cols_; ++j) {
      if (state_[j] != VarState::basic) res.x[j] = nonbasic_value(j);
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (head_[r] < orig_cols_) res.x[head_[r]] = xb_[r];
    }
    if (s == Status::optimal) {
      for (std::size_t j = 0; j < orig_cols_; ++j) {
        res.x[j] = std::clamp(res.x[j], p_.lower[j], p_.upper[j]);
      }
    }
    res.objective = 0.0;
    for (std::size_t j = 0; j < orig_cols_; ++j) res.objective += p_.cost[j] * res.x[j];
    return res;
  }

  double nonbasic_value(std::size_t j) const {
    return state_[j] == VarState::at_upper ? upper_[j] : lower_[j];
  }

  double* row(std::size_t r) { return &t_[r * cols_]; }

  void init_working(std::size_t extra_cols) {
    cols_ = orig_cols_ + extra_cols;
    a_.assign(rows_ * cols_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::copy_n(&p_.matrix[r * orig_cols_], orig_cols_, &a_[r * cols_]);
    }
    lower_.assign(p_.lower.begin(), p_.lower.end());
    upper_.assign(p_.upper.begin(), p_.upper.end());
    cost_.assign(p_.cost.begin(), p_.cost.end());
    lower_.resize(cols_, 0.0);
    upper_.resize(cols_, kInfinity);
    cost_.resize(cols_, 0.0);
    state_.assign(cols_, VarState::at_lower);
  }

  // rhs - A_N x_N for the current nonbasic values.
  std::vector<double> residual_rhs() const {
    std::vector<double> rhs(p_.rhs);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (state_[j] == VarState::basic) continue;
      double v = nonbasic_value(j);
      if (v == 0.0) continue;
      for (std::size_t r = 0; r < rows_; ++r) rhs[r] -= a_[r * cols_ + j] * v;
    }
    return rhs;
  }

  bool load_start(const Basis& start) {
    if (start.basic_of_row.size() != rows_ || start.state.size() != orig_cols_) {
      return false;
    }
    init_working(0);
    head_ = start.basic_of_row;
    for (std::size_t j = 0; j < orig_cols_; ++j) {
      state_[j] = start.state[j] == VarState::at_upper ? VarState::at_upper
                                                        : VarState::at_lower;
      if (state_[j] == VarState::at_upper && !std::isfinite(upper_[j])) return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (head_[r] >= orig_cols_ || state_[head_[r]] == VarState::basic) return false;
      state_[head_[r]] = VarState::basic;
    }
    t_ = a_;
    xb_ = residual_rhs();
    for (std::size_t r = 0; r < rows_; ++r) {
      if (std::abs(t_[r * cols_ + head_[r]]) <= o_.pivot_tol) return false;
      pivot(r, head_[r], xb_.data());
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      std::size_t j = head_[r];
      if (xb_[r] < lower_[j] - o_.feasibility_tol || xb_[r] > upper_[j] + o_.feasibility_tol) {
        return false;
      }
    }
    compute_reduced_costs();
    return true;
  }

  void setup_phase_one() {
    init_working(0);
    std::vector<double> resid = residual_rhs();
    init_working(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::size_t art = orig_cols_ + r;
      a_[r * cols_ + art] = resid[r] < 0.0 ? -1.0 : 1.0;
      cost_[art] = 1.0;
    }
    for (std::size_t j = 0; j < orig_cols_; ++j) cost_[j] = 0.0;
    head_.resize(rows_);
    t_ = a_;
    xb_ = resid;
    for (std::size_t r = 0; r < rows_; ++r) {
      head_[r] = orig_cols_ + r;
      state_[head_[r]] = VarState::basic;
      pivot(r, head_[r], xb_.data());
    }
    compute_reduced_costs();
  }

  // Refactors the tableau from the original matrix for the current basis,
  // reassigning rows by partial pivoting.
  bool reinvert() {
    std::vector<std::size_t> cols(head_);
    t_ = a_;
    xb_ = residual_rhs();
    std::vector<bool> assigned(rows_, false);
    std::vector<std::size_t> new_head(rows_, kNone);
    for (std::size_t c : cols) {
      std::size_t best = kNone;
      double best_abs = o_.pivot_tol;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (assigned[r]) continue;
        double v = std::abs(t_[r * cols_ + c]);
        if (v > best_abs) {
          best_abs = v;
          best = r;
        }
      }
      if (best == kNone) return false;
      assigned[best] = true;
      new_head[best] = c;
      pivot(best, c, xb_.data());
    }
    head_ = std::move(new_head);
    return true;
  }

  void compute_reduced_costs() {
    rc_.assign(cost_.begin(), cost_.end());
    for (std::size_t r = 0; r < rows_; ++r) {
      double cb = cost_[head_[r]];
      if (cb == 0.0) continue;
      const double* tr = &t_[r * cols_];
      for (std::size_t j = 0; j < cols_; ++j) rc_[j] -= cb * tr[j];
    }
    for (std::size_t r = 0; r < rows_; ++r) rc_[head_[r]] = 0.0;
  }

  void pivot(std::size_t pr, std::size_t pc, double* rhs) {
    double* prow = row(pr);
    double inv = 1.0 / prow[pc];
    nz_.clear();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (prow[j] == 0.0) continue;
      prow[j] *= inv;
      if (std::abs(prow[j]) > kDropTol) nz_.push_back(j);
      else prow[j] = 0.0;
    }
    prow[pc] = 1.0;
    if (rhs != nullptr) rhs[pr] *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      double* tr = row(r);
      double f = tr[pc];
      if (f == 0.0) continue;
      for (std::size_t j : nz_) tr[j] -= f * prow[j];
      tr[pc] = 0.0;
      if (rhs != nullptr) rhs[r] -= f * rhs[pr];
    }
    if (!rc_.empty()) {
      double f = rc_[pc];
      if (f != 0.0) {
        for (std::size_t j : nz_) rc_[j] -= f * prow[j];
        rc_[pc] = 0.0;
      }
    }
  }

  std::size_t choose_entering(bool bland) const {
    std::size_t best = kNone;
    double best_score = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
      VarState s = state_[j];
      if (s == VarState::basic || !(upper_[j] > lower_[j])) continue;
      double score = 0.0;
      if (s == VarState::at_lower && rc_[j] < -o_.optimality_tol) score = -rc_[j];
      else if (s == VarState::at_upper && rc_[j] > o_.optimality_tol) score = rc_[j];
      else continue;
      if (bland) return j;
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  Status iterate() {
    const std::size_t degenerate_limit = 2 * (rows_ + cols_);
    std::size_t degenerate_run = 0;
    bool bland = false;
    for (;;) {
      std::size_t q = choose_entering(bland);
      if (q == kNone) return Status::optimal;
      if (iterations_ >= cap_) return Status::numeric_failure;
      ++iterations_;
      if (bland) ++bland_pivots_;

      const double dir = state_[q] == VarState::at_lower ? 1.0 : -1.0;
      double step = upper_[q] - lower_[q];
      std::size_t leave = kNone;
      double leave_alpha = 0.0;
      for (std::size_t r = 0; r < rows_; ++r) {
        double alpha = dir * t_[r * cols_ + q];
        if (std::abs(alpha) <= o_.pivot_tol) continue;
        std::size_t b = head_[r];
        double limit;
        if (alpha > 0.0) {
          limit = (xb_[r] - lower_[b]) / alpha;
        } else {
          if (!std::isfinite(upper_[b])) continue;
          limit = (upper_[b] - xb_[r]) / -alpha;
        }
        limit = std::max(limit, 0.0);
        if (limit < step - kTieTol) {
          step = limit;
          leave = r;
          leave_alpha = alpha;
        } else if (leave != kNone && limit <= step + kTieTol) {
          bool better = bland ? b < head_[leave] : std::abs(alpha) > std::abs(leave_alpha);
          if (better) {
            step = std::min(step, limit);
            leave = r;
            leave_alpha = alpha;
          }
        }
      }
      if (!std::isfinite(step)) return Status::unbounded;

      if (step > 0.0) {
        for (std::size_t r = 0; r < rows_; ++r) {
          double tq = t_[r * cols_ + q];
          if (tq != 0.0) xb_[r] -= step * dir * tq;
        }
      }
      if (step <= kDegenerateStep) {
        if (++degenerate_run >= degenerate_limit) bland = true;
      } else {
        degenerate_run = 0;
        bland = false;
      }

      if (leave == kNone) {
        state_[q] = state_[q] == VarState::at_lower ? VarState::at_upper : VarState::at_lower;
        continue;
      }
      double entering_value = nonbasic_value(q) + dir * step;
      std::size_t out = head_[leave];
      pivot(leave, q, nullptr);
      xb_[leave] = entering_value;
      head_[leave] = q;
      state_[q] = VarState::basic;
      state_[out] = leave_alpha > 0.0 ? VarState::at_lower : VarState::at_upper;
    }
  }

  // Checks the basic solution against the original rows and bounds.
  bool verify() const {
    std::vector<double> x(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      x[j] = state_[j] == VarState::basic ? 0.0 : nonbasic_value(j);
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      std::size_t j = head_[r];
      x[j] = xb_[r];
      if (x[j] < lower_[j] - o_.feasibility_tol || x[j] > upper_[j] + o_.feasibility_tol) {
        return false;
      }
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      double sum = 0.0;
      const double* ar = &a_[r * cols_];
      for (std::size_t j = 0; j < cols_; ++j) sum += ar[j] * x[j];
      if (std::abs(sum - p_.rhs[r]) > o_.feasibility_tol * (1.0 + std::abs(p_.rhs[r]))) {
        return false;
      }
    }
    return true;
  }

  const Problem& p_;
  Options o_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t orig_cols_ = 0;
  std::size_t cap_ = 0;
  std::size_t iterations_ = 0;
  std::size_t bland_pivots_ = 0;

  std::vector<double> a_;
  std::vector<double> t_;
  std::vector<double> rc_;
  std::vector<double> xb_;
  std::vector<double> lower_, upper_, cost_;
  std::vector<std::size_t> head_;
  std::vector<VarState> state_;
  std::vector<std::size_t> nz_;
};

}  // namespace

Problem::Problem(std::size_t r, std::size_t c)
    : rows(r),
      cols(c),
      matrix(r * c, 0.0),
      rhs(r, 0.0),
      cost(c, 0.0),
      lower(c, 0.0),
      upper(c, kInfinity) {}

void Problem::validate() const {
  if (matrix.size() != rows * cols || rhs.size() != rows || cost.size() != cols ||
      lower.size() != cols || upper.size() != cols) {
    throw InvalidArgument("simplex problem has inconsistent dimensions");
  }
  for (std::size_t j = 0; j < cols; ++j) {
    if (!std::isfinite(lower[j])) {
      throw InvalidArgument("variable " + std::to_string(j) + " has no finite lower bound");
    }
    if (upper[j] < lower[j]) {
      throw InvalidArgument("variable " + std::to_string(j) + " has upper < lower");
    }
  }
}

Result solve(const Problem& problem, const Options& options, const Basis* start) {
  problem.validate();
  Solver solver(problem, options);
  return solver.run(start);
}

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::numeric_failure: return "numeric-failure";
  }
  return "unknown";
}

}  // namespace csp::simplex
