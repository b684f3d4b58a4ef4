#include "csp/exact.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "csp/lp.hpp"

namespace csp {

const char* to_string(ProofKind proof) noexcept {
  return proof == ProofKind::enumeration ? "enumeration" : "branch-and-bound";
}

CapacityError::CapacityError(std::uint64_t required, std::uint64_t limit)
    : std::runtime_error("exhaustive search needs " +
                         (required == std::numeric_limits<std::uint64_t>::max()
                              ? std::string("more than 2^64")
                              : std::to_string(required)) +
                         " nodes, limit is " + std::to_string(limit)),
      required_(required) {}

std::uint64_t column_space_size(const Instance& inst) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < inst.n(); ++j) {
    std::uint64_t c = inst.column_symbols(j).size();
    if (total > kMax / c) return kMax;
    total *= c;
  }
  return total;
}

ExactResult brute_force_center(const Instance& inst, std::uint64_t node_limit) {
  const std::uint64_t required = column_space_size(inst);
  if (required > node_limit) throw CapacityError(required, node_limit);

  const std::size_t n = inst.n();
  const std::size_t m = inst.m();
  std::vector<std::vector<std::size_t>> columns(n);
  for (std::size_t j = 0; j < n; ++j) columns[j] = inst.column_symbols(j);

  // Odometer over column choices, last position fastest, with distances
  // maintained incrementally.
  std::vector<std::size_t> digit(n, 0);
  std::vector<std::size_t> dist(m, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) dist[i] += inst.code(i, j) != columns[j][0];
  }
  auto change = [&](std::size_t j, std::size_t from, std::size_t to) {
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t c = inst.code(i, j);
      dist[i] += static_cast<std::size_t>(c == from) - static_cast<std::size_t>(c == to);
    }
  };

  ExactResult res;
  res.proof = ProofKind::enumeration;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best_digit;
  for (;;) {
    ++res.nodes_explored;
    std::size_t obj = *std::max_element(dist.begin(), dist.end());
    if (obj < best) {
      best = obj;
      best_digit = digit;
    }
    std::size_t j = n;
    while (j > 0) {
      --j;
      const auto& col = columns[j];
      if (digit[j] + 1 < col.size()) {
        change(j, col[digit[j]], col[digit[j] + 1]);
        ++digit[j];
        break;
      }
      change(j, col[digit[j]], col[0]);
      digit[j] = 0;
      if (j == 0) {
        j = n + 1;
        break;
      }
    }
    if (j == n + 1) break;
  }

  std::string chars(n, '\0');
  for (std::size_t j = 0; j < n; ++j) {
    chars[j] = inst.alphabet().symbol(columns[j][best_digit[j]]);
  }
  res.center = objective(chars, inst);
  res.optimum = res.center.objective;
  res.certified = true;
  return res;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, std::chrono::milliseconds limit)
      : inst_(inst),
        deadline_(std::chrono::steady_clock::now() + limit),
        mismatch_(inst.m(), 0),
        current_(inst.n(), 0),
        order_(inst.n()) {
    // Children in order of decreasing column frequency, alphabet order on ties.
    std::vector<std::size_t> freq(inst.alphabet().size());
    for (std::size_t j = 0; j < inst.n(); ++j) {
      std::fill(freq.begin(), freq.end(), 0);
      for (std::size_t i = 0; i < inst.m(); ++i) ++freq[inst.code(i, j)];
      order_[j] = inst.column_symbols(j);
      std::stable_sort(order_[j].begin(), order_[j].end(),
                       [&](std::size_t a, std::size_t b) { return freq[a] > freq[b]; });
    }
  }

  void seed_incumbent(const std::string& chars, std::size_t value) {
    incumbent_chars_ = chars;
    incumbent_ = value;
  }
  void set_lower_bound(std::size_t lb) { lower_bound_ = lb; }

  // Returns false on timeout.
  bool search() {
    if (incumbent_ <= lower_bound_) return true;
    dfs(0, 0);
    return !timed_out_;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::string& incumbent() const noexcept { return incumbent_chars_; }

 private:
  // Returns true when the search must stop (optimum proven or timeout).
  bool dfs(std::size_t j, std::size_t current_max) {
    if (j == inst_.n()) {
      incumbent_ = current_max;
      for (std::size_t p = 0; p < inst_.n(); ++p) {
        incumbent_chars_[p] = inst_.alphabet().symbol(current_[p]);
      }
      return incumbent_ <= lower_bound_;
    }
    for (std::size_t a : order_[j]) {
      if ((++nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() >= deadline_) {
        timed_out_ = true;
        return true;
      }
      std::size_t next_max = current_max;
      for (std::size_t i = 0; i < inst_.m(); ++i) {
        if (inst_.code(i, j) != a) next_max = std::max(next_max, ++mismatch_[i]);
      }
      bool stop = false;
      if (next_max < incumbent_) {
        current_[j] = a;
        stop = dfs(j + 1, next_max);
      }
      for (std::size_t i = 0; i < inst_.m(); ++i) {
        if (inst_.code(i, j) != a) --mismatch_[i];
      }
      if (stop) return true;
    }
    return false;
  }

  const Instance& inst_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::size_t> mismatch_;
  std::vector<std::size_t> current_;
  std::vector<std::vector<std::size_t>> order_;
  std::string incumbent_chars_;
  std::size_t incumbent_ = std::numeric_limits<std::size_t>::max();
  std::size_t lower_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

ExactResult branch_and_bound(const Instance& inst, std::chrono::milliseconds time_limit,
                             bool lp_root_bound) {
  BranchAndBound bnb(inst, time_limit);
  std::size_t best_i = 0;
  std::size_t best_value = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < inst.m(); ++i) {
    std::size_t v = objective(inst.string(i), inst).objective;
    if (v < best_value) {
      best_value = v;
      best_i = i;
    }
  }
  bnb.seed_incumbent(inst.string(best_i), best_value);
  if (lp_root_bound && best_value > 0) {
    const LpSolution root = solve_lp(build_csp_lp(inst));
    if (root.status == LpStatus::optimal) bnb.set_lower_bound(lp_lower_bound(root));
  }

  ExactResult res;
  res.proof = ProofKind::branch_and_bound;
  res.certified = bnb.search();
  res.nodes_explored = bnb.nodes();
  res.center = objective(bnb.incumbent(), inst);
  res.optimum = res.center.objective;
  return res;
}

}  // namespace csp
