#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>

#include "csp/core.hpp"

namespace csp {

enum class ProofKind { enumeration, branch_and_bound };

const char* to_string(ProofKind proof) noexcept;

struct ExactResult {
  CenterString center;
  std::size_t optimum = 0;
  std::uint64_t nodes_explored = 0;
  ProofKind proof = ProofKind::enumeration;
  /// False only when branch and bound hit its time limit; `center` is then
  /// the best incumbent found.
  bool certified = true;
};

/// The search space is larger than the caller allowed.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::uint64_t required, std::uint64_t limit);
  /// Saturates at UINT64_MAX.
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

/// Product over positions of the number of distinct characters in that
/// column, saturating at UINT64_MAX.
std::uint64_t column_space_size(const Instance& inst);

/// Enumerates every center built from per-column characters. Throws
/// CapacityError when column_space_size(inst) exceeds `node_limit`.
ExactResult brute_force_center(const Instance& inst, std::uint64_t node_limit);

/// Depth-first branch and bound over positions. Never throws on timeout.
ExactResult branch_and_bound(const Instance& inst, std::chrono::milliseconds time_limit,
                             bool lp_root_bound = true);

}  // namespace csp
