#include <doctest.h>

#include <algorithm>
#include <limits>
#include <string>

#include "csp/exact.hpp"
#include "csp/instances.hpp"
#include "csp/lp.hpp"

using namespace csp;
using namespace std::chrono_literals;

namespace {

// Full |alphabet|^n enumeration, no column restriction.
std::size_t full_grid_optimum(const Instance& inst) {
  const std::string& sigma = inst.alphabet().symbols();
  std::string t(inst.n(), sigma[0]);
  std::vector<std::size_t> idx(inst.n(), 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (;;) {
    for (std::size_t j = 0; j < inst.n(); ++j) t[j] = sigma[idx[j]];
    std::size_t worst = 0;
    for (const auto& s : inst.strings()) worst = std::max(worst, hamming_distance(s, t));
    best = std::min(best, worst);
    std::size_t j = 0;
    while (j < inst.n() && ++idx[j] == sigma.size()) idx[j++] = 0;
    if (j == inst.n()) return best;
  }
}

}  // namespace

TEST_CASE("brute force examples") {
  const ExactResult single = brute_force_center(validate_instance({"ACGT"}), 10);
  CHECK(single.optimum == 0);
  CHECK(single.center.chars == "ACGT");
  CHECK(single.proof == ProofKind::enumeration);

  // "00", "01", "10", "11" are all at distance 1 from one of the strings.
  const ExactResult cross = brute_force_center(validate_instance({"01", "10"}), 10);
  CHECK(cross.optimum == 1);
  CHECK(cross.nodes_explored == 4);

  const ExactResult col3 = brute_force_center(validate_instance({"ACG", "ACT", "ACC"}), 10);
  CHECK(col3.optimum == 1);
  CHECK(col3.nodes_explored == 3);
  CHECK(col3.center.chars.substr(0, 2) == "AC");
}

TEST_CASE("brute force capacity error names the node count") {
  const Instance inst = generate_uniform({4, 12, Alphabet("01"), 1});
  const std::uint64_t need = column_space_size(inst);
  REQUIRE(need > 100);
  try {
    brute_force_center(inst, 100);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(e.required() == need);
    CHECK(std::string(e.what()).find(std::to_string(need)) != std::string::npos);
  }
}

TEST_CASE("column space size saturates") {
  const Instance wide = generate_uniform({4, 200, Alphabet("ACGT"), 3});
  CHECK(column_space_size(wide) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("branch and bound examples") {
  const ExactResult r = branch_and_bound(validate_instance({"00", "11"}), 5s);
  CHECK(r.certified);
  CHECK(r.optimum == 1);
  CHECK(r.proof == ProofKind::branch_and_bound);

  const Instance same = validate_instance({"GATTACA", "GATTACA", "GATTACA"});
  const ExactResult s = branch_and_bound(same, 5s, false);
  CHECK(s.certified);
  CHECK(s.optimum == 0);
  CHECK(s.nodes_explored <= same.n() * same.alphabet().size());

  const Instance rnd = generate_uniform({4, 10, Alphabet("01"), 77});
  CHECK(branch_and_bound(rnd, 5s).optimum == brute_force_center(rnd, 1u << 12).optimum);
}

TEST_CASE("branch and bound times out without throwing") {
  const Instance hard = generate_uniform({30, 120, Alphabet("ACGT"), 5});
  const ExactResult r = branch_and_bound(hard, 0ms, false);
  CHECK_FALSE(r.certified);
  CHECK(r.center == objective(r.center.chars, hard));
  CHECK(r.optimum == r.center.objective);
}

TEST_CASE("oracles agree and sandwich the LP bound") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string sigma = rng.below(2) == 0 ? "01" : "ACG";
    const Instance inst =
        generate_uniform({1 + rng.below(6), 1 + rng.below(9), Alphabet(sigma), rng()});
    const ExactResult brute = brute_force_center(inst, 1u << 20);
    const ExactResult bnb = branch_and_bound(inst, 10s, rng.below(2) == 0);
    REQUIRE(bnb.certified);
    CHECK(bnb.optimum == brute.optimum);
    CHECK(brute.optimum == brute.center.objective);
    const std::size_t lb = lp_lower_bound(solve_lp(build_csp_lp(inst)));
    CHECK(lb <= brute.optimum);
    for (const auto& s : inst.strings()) CHECK(brute.optimum <= objective(s, inst).objective);
  }
}

TEST_CASE("restricting to column characters is lossless") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::string sigma = rng.below(2) == 0 ? "01" : "ABC";
    const Instance inst =
        generate_uniform({1 + rng.below(4), 1 + rng.below(6), Alphabet(sigma), rng()});
    CHECK(brute_force_center(inst, 1u << 12).optimum == full_grid_optimum(inst));
  }
}
