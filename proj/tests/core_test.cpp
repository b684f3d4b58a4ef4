#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "csp/core.hpp"
#include "csp/instances.hpp"

using namespace csp;

TEST_CASE("hamming_distance examples") {
  CHECK(hamming_distance("ACGT", "ACGT") == 0);
  CHECK(hamming_distance("000", "111") == 3);
  CHECK(hamming_distance("ACGT", "AGGT") == 1);
  CHECK(hamming_distance("", "") == 0);
  CHECK_THROWS_AS(hamming_distance("AC", "ACG"), InvalidArgument);
}

TEST_CASE("hamming_distance is a metric on random strings") {
  SplitMix64 rng(99);
  const std::string sigma = "ACGT";
  auto draw = [&](std::size_t n) {
    std::string s(n, 'A');
    for (char& c : s) c = sigma[rng.below(sigma.size())];
    return s;
  };
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng.below(20);
    std::string s = draw(n), t = draw(n), u = draw(n);
    CHECK(hamming_distance(s, t) == hamming_distance(t, s));
    CHECK(hamming_distance(s, u) <= hamming_distance(s, t) + hamming_distance(t, u));
    CHECK((hamming_distance(s, t) == 0) == (s == t));
  }
}

TEST_CASE("objective examples") {
  const Instance inst = validate_instance({"ACG", "ACT", "CCG"});
  const CenterString c = objective("ACG", inst);
  CHECK(c.distances == std::vector<std::size_t>{0, 1, 1});
  CHECK(c.objective == 1);

  const Instance single = validate_instance({"GATTACA"});
  CHECK(objective("GATTACA", single).objective == 0);

  const Instance binary = validate_instance({"00", "11"});
  const CenterString b = objective("01", binary);
  CHECK(b.distances == std::vector<std::size_t>{1, 1});
  CHECK(b.objective == 1);
}

TEST_CASE("objective rejects bad centers") {
  const Instance inst = validate_instance({"ACG", "ACT"});
  CHECK_THROWS_AS(objective("AC", inst), InvalidArgument);
  CHECK_THROWS_AS(objective("ACX", inst), InvalidArgument);
}

TEST_CASE("objective agrees with an independent recount") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    GeneratorConfig cfg{1 + rng.below(6), 1 + rng.below(12), Alphabet("ACGT"), rng()};
    const Instance inst = generate_uniform(cfg);
    std::string t(inst.n(), 'A');
    for (char& c : t) c = "ACGT"[rng.below(4)];
    std::size_t worst = 0;
    for (const auto& s : inst.strings()) {
      std::size_t d = 0;
      for (std::size_t j = 0; j < s.size(); ++j) d += s[j] != t[j] ? 1 : 0;
      worst = std::max(worst, d);
    }
    CHECK(objective(t, inst).objective == worst);
  }
}

TEST_CASE("validate_instance infers a sorted alphabet") {
  const Instance inst = validate_instance({"AC", "AG"});
  CHECK(inst.m() == 2);
  CHECK(inst.n() == 2);
  CHECK(inst.alphabet().symbols() == "ACG");
  CHECK(inst.column_symbols(1) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("validate_instance errors") {
  CHECK_THROWS_AS(validate_instance({"A", "AC"}), FormatError);
  CHECK_THROWS_AS(validate_instance({}), FormatError);
  CHECK_THROWS_AS(validate_instance({"", ""}), FormatError);
  CHECK_THROWS_AS(validate_instance({"A C"}), FormatError);
  CHECK_THROWS_AS(validate_instance({"AZ"}, Alphabet("AC")), FormatError);
}

TEST_CASE("explicit alphabet keeps its order") {
  const Instance inst = validate_instance({"10", "01"}, Alphabet("10"));
  CHECK(inst.alphabet().symbols() == "10");
  CHECK(inst.code(0, 0) == 0);
  CHECK(inst.code(0, 1) == 1);
}

TEST_CASE("alphabet invariants") {
  CHECK_THROWS_AS(Alphabet(""), InvalidArgument);
  CHECK_THROWS_AS(Alphabet("AA"), InvalidArgument);
  CHECK_THROWS_AS(Alphabet("A#"), InvalidArgument);
  const Alphabet sigma("TGCA");
  CHECK(sigma.index_of('C') == 2u);
  CHECK_FALSE(sigma.index_of('X').has_value());
  CHECK_FALSE(sigma.index_of(static_cast<char>(0xC3)).has_value());
}
