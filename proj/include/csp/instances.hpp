#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "csp/core.hpp"

namespace csp {

/// SplitMix64 (Steele, Lea and Flood). Portable: the output sequence depends
/// only on the seed. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound) by rejection; bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = (*this)();
      if (r >= threshold) return r % bound;
    }
  }

  /// Independent child stream.
  SplitMix64 split() noexcept { return SplitMix64((*this)()); }

 private:
  std::uint64_t state_;
};

struct GeneratorConfig {
  std::size_t m = 1;
  std::size_t n = 1;
  Alphabet alphabet{"01"};
  std::uint64_t seed = 0;
};

/// m*n characters drawn i.i.d. uniformly, row by row, from SplitMix64(seed).
/// Throws InvalidArgument when m or n is zero.
Instance generate_uniform(const GeneratorConfig& cfg);

/// Line-oriented text: one string per line; blank lines and '#' comments
/// are skipped; an optional leading "alphabet: <symbols>" line pins the
/// alphabet. Throws FormatError carrying the offending line number.
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance. Emits the alphabet header only when the
/// alphabet differs from the one that would be inferred.
std::string serialize_instance(const Instance& inst);

}  // namespace csp
