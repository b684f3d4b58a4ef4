#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csp {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed instance data. `line()` is 1-based, or 0 when the error is not
/// tied to a particular input line.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// True for characters usable as alphabet symbols: printable, non-space
/// ASCII other than '#' and ':' (reserved by the instance file format).
bool is_symbol_char(char c) noexcept;

/// Ordered set of distinct symbols. The order is the tie-break order used by
/// every solver.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);

  /// Sorted set of the characters occurring in `strings`.
  static Alphabet inferred(std::span<const std::string> strings);

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(std::size_t index) const { return symbols_.at(index); }
  const std::string& symbols() const noexcept { return symbols_; }

  std::optional<std::size_t> index_of(char c) const noexcept {
    auto u = static_cast<unsigned char>(c);
    if (u >= index_.size() || index_[u] < 0) return std::nullopt;
    return static_cast<std::size_t>(index_[u]);
  }
  bool contains(char c) const noexcept { return index_of(c).has_value(); }

  bool operator==(const Alphabet& other) const noexcept {
    return symbols_ == other.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, 128> index_;
};

/// m strings of common length n over an alphabet. Immutable once built.
class Instance {
 public:
  /// Throws FormatError when the set is empty, ragged, has zero-length
  /// strings, or uses characters outside `alphabet`.
  Instance(Alphabet alphabet, std::vector<std::string> strings);

  std::size_t m() const noexcept { return strings_.size(); }
  std::size_t n() const noexcept { return n_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& strings() const noexcept { return strings_; }
  const std::string& string(std::size_t i) const { return strings_.at(i); }

  /// Alphabet index of the character of string i at position j.
  std::size_t code(std::size_t i, std::size_t j) const noexcept {
    return codes_[i * n_ + j];
  }

  /// Alphabet indices occurring in column j, in alphabet order.
  std::vector<std::size_t> column_symbols(std::size_t j) const;

  bool operator==(const Instance& other) const noexcept {
    return alphabet_ == other.alphabet_ && strings_ == other.strings_;
  }

 private:
  Alphabet alphabet_;
  std::vector<std::string> strings_;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> codes_;
};

/// A candidate center with its distance to every input string.
struct CenterString {
  std::string chars;
  std::vector<std::size_t> distances;
  std::size_t objective = 0;

  bool operator==(const CenterString&) const = default;
};

/// Number of positions at which `s` and `t` differ. Throws InvalidArgument
/// on a length mismatch.
std::size_t hamming_distance(std::string_view s, std::string_view t);

/// Evaluates `t` as a center for `inst`.
CenterString objective(std::string_view t, const Instance& inst);

/// Builds an Instance from raw strings, inferring the alphabet unless one is
/// supplied.
Instance validate_instance(std::vector<std::string> raw,
                           std::optional<Alphabet> alphabet = std::nullopt);

}  // namespace csp
