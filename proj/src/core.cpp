#include "csp/core.hpp"

#include <algorithm>
#include <bitset>

namespace csp {

FormatError::FormatError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

bool is_symbol_char(char c) noexcept {
  auto u = static_cast<unsigned char>(c);
  return u > 0x20 && u < 0x7f && c != '#' && c != ':';
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  index_.fill(-1);
  if (symbols_.empty()) throw InvalidArgument("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    char c = symbols_[i];
    if (!is_symbol_char(c)) {
      throw InvalidArgument("unsupported alphabet character (code " +
                            std::to_string(static_cast<unsigned char>(c)) + ")");
    }
    auto& slot = index_[static_cast<unsigned char>(c)];
    if (slot >= 0) {
      throw InvalidArgument(std::string("duplicate alphabet symbol '") + c + "'");
    }
    slot = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::inferred(std::span<const std::string> strings) {
  std::bitset<256> seen;
  for (const auto& s : strings) {
    for (char c : s) seen.set(static_cast<unsigned char>(c));
  }
  std::string symbols;
  for (std::size_t u = 0; u < seen.size(); ++u) {
    if (seen.test(u)) symbols.push_back(static_cast<char>(u));
  }
  return Alphabet(symbols);
}

Instance::Instance(Alphabet alphabet, std::vector<std::string> strings)
    : alphabet_(std::move(alphabet)), strings_(std::move(strings)) {
  if (strings_.empty()) throw FormatError("instance has no strings");
  n_ = strings_.front().size();
  if (n_ == 0) throw FormatError("strings must not be empty");
  codes_.reserve(strings_.size() * n_);
  for (std::size_t i = 0; i < strings_.size(); ++i) {
    const auto& s = strings_[i];
    if (s.size() != n_) {
      throw FormatError("string " + std::to_string(i + 1) + " has length " +
                        std::to_string(s.size()) + ", expected " +
                        std::to_string(n_));
    }
    for (char c : s) {
      auto idx = alphabet_.index_of(c);
      if (!idx) {
        throw FormatError("string " + std::to_string(i + 1) +
                          " contains a character outside the alphabet");
      }
      codes_.push_back(static_cast<std::uint8_t>(*idx));
    }
  }
}

std::vector<std::size_t> Instance::column_symbols(std::size_t j) const {
  std::vector<bool> present(alphabet_.size(), false);
  for (std::size_t i = 0; i < m(); ++i) present[code(i, j)] = true;
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < present.size(); ++a) {
    if (present[a]) out.push_back(a);
  }
  return out;
}

std::size_t hamming_distance(std::string_view s, std::string_view t) {
  if (s.size() != t.size()) {
    throw InvalidArgument("hamming_distance: lengths " + std::to_string(s.size()) +
                          " and " + std::to_string(t.size()) + " differ");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < s.size(); ++i) d += (s[i] != t[i]);
  return d;
}

CenterString objective(std::string_view t, const Instance& inst) {
  if (t.size() != inst.n()) {
    throw InvalidArgument("center has length " + std::to_string(t.size()) +
                          ", instance length is " + std::to_string(inst.n()));
  }
  for (char c : t) {
    if (!inst.alphabet().contains(c)) {
      throw InvalidArgument("center contains a character outside the alphabet");
    }
  }
  CenterString out;
  out.chars = std::string(t);
  out.distances.reserve(inst.m());
  for (const auto& s : inst.strings()) {
    out.distances.push_back(hamming_distance(t, s));
  }
  out.objective = *std::max_element(out.distances.begin(), out.distances.end());
  return out;
}

Instance validate_instance(std::vector<std::string> raw,
                           std::optional<Alphabet> alphabet) {
  if (raw.empty()) throw FormatError("instance has no strings");
  if (!alphabet) {
    for (const auto& s : raw) {
      for (char c : s) {
        if (!is_symbol_char(c)) {
          throw FormatError("unsupported character (code " +
                            std::to_string(static_cast<unsigned char>(c)) + ")");
        }
      }
    }
    // Ragged or empty strings are reported by the Instance constructor;
    // an all-empty set has no symbols to infer from.
    bool any = std::any_of(raw.begin(), raw.end(),
                           [](const std::string& s) { return !s.empty(); });
    if (!any) throw FormatError("strings must not be empty");
    alphabet = Alphabet::inferred(raw);
  }
  return Instance(std::move(*alphabet), std::move(raw));
}

}  // namespace csp
