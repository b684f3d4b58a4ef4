#include "csp/instances.hpp"

#include <optional>
#include <vector>

namespace csp {

namespace {

constexpr std::string_view kAlphabetHeader = "alphabet:";

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Instance generate_uniform(const GeneratorConfig& cfg) {
  if (cfg.m == 0) throw InvalidArgument("generator: m must be at least 1");
  if (cfg.n == 0) throw InvalidArgument("generator: n must be at least 1");
  SplitMix64 rng(cfg.seed);
  const std::size_t k = cfg.alphabet.size();
  std::vector<std::string> strings(cfg.m, std::string(cfg.n, '\0'));
  for (auto& s : strings) {
    for (char& c : s) c = cfg.alphabet.symbol(rng.below(k));
  }
  return Instance(cfg.alphabet, std::move(strings));
}

Instance parse_instance(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<std::string> strings;
  std::size_t line_no = 0;
  std::size_t width = 0;

  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with(kAlphabetHeader)) {
      if (alphabet) throw FormatError("duplicate alphabet header", line_no);
      if (!strings.empty()) throw FormatError("alphabet header must precede the strings", line_no);
      try {
        alphabet.emplace(trim(line.substr(kAlphabetHeader.size())));
      } catch (const InvalidArgument& e) {
        throw FormatError(e.what(), line_no);
      }
      continue;
    }
    for (char c : line) {
      if (alphabet ? !alphabet->contains(c) : !is_symbol_char(c)) {
        throw FormatError(std::string("character '") + c +
                              (alphabet ? "' is not in the declared alphabet" : "' is not allowed"),
                          line_no);
      }
    }
    if (strings.empty()) {
      width = line.size();
    } else if (line.size() != width) {
      throw FormatError("string has length " + std::to_string(line.size()) + ", expected " +
                            std::to_string(width),
                        line_no);
    }
    strings.emplace_back(line);
  }

  if (strings.empty()) throw FormatError("instance contains no strings");
  return validate_instance(std::move(strings), std::move(alphabet));
}

std::string serialize_instance(const Instance& inst) {
  std::string out;
  if (!(Alphabet::inferred(inst.strings()) == inst.alphabet())) {
    out.append(kAlphabetHeader);
    out.push_back(' ');
    out.append(inst.alphabet().symbols());
    out.push_back('\n');
  }
  for (const auto& s : inst.strings()) {
    out.append(s);
    out.push_back('\n');
  }
  return out;
}

}  // namespace csp
