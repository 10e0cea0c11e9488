#pragma once

// Line-oriented helpers shared by the `.tt`, `.anf` and `.qc` readers.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zhegalkin/errors.hpp"
#include "zhegalkin/prime_field.hpp"

namespace zhegalkin::text::detail {

struct Line {
  std::size_t number;  // 1-based
  std::string_view content;  // comment stripped, trimmed, never empty
};

/// Non-blank lines of `text` with `#` comments removed.
inline std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++number;
    auto eol = text.find('\n', pos);
    auto end = eol == std::string_view::npos ? text.size() : eol;
    auto raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto first = raw.find_first_not_of(" \t\r\f\v");
    if (first != std::string_view::npos) {
      auto last = raw.find_last_not_of(" \t\r\f\v");
      lines.push_back({number, raw.substr(first, last - first + 1)});
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

/// Non-negative decimal integer occupying the whole token.
inline std::optional<std::int64_t> parse_uint(std::string_view token) {
  if (token.empty() || token.front() == '-' || token.front() == '+') return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return v;
}

struct Header {
  std::int64_t k;
  std::int64_t n;
  std::int64_t m;
};

/// `k <int> n <int> m <int>`; checks primality of k but not the size guards.
inline Header parse_header(const Line& line) {
  auto tok = split_ws(line.content);
  auto bad = [&](const std::string& why) {
    return ParseError(ParseError::Kind::kBadHeader, line.number,
                      "bad header (" + why + "), expected 'k <int> n <int> m <int>'");
  };
  if (tok.size() != 6 || tok[0] != "k" || tok[2] != "n" || tok[4] != "m") {
    throw bad("wrong layout");
  }
  auto k = parse_uint(tok[1]);
  auto n = parse_uint(tok[3]);
  auto m = parse_uint(tok[5]);
  if (!k || !n || !m) throw bad("non-numeric field");
  if (*n < 1) throw bad("n must be at least 1");
  if (*m < 1) throw bad("m must be at least 1");
  if (!is_prime(*k)) {
    throw ParseError(ParseError::Kind::kNonPrimeModulus, line.number,
                     "k=" + std::string(tok[1]) + " is not prime");
  }
  return {*k, *n, *m};
}

}  // namespace zhegalkin::text::detail
