#ifndef RINGNORM_WORD_HPP
#define RINGNORM_WORD_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Free-group words over generators g1, g2, ... : parsing, formatting, free
// reduction and the letter-level bookkeeping everything else builds on.
// Words are plain values; every operation returns a new word.

namespace ringnorm {

// Generator indices are 1-based and capped so malformed input fails loudly.
inline constexpr std::uint32_t kMaxGenerator = 65535;
// Word length cap: large enough for the biggest arc word we construct (n = 22).
inline constexpr std::size_t kMaxWordLetters = std::size_t{1} << 22;

// One generator symbol with a sign: g_k (sign +1) or g_k^-1 (sign -1).
struct Letter {
  std::uint16_t generator = 1;
  std::int8_t sign = +1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Letter inverse(Letter l) {
  l.sign = static_cast<std::int8_t>(-l.sign);
  return l;
}

// Checked Letter factory for runtime generator indices.
inline Letter letter(std::uint32_t generator, int sign) {
  if (generator == 0 || generator > kMaxGenerator)
    throw std::invalid_argument("generator index out of range: " +
                                std::to_string(generator));
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("letter sign must be +1 or -1");
  return Letter{static_cast<std::uint16_t>(generator),
                static_cast<std::int8_t>(sign)};
}

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void check_word_length(std::size_t n) {
  if (n > kMaxWordLetters)
    throw std::length_error("word exceeds " +
                            std::to_string(kMaxWordLetters) + " letters");
}

}  // namespace detail

// Parses the word grammar:
//   WORD  := "e" | TOKEN (SEP TOKEN)*
//   SEP   := whitespace+ | "*"
//   TOKEN := "g" INT ["^" NONZERO_INT]
// "g2^-3" expands to g2^-1 g2^-1 g2^-1. The spelled word is returned verbatim,
// without free reduction. "e" denotes the empty word and must stand alone.
inline Word parse(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '*')
      ++i;
    tokens.push_back(text.substr(start, i - start));
  }
  if (tokens.empty()) throw parse_error("empty input is not a word; use \"e\"");
  if (tokens.size() == 1 && tokens[0] == "e") return {};

  auto read_uint = [](std::string_view tok, std::size_t& pos) -> std::uint64_t {
    std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < tok.size() && tok[pos] >= '0' && tok[pos] <= '9') {
      value = value * 10 + static_cast<std::uint64_t>(tok[pos] - '0');
      if (value > kMaxWordLetters) value = kMaxWordLetters + 1;  // clamp, flag later
      ++pos;
    }
    if (pos == start) throw parse_error("expected digits in token");
    return value;
  };

  Word out;
  for (std::string_view tok : tokens) {
    if (tok == "e") throw parse_error("\"e\" must be the whole word");
    if (tok.empty() || tok[0] != 'g')
      throw parse_error("bad token \"" + std::string(tok) + "\"");
    std::size_t pos = 1;
    std::uint64_t gen;
    try {
      gen = read_uint(tok, pos);
    } catch (const parse_error&) {
      throw parse_error("bad token \"" + std::string(tok) + "\"");
    }
    if (gen == 0 || gen > kMaxGenerator)
      throw parse_error("generator index out of range in \"" +
                        std::string(tok) + "\"");
    std::int64_t exponent = 1;
    if (pos < tok.size()) {
      if (tok[pos] != '^')
        throw parse_error("bad token \"" + std::string(tok) + "\"");
      ++pos;
      bool negative = false;
      if (pos < tok.size() && tok[pos] == '-') {
        negative = true;
        ++pos;
      }
      std::uint64_t magnitude;
      try {
        magnitude = read_uint(tok, pos);
      } catch (const parse_error&) {
        throw parse_error("bad exponent in \"" + std::string(tok) + "\"");
      }
      if (pos != tok.size())
        throw parse_error("bad token \"" + std::string(tok) + "\"");
      if (magnitude == 0)
        throw parse_error("zero exponent in \"" + std::string(tok) + "\"");
      if (magnitude > kMaxWordLetters)
        throw std::length_error("exponent too large in \"" + std::string(tok) +
                                "\"");
      exponent = negative ? -static_cast<std::int64_t>(magnitude)
                          : static_cast<std::int64_t>(magnitude);
    }
    const Letter l = letter(static_cast<std::uint32_t>(gen),
                            exponent < 0 ? -1 : +1);
    const std::uint64_t count =
        exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                     : static_cast<std::uint64_t>(exponent);
    detail::check_word_length(out.size() + count);
    out.insert(out.end(), static_cast<std::size_t>(count), l);
  }
  return out;
}

// Inverse of parse. The empty word formats as "e"; inverses print as "g2^-1";
// positive letters never carry an exponent.
inline std::string format(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  out.reserve(w.size() * 4);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += 'g';
    out += std::to_string(w[i].generator);
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

inline bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == inverse(w[i])) return false;
  return true;
}

// Freely reduces w by a single left-to-right stack pass. Free reduction is
// confluent, so the scan order does not affect the result (the tests check
// this against randomized reduction orders rather than assuming it).
inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

inline Word concat(const Word& u, const Word& v, bool reduce) {
  detail::check_word_length(u.size() + v.size());
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return reduce ? free_reduce(out) : out;
}

// Erases every letter with generator d, then freely reduces: the projection
// that kills g_d, returned as a reduced word.
inline Word erase_generator(const Word& w, std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("generator index must be >= 1");
  Word kept;
  kept.reserve(w.size());
  std::copy_if(w.begin(), w.end(), std::back_inserter(kept),
               [d](const Letter& l) { return l.generator != d; });
  return free_reduce(kept);
}

// Number of letters with generator d, either sign.
inline std::size_t count_letters(const Word& w, std::uint32_t d) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(),
                    [d](const Letter& l) { return l.generator == d; }));
}

// (count of g_d) - (count of g_d^-1).
inline std::int64_t exponent_sum(const Word& w, std::uint32_t d) {
  std::int64_t sum = 0;
  for (const Letter& l : w)
    if (l.generator == d) sum += l.sign;
  return sum;
}

// Largest generator index appearing in w, or 0 for the empty word.
inline std::uint32_t max_generator(const Word& w) {
  std::uint32_t m = 0;
  for (const Letter& l : w) m = std::max<std::uint32_t>(m, l.generator);
  return m;
}

}  // namespace ringnorm

#endif  // RINGNORM_WORD_HPP
