#ifndef RINGNORM_RINGS_HPP
#define RINGNORM_RINGS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringnorm/word.hpp"

// The Chinese Rings side of the library: the arc word a_n of the n-column
// puzzle, its inductive construction, the puzzle's minimal move count, and
// the canonical untangling witness (delete every g_n letter).

namespace ringnorm {

// Construction stays fast and small up to n = 22 (|a_22| is ~4M letters);
// the statistic checks recompute a_{n-1} and are capped lower.
inline constexpr unsigned kMaxArcWordIndex = 22;
inline constexpr unsigned kMaxArcCheckIndex = 16;
inline constexpr unsigned kMaxComplexityIndex = 62;

// Statistics of a_n gathered by arc_word_report().
struct RingsReport {
  unsigned n = 0;
  std::size_t arc_length = 0;               // expected 2^n - 1
  std::uint64_t g_n_count = 0;              // expected 2^(n-1)
  bool reduced = false;
  bool projection_matches_previous = false;  // erasing g_n recovers a_{n-1}
};

// Replaces every g_k^{s} in w by the block g_{k+1} g_k^{s} g_{k+1}^{-1};
// all other letters pass through unchanged.
inline Word substitute_conjugate(const Word& w, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("generator index must be >= 1");
  if (k >= kMaxGenerator)
    throw std::invalid_argument("substitution would exceed the generator cap");
  const Letter outer = letter(k + 1, +1);
  detail::check_word_length(w.size() + 2 * count_letters(w, k));
  Word out;
  out.reserve(w.size() + 2 * count_letters(w, k));
  for (const Letter& l : w) {
    if (l.generator == k) {
      out.push_back(outer);
      out.push_back(l);
      out.push_back(inverse(outer));
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// The arc word a_n: a_1 = g1, and a_{n+1} is a_n with every g_n^{±1}
// replaced by g_{n+1} g_n^{±1} g_{n+1}^{-1}. Returned exactly as spelled by
// the construction (it is already reduced; no reduction is applied).
inline Word arc_word(unsigned n) {
  if (n < 1 || n > kMaxArcWordIndex)
    throw std::invalid_argument("arc_word index must be in 1.." +
                                std::to_string(kMaxArcWordIndex));
  Word w{letter(1, +1)};
  for (unsigned k = 1; k < n; ++k) w = substitute_conjugate(w, k);
  return w;
}

// Minimal number of elementary moves needed to untangle the n-column puzzle.
inline std::uint64_t complexity(unsigned n) {
  if (n < 1 || n > kMaxComplexityIndex)
    throw std::invalid_argument("complexity index must be in 1.." +
                                std::to_string(kMaxComplexityIndex));
  return std::uint64_t{1} << (n - 1);
}

// Recomputes the a_n statistics from scratch: length, g_n count, reducedness,
// and whether erasing g_n recovers a_{n-1} (a_0 is the empty word).
inline RingsReport arc_word_report(unsigned n) {
  if (n < 1 || n > kMaxArcCheckIndex)
    throw std::invalid_argument("report index must be in 1.." +
                                std::to_string(kMaxArcCheckIndex));
  const Word an = arc_word(n);
  RingsReport report;
  report.n = n;
  report.arc_length = an.size();
  report.g_n_count = count_letters(an, n);
  report.reduced = is_reduced(an);
  const Word previous = n == 1 ? Word{} : arc_word(n - 1);
  report.projection_matches_previous = erase_generator(an, n) == previous;
  return report;
}

// 1-based positions of all g_n^{±1} letters in a_n. Deleting exactly these
// letters turns a_n into a_{n-1} letter for letter; there are 2^(n-1) of them.
inline std::vector<std::size_t> untangle_witness(unsigned n) {
  if (n < 2 || n > kMaxArcCheckIndex)
    throw std::invalid_argument("untangle witness index must be in 2.." +
                                std::to_string(kMaxArcCheckIndex));
  const Word an = arc_word(n);
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < an.size(); ++i)
    if (an[i].generator == n) positions.push_back(i + 1);
  return positions;
}

}  // namespace ringnorm

#endif  // RINGNORM_RINGS_HPP
