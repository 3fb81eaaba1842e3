#ifndef RINGNORM_SAMPLING_HPP
#define RINGNORM_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "ringnorm/word.hpp"

// Seeded word samplers shared by the randomized checkers and the test suites.
// All draws go through pick() so a seed reproduces the same words everywhere.

namespace ringnorm {

// Uniform draw from [0, n). Avoids std::uniform_int_distribution, whose
// output is not pinned by the standard; mt19937_64 itself is.
inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

// Arbitrary word: length uniform in [0, max_len], letters uniform over the
// first num_generators generators with random sign. May be unreduced.
inline Word random_word(std::mt19937_64& rng, std::size_t max_len,
                        std::uint32_t num_generators) {
  const std::size_t len = pick(rng, max_len + 1);
  Word w;
  w.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    w.push_back(letter(1 + static_cast<std::uint32_t>(pick(rng, num_generators)),
                       pick(rng, 2) ? +1 : -1));
  return w;
}

// Reduced word of length exactly len (built letter by letter, never emitting
// the inverse of the previous letter).
inline Word random_reduced_word(std::mt19937_64& rng, std::size_t len,
                                std::uint32_t num_generators) {
  Word w;
  w.reserve(len);
  while (w.size() < len) {
    const Letter l =
        letter(1 + static_cast<std::uint32_t>(pick(rng, num_generators)),
               pick(rng, 2) ? +1 : -1);
    if (!w.empty() && l == inverse(w.back())) continue;
    w.push_back(l);
  }
  return w;
}

// A word in the kernel of the projection that erases g_d: a product of
// num_conjugates conjugates c g_d^{±1} c^{-1} with |c| <= max_conj_len,
// freely reduced. Its norm is therefore at most num_conjugates.
inline Word random_kernel_word(std::mt19937_64& rng, std::uint32_t d,
                               std::uint32_t num_generators,
                               std::size_t num_conjugates,
                               std::size_t max_conj_len) {
  Word w;
  for (std::size_t i = 0; i < num_conjugates; ++i) {
    const Word c = random_word(rng, max_conj_len, num_generators);
    const Word relator{letter(d, pick(rng, 2) ? +1 : -1)};
    w = concat(w, concat(c, concat(relator, invert(c), false), false), false);
  }
  return free_reduce(w);
}

}  // namespace ringnorm

#endif  // RINGNORM_SAMPLING_HPP
