#ifndef RINGNORM_CONNECTION_HPP
#define RINGNORM_CONNECTION_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ringnorm/word.hpp"

// Connections on a word: non-crossing sets of arcs, each joining a letter to
// an inverse letter, where only letters of one distinguished generator may
// stay unconnected. The minimum number of unconnected letters over all
// connections equals the relator norm of the word, and this module computes
// that minimum exactly by interval dynamic programming, alongside two
// independent brute-force routes used to cross-check it.

namespace ringnorm {

// Sentinel for "no connection exists".
inline constexpr std::uint32_t kInfNorm =
    std::numeric_limits<std::uint32_t>::max();

// The O(L^2) DP table is the memory bottleneck; 4096 letters is ~64 MB.
inline constexpr std::size_t kMaxDpLetters = 4096;
// Exhaustive deletion search is exponential in the distinguished-letter count.
inline constexpr std::size_t kMaxOracleLetters = 22;

inline std::uint32_t add_norm(std::uint32_t a, std::uint32_t b) {
  return (a == kInfNorm || b == kInfNorm) ? kInfNorm : a + b;
}

// A non-crossing inverse-pair matching on the positions of a word, with
// letters of the distinguished generator allowed to stay unmatched.
// Positions are 1-based; arcs satisfy i < j and are kept sorted.
struct Connection {
  std::size_t word_length = 0;
  std::uint32_t distinguished = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;

  friend bool operator==(const Connection&, const Connection&) = default;
};

// The norm of a connection: how many letters it leaves unconnected.
inline std::uint32_t connection_norm(const Connection& c) {
  if (2 * c.arcs.size() > c.word_length)
    throw std::invalid_argument("connection has more arc endpoints than letters");
  return static_cast<std::uint32_t>(c.word_length - 2 * c.arcs.size());
}

// Checks every Connection invariant against w. Returns one message per
// violation; an empty list means the connection is valid.
inline std::vector<std::string> validate_connection(const Word& w,
                                                    const Connection& c) {
  std::vector<std::string> violations;
  if (c.word_length != w.size()) {
    violations.push_back("word length mismatch: connection says " +
                         std::to_string(c.word_length) + ", word has " +
                         std::to_string(w.size()) + " letters");
    return violations;
  }
  auto arc_str = [](std::pair<std::size_t, std::size_t> a) {
    return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
  };
  std::vector<bool> covered(w.size() + 1, false);
  for (const auto& arc : c.arcs) {
    if (arc.first < 1 || arc.second > w.size() || arc.first >= arc.second) {
      violations.push_back("arc " + arc_str(arc) + " is out of bounds");
      continue;
    }
    if (covered[arc.first] || covered[arc.second])
      violations.push_back("arc " + arc_str(arc) +
                           " shares an endpoint with another arc");
    covered[arc.first] = covered[arc.second] = true;
    if (w[arc.first - 1] != inverse(w[arc.second - 1]))
      violations.push_back("arc " + arc_str(arc) +
                           " does not join a letter to its inverse");
  }
  for (std::size_t a = 0; a < c.arcs.size(); ++a)
    for (std::size_t b = a + 1; b < c.arcs.size(); ++b) {
      const auto& [i, j] = c.arcs[a];
      const auto& [k, l] = c.arcs[b];
      if ((i < k && k < j && j < l) || (k < i && i < l && l < j))
        violations.push_back("arcs " + arc_str(c.arcs[a]) + " and " +
                             arc_str(c.arcs[b]) + " cross");
    }
  for (std::size_t p = 1; p <= w.size(); ++p)
    if (!covered[p] && w[p - 1].generator != c.distinguished)
      violations.push_back("position " + std::to_string(p) + " (" +
                           format(Word{w[p - 1]}) +
                           ") is unconnected but not the distinguished generator");
  return violations;
}

// A minimum norm value together with a connection that achieves it.
// The witness is present exactly when the value is finite.
struct NormResult {
  std::uint32_t value = kInfNorm;
  std::optional<Connection> witness;

  bool is_finite() const { return value != kInfNorm; }
};

namespace detail {

// Interval DP over half-open letter ranges [i, j), 0-based:
//   N(i, i) = 0
//   N(i, j) = min of
//     1 + N(i+1, j)              when letter i has the distinguished generator
//     N(i+1, k) + N(k+1, j)      for i < k < j with letter k = inverse(letter i)
// The first case leaves letter i unconnected; the second draws the arc (i, k),
// which non-crossing arcs split into independent inside and outside ranges.
class NormTable {
 public:
  NormTable(const Word& w, std::uint32_t d) : word_(w), d_(d), stride_(w.size() + 1) {
    const std::size_t n = word_.size();
    cells_.assign(stride_ * stride_, 0);
    for (std::size_t len = 1; len <= n; ++len) {
      for (std::size_t i = 0; i + len <= n; ++i) {
        const std::size_t j = i + len;
        std::uint32_t best = kInfNorm;
        if (word_[i].generator == d_) best = add_norm(1, at(i + 1, j));
        for (std::size_t k = i + 1; k < j; ++k) {
          if (word_[k] == inverse(word_[i]))
            best = std::min(best, add_norm(at(i + 1, k), at(k + 1, j)));
        }
        cells_[i * stride_ + j] = best;
      }
    }
  }

  std::uint32_t at(std::size_t i, std::size_t j) const {
    return cells_[i * stride_ + j];
  }

  // Re-derives one optimal connection from the finished table. Ties prefer
  // leaving the first letter unconnected, then the smallest matching k, so
  // the witness is deterministic.
  std::vector<std::pair<std::size_t, std::size_t>> trace() const {
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    std::vector<std::pair<std::size_t, std::size_t>> work{{0, word_.size()}};
    while (!work.empty()) {
      const auto [i, j] = work.back();
      work.pop_back();
      if (i == j) continue;
      const std::uint32_t cell = at(i, j);
      if (word_[i].generator == d_ && add_norm(1, at(i + 1, j)) == cell) {
        work.emplace_back(i + 1, j);
        continue;
      }
      bool matched = false;
      for (std::size_t k = i + 1; k < j; ++k) {
        if (word_[k] == inverse(word_[i]) &&
            add_norm(at(i + 1, k), at(k + 1, j)) == cell) {
          arcs.emplace_back(i + 1, k + 1);  // to 1-based
          work.emplace_back(i + 1, k);
          work.emplace_back(k + 1, j);
          matched = true;
          break;
        }
      }
      if (!matched) throw std::logic_error("norm witness trace failed");
    }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
  }

 private:
  const Word& word_;
  std::uint32_t d_;
  std::size_t stride_;
  std::vector<std::uint32_t> cells_;
};

}  // namespace detail

// Minimum connection norm on w with distinguished generator d, with a witness
// achieving it. The value is finite exactly when erasing g_d from w leaves a
// freely trivial word; the word need not be reduced. O(L^3) time, O(L^2) space.
inline NormResult min_norm(const Word& w, std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("distinguished generator must be >= 1");
  if (w.size() > kMaxDpLetters)
    throw std::length_error("word too long for the interval DP (max " +
                            std::to_string(kMaxDpLetters) + " letters)");
  const detail::NormTable table(w, d);
  NormResult result;
  result.value = table.at(0, w.size());
  if (result.value != kInfNorm)
    result.witness = Connection{w.size(), d, table.trace()};
  return result;
}

// enumerate_connections result: all connections found, and whether the
// search was cut off by the cap (truncated) rather than finishing.
struct ConnectionEnumeration {
  std::vector<Connection> connections;
  bool truncated = false;
};

// Enumerates every connection on w exactly once by depth-first backtracking
// over the same decomposition the DP uses: the first letter of the leftmost
// open range is either left unconnected (tried first) or joined to each
// matching k in ascending order. Stops after cap connections.
inline ConnectionEnumeration enumerate_connections(const Word& w,
                                                   std::uint32_t d,
                                                   std::size_t cap) {
  if (d == 0) throw std::invalid_argument("distinguished generator must be >= 1");
  ConnectionEnumeration result;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;

  using Ranges = std::vector<std::pair<std::size_t, std::size_t>>;
  // Returns false once the cap is hit and the search should unwind.
  auto dfs = [&](auto&& self, Ranges pending) -> bool {
    while (!pending.empty() && pending.front().first == pending.front().second)
      pending.erase(pending.begin());
    if (pending.empty()) {
      if (result.connections.size() == cap) {
        result.truncated = true;
        return false;
      }
      Connection c{w.size(), d, arcs};
      std::sort(c.arcs.begin(), c.arcs.end());
      result.connections.push_back(std::move(c));
      return true;
    }
    const auto [i, j] = pending.front();
    if (w[i].generator == d) {
      Ranges next = pending;
      next.front().first = i + 1;
      if (!self(self, std::move(next))) return false;
    }
    for (std::size_t k = i + 1; k < j; ++k) {
      if (w[k] != inverse(w[i])) continue;
      arcs.emplace_back(i + 1, k + 1);  // to 1-based
      Ranges next = pending;
      next.front() = {i + 1, k};
      next.insert(next.begin() + 1, {k + 1, j});
      const bool keep_going = self(self, std::move(next));
      arcs.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  dfs(dfs, Ranges{{0, w.size()}});
  return result;
}

// Independent oracle for the minimum norm: the smallest number of
// distinguished-generator letters whose deletion leaves a word that freely
// reduces to the empty word. Searches subsets in increasing size, so the
// first hit is the minimum. Shares no machinery with the DP.
inline std::uint32_t subset_oracle(const Word& w, std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("distinguished generator must be >= 1");
  std::vector<std::size_t> dpos;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].generator == d) dpos.push_back(i);
  const std::size_t m = dpos.size();
  if (m > kMaxOracleLetters)
    throw std::invalid_argument("too many distinguished letters for the "
                                "exhaustive oracle (max " +
                                std::to_string(kMaxOracleLetters) + ")");

  auto trivial_after_deleting = [&](std::uint64_t mask) {
    Word rest;
    rest.reserve(w.size());
    std::size_t di = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (di < m && dpos[di] == i) {
        const bool deleted = (mask >> di) & 1;
        ++di;
        if (deleted) continue;
      }
      rest.push_back(w[i]);
    }
    return free_reduce(rest).empty();
  };

  for (std::size_t size = 0; size <= m; ++size) {
    if (size == 0) {
      if (trivial_after_deleting(0)) return 0;
      continue;
    }
    // Gosper's hack walks all masks of the given popcount in increasing order.
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    while (mask < (std::uint64_t{1} << m)) {
      if (trivial_after_deleting(mask))
        return static_cast<std::uint32_t>(size);
      const std::uint64_t low = mask & ~(mask - 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return kInfNorm;
}

}  // namespace ringnorm

#endif  // RINGNORM_CONNECTION_HPP
