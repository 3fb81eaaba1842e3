#ifndef RINGNORM_NORM_HPP
#define RINGNORM_NORM_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ringnorm/connection.hpp"
#include "ringnorm/sampling.hpp"
#include "ringnorm/word.hpp"

// The relator norm and metric. ||w|| is the minimal number of conjugates of
// g_d^{±1} whose product equals w (infinite off the kernel of the projection
// erasing g_d), and (x, y) = ||x y^{-1}||. Both are computed exactly through
// the connection DP, with explicit elementary-operation witnesses.

namespace ringnorm {

// One elementary operation: inserting or deleting a single conjugate
// c g_d^{sign} c^{-1}. For DELETE the position is the 1-based letter removed
// and the conjugator records the prefix of the word before it; for INSERT the
// position is a cut index 0..|w| where the conjugate is spliced in.
enum class OpKind { kInsert, kDelete };

struct ElementaryOp {
  OpKind kind = OpKind::kDelete;
  std::size_t position = 0;
  int sign = +1;
  Word conjugator;

  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

// A norm or metric value plus the elementary operations realizing it.
// witness_ops is present exactly when the value is finite.
struct MetricResult {
  std::uint32_t value = kInfNorm;
  std::optional<std::vector<ElementaryOp>> witness_ops;

  bool is_finite() const { return value != kInfNorm; }
};

namespace detail {

// Single-letter DELETE ops at the unconnected positions of a minimal
// connection, highest position first so earlier positions stay valid as the
// ops are applied in order. Each op's conjugator is the prefix before the
// deleted letter, which deletions at higher positions do not disturb.
inline std::vector<ElementaryOp> deletion_ops(const Word& w,
                                              const Connection& c) {
  std::vector<bool> covered(w.size() + 1, false);
  for (const auto& arc : c.arcs) covered[arc.first] = covered[arc.second] = true;
  std::vector<ElementaryOp> ops;
  for (std::size_t p = w.size(); p >= 1; --p) {
    if (covered[p]) continue;
    ElementaryOp op;
    op.kind = OpKind::kDelete;
    op.position = p;
    op.sign = w[p - 1].sign;
    op.conjugator = Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p - 1));
    ops.push_back(std::move(op));
  }
  return ops;
}

}  // namespace detail

// ||w|| with distinguished generator d, with DELETE-only witness ops that
// transform w itself into a freely trivial word. Accepts unreduced words;
// the norm is invariant under free reduction.
inline MetricResult relator_norm(const Word& w, std::uint32_t d) {
  const NormResult nr = min_norm(w, d);
  MetricResult result;
  result.value = nr.value;
  if (nr.is_finite()) result.witness_ops = detail::deletion_ops(w, *nr.witness);
  return result;
}

// The metric (x, y) = ||x y^{-1}||: minimal elementary operations
// transforming x into y. Finite exactly when x and y have the same image
// under the projection erasing g_d. The witness ops act on the reduced
// product x y^{-1} (transforming it to the empty word), not on x.
inline MetricResult metric(const Word& x, const Word& y, std::uint32_t d) {
  return relator_norm(concat(x, invert(y), true), d);
}

// The DELETE-only witness for a kernel word: applying the ops in order to w
// and freely reducing yields the empty word. Throws if ||w|| is infinite.
inline std::vector<ElementaryOp> witness_ops(const Word& w, std::uint32_t d) {
  MetricResult result = relator_norm(w, d);
  if (!result.is_finite())
    throw std::domain_error("witness requested for a word of infinite norm");
  return std::move(*result.witness_ops);
}

// Applies one elementary operation with distinguished generator d. INSERT
// splices conjugator g_d^{sign} conjugator^{-1} at the cut; DELETE removes
// the single designated letter. The result is not freely reduced.
inline Word apply_op(const Word& w, const ElementaryOp& op, std::uint32_t d) {
  if (op.kind == OpKind::kInsert) {
    if (op.position > w.size())
      throw std::out_of_range("INSERT cut index past the end of the word");
    const Word& c = op.conjugator;
    detail::check_word_length(w.size() + 2 * c.size() + 1);
    Word out;
    out.reserve(w.size() + 2 * c.size() + 1);
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(op.position));
    out.insert(out.end(), c.begin(), c.end());
    out.push_back(letter(d, op.sign));
    const Word ci = invert(c);
    out.insert(out.end(), ci.begin(), ci.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(op.position), w.end());
    return out;
  }
  if (op.position < 1 || op.position > w.size())
    throw std::out_of_range("DELETE position out of range");
  if (w[op.position - 1].generator != d)
    throw std::invalid_argument("DELETE at position " +
                                std::to_string(op.position) +
                                " whose letter is not the relator");
  Word out = w;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(op.position - 1));
  return out;
}

// True iff applying ops in order to w yields a word freely equal to target.
// Op application failures surface as false, with a note in *diagnostic.
inline bool verify_witness(const Word& w, const std::vector<ElementaryOp>& ops,
                           const Word& target, std::uint32_t d,
                           std::string* diagnostic = nullptr) {
  Word current = w;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    try {
      current = apply_op(current, ops[i], d);
    } catch (const std::exception& e) {
      if (diagnostic)
        *diagnostic = "op " + std::to_string(i + 1) + " failed: " + e.what();
      return false;
    }
  }
  if (free_reduce(current) != free_reduce(target)) {
    if (diagnostic) *diagnostic = "result is not freely equal to the target";
    return false;
  }
  return true;
}

// Builds w = g_d^{a0} b1 g_d^{a1} ... bk g_d^{ak} from the exponents and a
// reduced base word b free of g_d, and returns the metric (w, b), which must
// equal sum |a_i|. A mismatch means the solver is broken, so it throws.
inline std::uint32_t interleaved_metric(const std::vector<int>& alphas,
                                        const Word& b, std::uint32_t d) {
  if (!is_reduced(b))
    throw std::invalid_argument("base word must be reduced");
  if (count_letters(b, d) != 0)
    throw std::invalid_argument("base word must not contain the relator");
  if (alphas.size() != b.size() + 1)
    throw std::invalid_argument("need exactly |b| + 1 exponents");
  Word w;
  std::uint64_t expected = 0;
  for (std::size_t i = 0; i <= b.size(); ++i) {
    const int a = alphas[i];
    const std::size_t magnitude = static_cast<std::size_t>(a < 0 ? -static_cast<std::int64_t>(a) : a);
    expected += magnitude;
    w.insert(w.end(), magnitude, letter(d, a < 0 ? -1 : +1));
    if (i < b.size()) w.push_back(b[i]);
  }
  const MetricResult m = metric(w, b, d);
  if (m.value != expected)
    throw std::logic_error("interleaved metric mismatch: solver returned " +
                           std::to_string(m.value) + ", exponents sum to " +
                           std::to_string(expected));
  return static_cast<std::uint32_t>(expected);
}

// Outcome of the seeded norm/metric axiom sweep. Counterexamples hold the
// offending words verbatim; an empty list means every axiom held.
struct AxiomReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::vector<std::string> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

// Checks, on seeded random words over three generators with relator g3:
// zero norm exactly for trivial words, ||w^{-1}|| = ||w||,
// ||vw|| <= ||v|| + ||w||, metric symmetry, the triangle inequality on
// same-fiber triples, and finiteness exactly on equal projections.
inline AxiomReport check_norm_axioms(std::size_t sample_count,
                                     std::size_t max_len, std::uint64_t seed) {
  constexpr std::uint32_t kGenerators = 3;
  constexpr std::uint32_t kRelator = 3;
  AxiomReport report;
  report.seed = seed;
  report.samples = sample_count;
  std::mt19937_64 rng(seed);

  auto fail = [&report](std::string message) {
    report.counterexamples.push_back(std::move(message));
  };

  for (std::size_t s = 0; s < sample_count; ++s) {
    const Word w = random_word(rng, max_len, kGenerators);
    const Word v = random_word(rng, max_len, kGenerators);
    const Word k1 = random_kernel_word(rng, kRelator, kGenerators, 1 + pick(rng, 2), 3);
    const Word k2 = random_kernel_word(rng, kRelator, kGenerators, 1 + pick(rng, 2), 3);

    const std::uint32_t norm_w = relator_norm(w, kRelator).value;
    const std::uint32_t norm_v = relator_norm(v, kRelator).value;

    // (a) zero norm exactly for freely trivial words
    ++report.checks;
    if ((norm_w == 0) != free_reduce(w).empty())
      fail("zero norm mismatch: w=\"" + format(w) + "\" norm=" +
           std::to_string(norm_w));

    // (c) inversion invariance
    ++report.checks;
    if (relator_norm(invert(w), kRelator).value != norm_w)
      fail("inversion changed the norm: w=\"" + format(w) + "\"");

    // (b) subadditivity
    ++report.checks;
    const std::uint32_t norm_vw = relator_norm(concat(v, w, false), kRelator).value;
    if (add_norm(norm_v, norm_w) != kInfNorm && norm_vw > norm_v + norm_w)
      fail("subadditivity failed: v=\"" + format(v) + "\" w=\"" + format(w) +
           "\" ||vw||=" + std::to_string(norm_vw));

    // metric symmetry, on a same-fiber pair and on an arbitrary pair
    const Word y = concat(w, k1, true);
    const Word z = concat(w, k2, true);
    ++report.checks;
    if (metric(w, y, kRelator).value != metric(y, w, kRelator).value)
      fail("metric asymmetry: x=\"" + format(w) + "\" y=\"" + format(y) + "\"");
    ++report.checks;
    if (metric(w, v, kRelator).value != metric(v, w, kRelator).value)
      fail("metric asymmetry: x=\"" + format(w) + "\" y=\"" + format(v) + "\"");

    // triangle inequality on the same-fiber triple (w, y, z)
    ++report.checks;
    const std::uint32_t xz = metric(w, z, kRelator).value;
    const std::uint32_t xy = metric(w, y, kRelator).value;
    const std::uint32_t yz = metric(y, z, kRelator).value;
    if (add_norm(xy, yz) != kInfNorm && xz > xy + yz)
      fail("triangle inequality failed: x=\"" + format(w) + "\" y=\"" +
           format(y) + "\" z=\"" + format(z) + "\"");

    // finiteness exactly on equal projections
    ++report.checks;
    const bool same_fiber =
        erase_generator(w, kRelator) == erase_generator(v, kRelator);
    if (metric(w, v, kRelator).is_finite() != same_fiber)
      fail("finiteness mismatch: x=\"" + format(w) + "\" y=\"" + format(v) +
           "\"");
  }
  return report;
}

// Result of the breadth-first lower-bound probe. value is empty when the
// caps prune every path (NOT_FOUND); budget_exceeded reports that the state
// budget ran out before the search finished, which is not an error.
struct ProbeResult {
  std::optional<std::uint32_t> value;
  bool budget_exceeded = false;
};

namespace detail {

inline std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.size() * 3);
  for (const Letter& l : w) {
    key.push_back(static_cast<char>(l.generator & 0xff));
    key.push_back(static_cast<char>(l.generator >> 8));
    key.push_back(static_cast<char>(l.sign + 2));
  }
  return key;
}

// All freely reduced conjugator candidates of length <= max_len over the
// first num_generators generators, in breadth-first order.
inline std::vector<Word> reduced_words_up_to(std::size_t max_len,
                                             std::uint32_t num_generators) {
  std::vector<Word> all{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = all.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::uint32_t g = 1; g <= num_generators; ++g) {
        for (int sign : {+1, -1}) {
          const Letter l = letter(g, sign);
          if (!all[i].empty() && l == inverse(all[i].back())) continue;
          Word next = all[i];
          next.push_back(l);
          all.push_back(std::move(next));
        }
      }
    }
    level_begin = level_end;
  }
  return all;
}

}  // namespace detail

// Breadth-first search for the shortest sequence of elementary operations
// (single-letter DELETEs of g_d^{±1}, and INSERTs of conjugates with
// conjugator length <= max_conj_len) taking w to a freely trivial word,
// exploring only states whose reduced length stays <= max_word_len. This is
// an empirical probe of the norm's lower bound, not a norm computation: the
// caps make it incomplete by construction.
inline ProbeResult bounded_insert_probe(const Word& w, std::uint32_t d,
                                        std::size_t max_word_len,
                                        std::size_t max_conj_len,
                                        std::size_t max_states = 1000000) {
  if (d == 0) throw std::invalid_argument("distinguished generator must be >= 1");
  const Word start = free_reduce(w);
  if (start.empty()) return ProbeResult{0, false};

  const std::uint32_t num_generators = std::max(max_generator(w), d);
  const std::vector<Word> conjugators =
      detail::reduced_words_up_to(max_conj_len, num_generators);

  std::unordered_set<std::string> visited{detail::word_key(start)};
  std::deque<std::pair<Word, std::uint32_t>> queue{{start, 0}};

  // Returns true when the neighbor is the goal; otherwise enqueues it.
  auto visit = [&](Word&& next, std::uint32_t depth) {
    if (next.empty()) return true;
    if (next.size() > max_word_len) return false;
    std::string key = detail::word_key(next);
    if (visited.contains(key)) return false;
    visited.insert(std::move(key));
    queue.emplace_back(std::move(next), depth);
    return false;
  };

  while (!queue.empty()) {
    if (visited.size() > max_states) return ProbeResult{std::nullopt, true};
    const auto [state, depth] = queue.front();
    queue.pop_front();

    // Deletions first: they are the moves a minimal witness needs.
    for (std::size_t p = 0; p < state.size(); ++p) {
      if (state[p].generator != d) continue;
      Word next = state;
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(p));
      if (visit(free_reduce(next), depth + 1))
        return ProbeResult{depth + 1, false};
    }
    for (std::size_t cut = 0; cut <= state.size(); ++cut) {
      for (int sign : {+1, -1}) {
        for (const Word& c : conjugators) {
          ElementaryOp op{OpKind::kInsert, cut, sign, c};
          if (visit(free_reduce(apply_op(state, op, d)), depth + 1))
            return ProbeResult{depth + 1, false};
        }
      }
    }
  }
  return ProbeResult{std::nullopt, false};
}

}  // namespace ringnorm

#endif  // RINGNORM_NORM_HPP
