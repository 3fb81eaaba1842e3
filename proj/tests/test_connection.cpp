#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ringnorm/connection.hpp"
#include "ringnorm/rings.hpp"
#include "ringnorm/sampling.hpp"
#include "ringnorm/word.hpp"

using namespace ringnorm;

namespace {

using Arcs = std::vector<std::pair<std::size_t, std::size_t>>;

// The seven-letter running example, instantiated with n = 2:
// g1 gn g1^-1 gn g1 gn^-1 g1^-1.
const Word kSeven = parse("g1 g2 g1^-1 g2 g1 g2^-1 g1^-1");

std::uint32_t enumeration_minimum(const Word& w, std::uint32_t d) {
  const ConnectionEnumeration e = enumerate_connections(w, d, 2000000);
  REQUIRE_FALSE(e.truncated);
  std::uint32_t best = kInfNorm;
  for (const Connection& c : e.connections)
    best = std::min(best, connection_norm(c));
  return best;
}

}  // namespace

TEST_CASE("both running-example connections validate") {
  const Connection three{7, 2, Arcs{{1, 3}, {5, 7}}};
  CHECK(validate_connection(kSeven, three).empty());
  CHECK(connection_norm(three) == 3);

  const Connection one{7, 2, Arcs{{1, 7}, {2, 6}, {3, 5}}};
  CHECK(validate_connection(kSeven, one).empty());
  CHECK(connection_norm(one) == 1);
}

TEST_CASE("validate_connection reports violations") {
  // shared endpoint
  auto v = validate_connection(kSeven, Connection{7, 2, Arcs{{1, 3}, {3, 5}}});
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].find("shares an endpoint") != std::string::npos);

  // crossing arcs
  v = validate_connection(kSeven, Connection{7, 2, Arcs{{1, 3}, {2, 6}}});
  bool found_cross = false;
  for (const auto& msg : v) found_cross |= msg.find("cross") != std::string::npos;
  CHECK(found_cross);

  // arc endpoints must hold inverse letters (positions 1 and 5 are both g1)
  v = validate_connection(kSeven, Connection{7, 2, Arcs{{1, 5}}});
  bool found_inverse = false;
  for (const auto& msg : v)
    found_inverse |= msg.find("inverse") != std::string::npos;
  CHECK(found_inverse);

  // unconnected letters must carry the distinguished generator
  v = validate_connection(kSeven, Connection{7, 2, Arcs{{2, 6}}});
  bool found_unconnected = false;
  for (const auto& msg : v)
    found_unconnected |= msg.find("unconnected") != std::string::npos;
  CHECK(found_unconnected);

  // out-of-bounds and unordered arcs
  v = validate_connection(kSeven, Connection{7, 2, Arcs{{5, 3}}});
  CHECK_FALSE(v.empty());
  v = validate_connection(kSeven, Connection{7, 2, Arcs{{1, 8}}});
  CHECK_FALSE(v.empty());

  // length mismatch is reported before anything else
  v = validate_connection(kSeven, Connection{6, 2, {}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].find("length mismatch") != std::string::npos);
}

TEST_CASE("connection_norm counts unconnected letters") {
  CHECK(connection_norm(Connection{7, 2, Arcs{{1, 3}, {5, 7}}}) == 3);
  CHECK(connection_norm(Connection{7, 2, Arcs{{1, 7}, {2, 6}, {3, 5}}}) == 1);
  CHECK(connection_norm(Connection{0, 1, {}}) == 0);
  CHECK_THROWS_AS(connection_norm(Connection{1, 1, Arcs{{1, 2}}}),
                  std::invalid_argument);
}

TEST_CASE("min_norm on the running example") {
  const NormResult r = min_norm(kSeven, 2);
  CHECK(r.value == 1);
  REQUIRE(r.witness.has_value());
  CHECK(validate_connection(kSeven, *r.witness).empty());
  CHECK(connection_norm(*r.witness) == 1);
  // deterministic tie-breaking pins the exact witness
  CHECK(r.witness->arcs == Arcs{{1, 7}, {2, 6}, {3, 5}});
}

TEST_CASE("min_norm edge cases") {
  const NormResult empty = min_norm(Word{}, 3);
  CHECK(empty.value == 0);
  REQUIRE(empty.witness.has_value());
  CHECK(empty.witness->arcs.empty());

  CHECK(min_norm(parse("g1"), 2).value == kInfNorm);
  CHECK_FALSE(min_norm(parse("g1"), 2).witness.has_value());

  CHECK(min_norm(parse("g2"), 2).value == 1);
  CHECK(min_norm(parse("g2 g1 g2^-1 g1^-1"), 2).value == 2);

  // unreduced words are fine
  CHECK(min_norm(parse("g1 g1^-1"), 2).value == 0);
  CHECK(min_norm(parse("g2 g2^-1"), 2).value == 0);

  CHECK_THROWS_AS(min_norm(parse("g1"), 0), std::invalid_argument);
  CHECK_THROWS_AS(min_norm(Word(kMaxDpLetters + 1, letter(1, +1)), 1),
                  std::length_error);
}

TEST_CASE("min_norm reproduces the puzzle values for small n") {
  for (unsigned n = 2; n <= 5; ++n) {
    const Word w = concat(arc_word(n), invert(arc_word(n - 1)), true);
    const NormResult r = min_norm(w, n);
    CHECK(r.value == complexity(n));
    REQUIRE(r.witness.has_value());
    CHECK(validate_connection(w, *r.witness).empty());
  }
}

TEST_CASE("enumerate_connections basics") {
  const ConnectionEnumeration e = enumerate_connections(kSeven, 2, 1000000);
  CHECK_FALSE(e.truncated);
  CHECK_FALSE(e.connections.empty());

  // every enumerated connection is valid and distinct
  std::set<Arcs> seen;
  for (const Connection& c : e.connections) {
    CHECK(validate_connection(kSeven, c).empty());
    CHECK(seen.insert(c.arcs).second);
  }
  // both printed connections appear
  CHECK(seen.count(Arcs{{1, 3}, {5, 7}}) == 1);
  CHECK(seen.count(Arcs{{1, 7}, {2, 6}, {3, 5}}) == 1);

  // deterministic order
  const ConnectionEnumeration again = enumerate_connections(kSeven, 2, 1000000);
  CHECK(again.connections == e.connections);
}

TEST_CASE("enumerate_connections forced and empty cases") {
  const ConnectionEnumeration empty = enumerate_connections(Word{}, 1, 10);
  CHECK(empty.connections.size() == 1);
  CHECK(empty.connections[0].arcs.empty());
  CHECK_FALSE(empty.truncated);

  const ConnectionEnumeration forced =
      enumerate_connections(parse("g1 g1^-1"), 2, 10);
  REQUIRE(forced.connections.size() == 1);
  CHECK(forced.connections[0].arcs == Arcs{{1, 2}});

  // a word with no connection at all
  CHECK(enumerate_connections(parse("g1"), 2, 10).connections.empty());
}

TEST_CASE("enumerate_connections cap is signaled distinctly from exhaustion") {
  const std::size_t total =
      enumerate_connections(kSeven, 2, 1000000).connections.size();
  REQUIRE(total > 2);

  const ConnectionEnumeration capped = enumerate_connections(kSeven, 2, 2);
  CHECK(capped.connections.size() == 2);
  CHECK(capped.truncated);

  const ConnectionEnumeration exact = enumerate_connections(kSeven, 2, total);
  CHECK(exact.connections.size() == total);
  CHECK_FALSE(exact.truncated);

  const ConnectionEnumeration one_short =
      enumerate_connections(kSeven, 2, total - 1);
  CHECK(one_short.connections.size() == total - 1);
  CHECK(one_short.truncated);
}

TEST_CASE("subset_oracle") {
  CHECK(subset_oracle(kSeven, 2) == 1);
  CHECK(subset_oracle(parse("g2"), 2) == 1);
  CHECK(subset_oracle(parse("g1"), 2) == kInfNorm);
  CHECK(subset_oracle(Word{}, 1) == 0);
  CHECK(subset_oracle(parse("g1 g1^-1"), 2) == 0);
  CHECK_THROWS_AS(subset_oracle(Word(23, letter(2, +1)), 2),
                  std::invalid_argument);
}

TEST_CASE("DP, enumeration, and subset oracle agree on random words") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const Word w = random_word(rng, 14, 3);
    const std::uint32_t dp = min_norm(w, 3).value;
    CHECK(dp == enumeration_minimum(w, 3));
    CHECK(dp == subset_oracle(w, 3));
  }
}

TEST_CASE("min_norm invariants on random words") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, 14, 3);
    const NormResult r = min_norm(w, 3);

    // finite exactly when the projection is trivial
    CHECK(r.is_finite() == erase_generator(w, 3).empty());

    // invariant under free reduction
    CHECK(min_norm(free_reduce(w), 3).value == r.value);

    if (r.is_finite()) {
      REQUIRE(r.witness.has_value());
      CHECK(validate_connection(w, *r.witness).empty());
      CHECK(connection_norm(*r.witness) == r.value);

      // bounded below by the exponent sum, with equal parity
      const std::int64_t sum = exponent_sum(w, 3);
      const std::uint64_t abs_sum =
          static_cast<std::uint64_t>(sum < 0 ? -sum : sum);
      CHECK(r.value >= abs_sum);
      CHECK((r.value % 2) == (abs_sum % 2));
    } else {
      CHECK_FALSE(r.witness.has_value());
    }
  }
}

TEST_CASE("min_norm is subadditive under concatenation") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    const Word u = random_word(rng, 10, 3);
    const Word v = random_word(rng, 10, 3);
    const std::uint32_t uv = min_norm(concat(u, v, false), 3).value;
    CHECK(uv <= add_norm(min_norm(u, 3).value, min_norm(v, 3).value));
  }
}
