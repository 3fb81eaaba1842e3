// Command-line surface for the ringnorm library: word reduction, arc words,
// norms, metrics, witnesses, and the scripted verification pipelines.
// Exit codes: 0 success/pass, 1 verification failure, 2 usage/parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ringnorm/json_io.hpp"
#include "ringnorm/ringnorm.hpp"

namespace {

using nlohmann::json;
using namespace ringnorm;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  bool json_output = false;
  std::string word_file;  // word arguments, one per non-empty line
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

// Word arguments come from the positionals, or from --file (one word per
// non-empty line) when the positionals are omitted. Mixing the two is an
// error: long words do not survive shell argument limits, so a file must be
// able to carry all of them.
std::vector<std::string> resolve_word_texts(
    const CliConfig& config, const std::vector<std::string>& positionals,
    std::size_t needed) {
  std::vector<std::string> given;
  for (const std::string& p : positionals)
    if (!p.empty()) given.push_back(p);
  if (!config.word_file.empty()) {
    if (!given.empty())
      throw UsageError("pass words either as arguments or via --file, not both");
    std::ifstream in(config.word_file);
    if (!in) throw UsageError("cannot open file: " + config.word_file);
    std::string line;
    while (std::getline(in, line)) {
      const std::string t = trim(line);
      if (!t.empty()) given.push_back(t);
    }
  }
  if (given.size() != needed)
    throw UsageError("expected " + std::to_string(needed) + " word" +
                     (needed == 1 ? "" : "s") + ", got " +
                     std::to_string(given.size()));
  return given;
}

// The distinguished generator: an explicit --relator wins, otherwise the
// largest generator index present in the words (1 when they are all empty).
std::uint32_t resolve_relator(const std::optional<std::uint32_t>& explicit_d,
                              const std::vector<Word>& words) {
  std::uint32_t d = 0;
  if (explicit_d) {
    d = *explicit_d;
  } else {
    for (const Word& w : words) d = std::max(d, max_generator(w));
    if (d == 0) d = 1;
  }
  if (d < 1 || d > kMaxGenerator)
    throw UsageError("relator index must be in 1.." + std::to_string(kMaxGenerator));
  return d;
}

std::string value_text(std::uint32_t value) {
  return value == kInfNorm ? "inf" : std::to_string(value);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_reduce(const CliConfig& config, const std::string& word_text) {
  const Word reduced = free_reduce(parse(word_text));
  if (config.json_output)
    emit(json{{"schema_version", 1}, {"word", format(reduced)}});
  else
    std::cout << format(reduced) << "\n";
  return kExitPass;
}

int cmd_arcword(const CliConfig& config, unsigned n) {
  const Word an = arc_word(n);
  if (config.json_output)
    emit(json{{"schema_version", 1}, {"n", n}, {"word", format(an)}});
  else
    std::cout << format(an) << "\n";
  return kExitPass;
}

int cmd_complexity(const CliConfig& config, unsigned n) {
  const std::uint64_t value = complexity(n);
  if (config.json_output)
    emit(json{{"schema_version", 1}, {"n", n}, {"value", value}});
  else
    std::cout << value << "\n";
  return kExitPass;
}

int cmd_norm(const CliConfig& config, const std::string& word_text,
             const std::optional<std::uint32_t>& relator, bool show_witness) {
  const Word w = parse(word_text);
  const std::uint32_t d = resolve_relator(relator, {w});
  const NormResult result = min_norm(w, d);
  if (config.json_output) {
    json j{{"schema_version", 1},
           {"word", format(w)},
           {"relator", d},
           {"value", norm_value_json(result.value)}};
    if (result.is_finite()) {
      j["connection"] = *result.witness;
      j["ops"] = witness_ops(w, d);
    }
    emit(j);
    return kExitPass;
  }
  std::cout << value_text(result.value) << "\n";
  if (show_witness && result.is_finite()) {
    std::cout << "connection:";
    for (const auto& [i, k] : result.witness->arcs)
      std::cout << " (" << i << "," << k << ")";
    std::cout << "\n";
    for (const ElementaryOp& op : witness_ops(w, d))
      std::cout << "delete @" << op.position << " sign="
                << (op.sign > 0 ? "+1" : "-1") << " conj=\""
                << format(op.conjugator) << "\"\n";
  }
  return kExitPass;
}

int cmd_metric(const CliConfig& config, const std::string& x_text,
               const std::string& y_text,
               const std::optional<std::uint32_t>& relator) {
  const Word x = parse(x_text);
  const Word y = parse(y_text);
  const std::uint32_t d = resolve_relator(relator, {x, y});
  const MetricResult result = metric(x, y, d);
  if (config.json_output)
    emit(json{{"schema_version", 1},
              {"relator", d},
              {"value", norm_value_json(result.value)}});
  else
    std::cout << value_text(result.value) << "\n";
  return kExitPass;
}

int cmd_witness(const CliConfig& config, const std::string& word_text,
                const std::optional<std::uint32_t>& relator) {
  const Word w = parse(word_text);
  const std::uint32_t d = resolve_relator(relator, {w});
  const MetricResult result = relator_norm(w, d);
  if (config.json_output) {
    json j{{"schema_version", 1},
           {"relator", d},
           {"value", norm_value_json(result.value)}};
    if (result.is_finite()) j["ops"] = *result.witness_ops;
    emit(j);
    return kExitPass;
  }
  if (!result.is_finite()) {
    std::cout << "inf\n";
    return kExitPass;
  }
  for (const ElementaryOp& op : *result.witness_ops)
    std::cout << "delete @" << op.position << " sign="
              << (op.sign > 0 ? "+1" : "-1") << " conj=\""
              << format(op.conjugator) << "\"\n";
  return kExitPass;
}

struct VerifyRow {
  unsigned n = 0;
  RingsReport report;
  std::uint64_t expected = 0;
  std::uint32_t metric_value = kInfNorm;
  std::size_t untangle_length = 0;
  bool untangle_ok = false;
  std::size_t ops_length = 0;
  bool ops_ok = false;
  bool pass = false;
};

VerifyRow verify_one(unsigned n) {
  VerifyRow row;
  row.n = n;
  row.report = arc_word_report(n);
  row.expected = complexity(n);

  const Word an = arc_word(n);
  const Word previous = arc_word(n - 1);
  row.metric_value = metric(an, previous, n).value;

  // deleting the untangle positions must give a_{n-1} letter for letter
  const auto positions = untangle_witness(n);
  row.untangle_length = positions.size();
  std::vector<bool> drop(an.size() + 1, false);
  for (std::size_t p : positions) drop[p] = true;
  Word remnant;
  for (std::size_t i = 0; i < an.size(); ++i)
    if (!drop[i + 1]) remnant.push_back(an[i]);
  row.untangle_ok =
      remnant == previous && row.untangle_length == row.expected;

  // the norm witness on a_n a_{n-1}^{-1} must verify and have minimal length
  const Word product = concat(an, invert(previous), true);
  const auto ops = witness_ops(product, n);
  row.ops_length = ops.size();
  row.ops_ok = row.ops_length == row.expected &&
               verify_witness(product, ops, Word{}, n);

  const bool stats_ok = row.report.reduced &&
                        row.report.projection_matches_previous &&
                        row.report.arc_length == (std::uint64_t{1} << n) - 1 &&
                        row.report.g_n_count == row.expected;
  row.pass = stats_ok && row.metric_value == row.expected &&
             row.untangle_ok && row.ops_ok;
  return row;
}

int cmd_verify(const CliConfig& config, unsigned max_n) {
  if (max_n < 2 || max_n > 8)
    throw UsageError("--max-n must be in 2..8");
  std::vector<VerifyRow> rows;
  bool all_pass = true;
  for (unsigned n = 2; n <= max_n; ++n) {
    rows.push_back(verify_one(n));
    all_pass = all_pass && rows.back().pass;
  }

  if (config.json_output) {
    json jrows = json::array();
    for (const VerifyRow& row : rows)
      jrows.push_back(json{{"n", row.n},
                           {"arc_length", row.report.arc_length},
                           {"g_n_count", row.report.g_n_count},
                           {"reduced", row.report.reduced},
                           {"projection_matches_previous",
                            row.report.projection_matches_previous},
                           {"metric", row.metric_value},
                           {"expected", row.expected},
                           {"untangle_length", row.untangle_length},
                           {"untangle_ok", row.untangle_ok},
                           {"ops_length", row.ops_length},
                           {"ops_ok", row.ops_ok},
                           {"pass", row.pass}});
    emit(json{{"schema_version", 1},
              {"max_n", max_n},
              {"rows", std::move(jrows)},
              {"pass", all_pass}});
    return all_pass ? kExitPass : kExitFail;
  }

  std::cout << "  n    |a_n|  g_n count  reduced  proj  metric  expected"
               "  untangle  ops  status\n";
  for (const VerifyRow& row : rows) {
    std::cout << std::setw(3) << row.n << std::setw(9) << row.report.arc_length
              << std::setw(11) << row.report.g_n_count << std::setw(9)
              << (row.report.reduced ? "yes" : "NO") << std::setw(6)
              << (row.report.projection_matches_previous ? "yes" : "NO")
              << std::setw(8) << value_text(row.metric_value) << std::setw(10)
              << row.expected << std::setw(10) << row.untangle_length
              << std::setw(5) << row.ops_length << "  "
              << (row.pass ? "PASS" : "FAIL") << "\n";
    if (!row.pass) all_pass = false;
  }
  std::cout << (all_pass ? "PASS" : "FAIL")
            << ": minimal solution complexity is 2^(n-1) for n = 2.."
            << max_n << "\n";
  return all_pass ? kExitPass : kExitFail;
}

int cmd_oracle_check(const CliConfig& config, std::size_t trials,
                     std::size_t max_len, std::uint64_t seed) {
  if (max_len > 14) throw UsageError("--max-len must be at most 14");
  constexpr std::uint32_t kRelator = 3;
  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Word w = random_word(rng, max_len, 3);
    const std::uint32_t dp = min_norm(w, kRelator).value;
    const ConnectionEnumeration e = enumerate_connections(w, kRelator, 2000000);
    std::uint32_t enumerated = kInfNorm;
    for (const Connection& c : e.connections)
      enumerated = std::min(enumerated, connection_norm(c));
    const std::uint32_t subset = subset_oracle(w, kRelator);

    if (e.truncated || dp != enumerated || dp != subset) {
      if (config.json_output) {
        emit(json{{"schema_version", 1},
                  {"trials", trials},
                  {"max_len", max_len},
                  {"seed", seed},
                  {"pass", false},
                  {"word", format(w)},
                  {"dp", norm_value_json(dp)},
                  {"enumeration", norm_value_json(enumerated)},
                  {"subset", norm_value_json(subset)}});
      } else {
        std::cout << "FAIL on word \"" << format(w) << "\": dp="
                  << value_text(dp) << " enumeration=" << value_text(enumerated)
                  << " subset=" << value_text(subset) << " (seed " << seed
                  << ", trial " << trial << ")\n";
      }
      return kExitFail;
    }
  }
  if (config.json_output)
    emit(json{{"schema_version", 1},
              {"trials", trials},
              {"max_len", max_len},
              {"seed", seed},
              {"pass", true}});
  else
    std::cout << "PASS: DP = enumeration minimum = subset oracle on "
              << trials << " words (max length " << max_len << ", seed "
              << seed << ")\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig config;
  CLI::App app{"Relator norms, metrics, and Chinese Rings arc words on free groups"};
  app.require_subcommand(1);
  app.add_flag("--json", config.json_output, "emit JSON instead of text");
  app.add_option("--file", config.word_file,
                 "read word arguments from a file, one per non-empty line");

  std::string word_a, word_b;
  std::optional<std::uint32_t> relator;
  bool show_witness = false;
  unsigned index = 0;
  unsigned max_n = 8;
  std::size_t trials = 300;
  std::size_t max_len = 12;
  std::uint64_t seed = 0;

  int exit_code = kExitPass;
  const auto run = [&](auto&& fn) { return [&, fn] { exit_code = fn(); }; };

  CLI::App* reduce = app.add_subcommand("reduce", "freely reduce a word");
  reduce->add_option("word", word_a, "word to reduce");
  reduce->fallthrough();
  reduce->callback(run([&] {
    return cmd_reduce(config, resolve_word_texts(config, {word_a}, 1)[0]);
  }));

  CLI::App* arcword =
      app.add_subcommand("arcword", "print the arc word a_n of the n-column puzzle");
  arcword->add_option("n", index, "column count (1..22)")->required();
  arcword->fallthrough();
  arcword->callback(run([&] { return cmd_arcword(config, index); }));

  CLI::App* complexity_cmd =
      app.add_subcommand("complexity", "print the minimal solution complexity 2^(n-1)");
  complexity_cmd->add_option("n", index, "column count (1..62)")->required();
  complexity_cmd->fallthrough();
  complexity_cmd->callback(run([&] { return cmd_complexity(config, index); }));

  CLI::App* norm = app.add_subcommand("norm", "minimal connection norm of a word");
  norm->add_option("word", word_a, "word to evaluate");
  norm->add_option("--relator,-r", relator, "distinguished generator index");
  norm->add_flag("--witness", show_witness, "also print the optimal connection and ops");
  norm->fallthrough();
  norm->callback(run([&] {
    return cmd_norm(config, resolve_word_texts(config, {word_a}, 1)[0], relator,
                    show_witness);
  }));

  CLI::App* metric_cmd =
      app.add_subcommand("metric", "elementary-operation distance between two words");
  metric_cmd->add_option("x", word_a, "first word");
  metric_cmd->add_option("y", word_b, "second word");
  metric_cmd->add_option("--relator,-r", relator, "distinguished generator index");
  metric_cmd->fallthrough();
  metric_cmd->callback(run([&] {
    const auto texts = resolve_word_texts(config, {word_a, word_b}, 2);
    return cmd_metric(config, texts[0], texts[1], relator);
  }));

  CLI::App* witness =
      app.add_subcommand("witness", "elementary operations realizing the norm");
  witness->add_option("word", word_a, "word to untangle");
  witness->add_option("--relator,-r", relator, "distinguished generator index");
  witness->fallthrough();
  witness->callback(run([&] {
    return cmd_witness(config, resolve_word_texts(config, {word_a}, 1)[0], relator);
  }));

  CLI::App* verify = app.add_subcommand(
      "verify", "check the 2^(n-1) puzzle complexity end to end");
  verify->add_option("--max-n", max_n, "verify n = 2..max_n (2..8)")
      ->default_val(8);
  verify->fallthrough();
  verify->callback(run([&] { return cmd_verify(config, max_n); }));

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "randomized agreement of DP, enumeration, and subset oracle");
  oracle->add_option("--trials", trials, "number of random words")->default_val(300);
  oracle->add_option("--max-len", max_len, "maximum word length (<= 14)")
      ->default_val(12);
  oracle->add_option("--seed", seed, "random seed")->default_val(0);
  oracle->fallthrough();
  oracle->callback(run([&] { return cmd_oracle_check(config, trials, max_len, seed); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
