#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "burnside/analyzer.hpp"
#include "burnside/bounds.hpp"
#include "burnside/catalog.hpp"
#include "burnside/config.hpp"
#include "burnside/errors.hpp"
#include "burnside/group_io.hpp"
#include "burnside/laws.hpp"
#include "burnside/report_json.hpp"
#include "burnside/series.hpp"
#include "burnside/structure.hpp"
#include "burnside/word.hpp"

using namespace burnside;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kCap = 3 };

struct Globals {
  bool json = false;
  std::string config_path;
  Config config;
};

void emit(const Globals& g, const std::string& command, const ojson& result, const std::string& text) {
  if (g.json) {
    std::cout << make_envelope(command, g.config, result).dump(2) << "\n";
  } else {
    std::cout << text;
    std::cout << "burnside " << version() << ", config " << g.config.to_json().dump() << "\n";
  }
}

int cmd_analyze(const Globals& g, const std::string& text, std::uint64_t d) {
  const Word w = parse_word(text);
  AnalyzerOptions opt;
  opt.exhaust_cap = g.config.exhaust_cap;
  opt.threads = g.config.threads;
  opt.constants = g.config.constants;
  const AnalysisReport r = analyze(w, d, opt);
  emit(g, "analyze", to_json(r), render_text(r));
  return kOk;
}

int cmd_bound(const Globals& g, std::optional<std::uint64_t> d, std::optional<std::uint64_t> length,
              const std::string& word_text, std::optional<std::uint64_t> lambda) {
  const std::uint64_t rank = d.value_or(2);
  BoundReport r;
  if (!word_text.empty()) {
    if (length) throw CLI::ValidationError("give either --length or a word, not both");
    r = main_theorem_bound(parse_word(word_text), rank, lambda, g.config.constants);
  } else {
    if (!length) throw CLI::ValidationError("--length or a word is required");
    BoundParams p;
    p.d = rank;
    p.l = *length;
    p.k = lambda ? std::min(*lambda, *length) : *length;
    p.constants = g.config.constants;
    r = bound_report(p);
  }
  emit(g, "bound", to_json(r), render_text(r));
  return kOk;
}

int cmd_catalog(const Globals& g, std::optional<std::uint64_t> length, int max_rank) {
  ojson result;
  std::ostringstream os;
  if (length) {
    const auto ids = candidates_for_law_length(*length, g.config.c_lower);
    result["length"] = *length;
    result["c_lower"] = g.config.c_lower;
    result["candidates"] = candidates_json(ids, g.config.c_lower);
    os << ids.size() << " simple groups may have a law of length <= " << *length << " (c_lower = "
       << g.config.c_lower << "):\n";
    for (const auto& id : ids) {
      os << "  " << id.to_string() << "  lower bound " << law_length_lower_bound(id, g.config.c_lower) << "\n";
    }
  } else {
    result["tables"] = catalog_tables_json(max_rank);
    os << "family k a_low a_high b\n";
    for (const auto& row : result["tables"]) {
      os << "  " << row["family"].get<std::string>() << " " << row["k"].dump() << " " << row["a_low"].dump()
         << " " << row["a_high"].dump() << " " << row["b"].dump() << "\n";
    }
  }
  emit(g, "catalog", result, os.str());
  return kOk;
}

int cmd_lawcheck(const Globals& g, const std::string& group, const std::string& word_text, bool sampled,
                 std::uint64_t trials, std::optional<std::uint64_t> seed) {
  const GroupHandle h = resolve_group(group, {}, g.config.cayley_cap);
  const Word w = parse_word(word_text);
  LawOptions opt;
  opt.exhaustive = !sampled;
  opt.trials = trials;
  opt.seed = seed.value_or(g.config.seed);
  opt.exhaust_cap = g.config.exhaust_cap;
  opt.threads = g.config.threads;
  LawCheck c;
  if (h.order() <= g.config.cayley_cap) {
    c = is_law(w, h.cayley(g.config.cayley_cap), opt);
  } else {
    c = is_law(w, *h.perm(), opt);
  }
  ojson result;
  result["group"] = h.description();
  result["group_order"] = h.order();
  result["word"] = w.to_string();
  result["check"] = to_json(c);
  std::ostringstream os;
  os << "law " << w.to_string() << " on " << h.description() << " (order " << h.order()
     << "): " << to_string(c.verdict) << " after " << c.tuples_checked
     << (c.exhaustive ? " tuples (exhaustive)" : " sampled tuples (seed " + std::to_string(c.seed) + ")") << "\n";
  if (!c.witness.empty()) {
    os << "  counterexample:";
    for (const auto& l : c.witness) os << " " << l;
    os << "\n";
  }
  emit(g, "lawcheck", result, os.str());
  return kOk;
}

int cmd_lambda(const Globals& g, const std::string& group, const std::string& group_file,
               const std::string& series_file, std::uint64_t certify_limit) {
  if (group.empty() == group_file.empty()) throw CLI::ValidationError("give exactly one of --group, --group-file");
  const GroupHandle h = resolve_group(group.empty() ? group_file : group, {}, g.config.cayley_cap);
  ojson result;
  std::ostringstream os;
  result["group"] = h.description();
  result["group_order"] = h.order();
  os << "group " << h.description() << " of order " << h.order() << "\n";
  bool computed = false;
  if (h.order() <= g.config.cayley_cap) {
    const CayleyGroup& c = h.cayley(g.config.cayley_cap);
    const LambdaReport lr = nonsolvable_length(c, certify_limit);
    const CompositionReport cr = composition_report(c);
    result["lambda"] = to_json(lr);
    result["composition"] = to_json(cr);
    os << "  nonsolvable length " << lr.lambda
       << (lr.certified ? " (minimal over all normal series)" : " (upper bound from the radical-layer series)")
       << "\n  series orders:";
    os << " 1";
    for (const auto& s : lr.series) {
      os << " < " << s.subgroup.elements.size() << (s.tag == SeriesTag::Solvable ? " [solvable]" : " [semisimple]");
    }
    os << "\n  composition factors:";
    for (const auto& f : cr.factors) os << " " << f.to_string();
    os << "\n  anabelian: " << (cr.is_anabelian() ? "yes" : "no") << "\n";
    for (const auto& n : lr.notes) os << "  note: " << n << "\n";
    computed = true;
  }
  if (!series_file.empty()) {
    if (!h.perm()) throw std::invalid_argument("--series needs a permutation group");
    std::ifstream in(series_file);
    if (!in) throw std::invalid_argument("cannot open series file '" + series_file + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.byte, series_file + ": " + e.what());
    }
    const auto series = series_from_json(j, h.perm()->degree());
    const SeriesVerification v = verify_series_lambda(*h.perm(), series, g.config.cayley_cap);
    result["series_verification"] = to_json(v);
    os << "  claimed series verified, nonsolvable length <= " << v.lambda_upper_bound << "\n";
    for (const auto& f : v.factors) {
      os << "    " << f.from << " -> " << f.to << ": order " << f.factor_order
         << (f.semisimple ? " semisimple" : "") << (f.solvable ? " solvable" : "") << " (" << f.method << ")\n";
    }
    computed = true;
  }
  if (!computed) {
    throw CapExceeded("group of order " + std::to_string(h.order()) +
                      " exceeds CAYLEY_CAP; supply --series to verify a claimed series");
  }
  emit(g, "lambda", result, os.str());
  return kOk;
}

int cmd_shortest_law(const Globals& g, const std::string& group, std::optional<std::uint64_t> len, int vars) {
  // one-variable laws x^k need k up to the exponent
  const std::uint64_t max_len = len.value_or(vars == 1 ? 64 : 8);
  const GroupHandle h = resolve_group(group, {}, g.config.cayley_cap);
  const ShortestLaw s = shortest_law_search(h.cayley(g.config.cayley_cap), max_len, vars, g.config.exhaust_cap);
  ojson result;
  result["group"] = h.description();
  result["group_order"] = h.order();
  result["vars"] = vars;
  result["max_len"] = max_len;
  result["search"] = to_json(s);
  std::ostringstream os;
  if (s.law) {
    os << "shortest law on " << vars << " variable(s) for " << h.description() << ": " << s.law->to_string()
       << " (length " << word_length(*s.law) << ", " << s.words_tested << " words tested)\n";
  } else {
    os << "none_up_to(" << s.complete_length << "): no law of length <= " << s.complete_length << " on " << vars
       << " variable(s) for " << h.description() << " (" << s.words_tested << " words tested)\n";
  }
  emit(g, "shortest-law", result, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anabelian quotients of Burnside-type varieties: laws, bounds and group checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());
  Globals g;
  app.add_flag("--json", g.json, "Print the JSON report");
  app.add_option("--config", g.config_path, "JSON config file (overrides BURNSIDE_CONFIG)");

  std::function<int()> action;

  auto* analyze = app.add_subcommand("analyze", "Classify a law and decide triviality where a criterion applies");
  std::string an_word;
  std::uint64_t an_rank = 2;
  analyze->add_option("word", an_word, "Word, e.g. \"x^30\" or \"[x^30,y]\"")->required();
  analyze->add_option("--rank,-d", an_rank, "Number of generators d")->check(CLI::PositiveNumber);
  analyze->callback([&] { action = [&] { return cmd_analyze(g, an_word, an_rank); }; });

  auto* bound = app.add_subcommand("bound", "Evaluate the staged size bound");
  std::optional<std::uint64_t> b_d, b_len, b_lambda;
  std::string b_word;
  bound->add_option("--d,--rank", b_d, "Number of generators d (default 2)")->check(CLI::PositiveNumber);
  bound->add_option("--length,-l", b_len, "Law length")->check(CLI::Range(2ULL, 1000000000ULL));
  bound->add_option("--lambda,-k", b_lambda, "Nonsolvable length override")->check(CLI::PositiveNumber);
  bound->add_option("word", b_word, "Word whose length is used");
  bound->callback([&] { action = [&] { return cmd_bound(g, b_d, b_len, b_word, b_lambda); }; });

  auto* catalog = app.add_subcommand("catalog", "Simple groups that may satisfy a short law, or the family tables");
  std::optional<std::uint64_t> c_len;
  int c_rank = 10;
  catalog->add_option("--length,-l", c_len, "Law length")->check(CLI::PositiveNumber);
  catalog->add_option("--max-rank", c_rank, "Largest rank in the table dump")->check(CLI::Range(1, 64));
  catalog->callback([&] { action = [&] { return cmd_catalog(g, c_len, c_rank); }; });

  auto* lawcheck = app.add_subcommand("lawcheck", "Check whether a word is a law of a group");
  std::string lc_group, lc_word;
  bool lc_sampled = false;
  std::uint64_t lc_trials = 10000;
  std::optional<std::uint64_t> lc_seed;
  lawcheck->add_option("--group,-g", lc_group, "Group descriptor or JSON file")->required();
  lawcheck->add_option("word", lc_word, "Word")->required();
  lawcheck->add_flag("--sampled", lc_sampled, "Random sampling instead of exhaustive search");
  lawcheck->add_option("--trials", lc_trials, "Samples in sampled mode");
  lawcheck->add_option("--seed", lc_seed, "Seed in sampled mode (default from config)");
  lawcheck->callback(
      [&] { action = [&] { return cmd_lawcheck(g, lc_group, lc_word, lc_sampled, lc_trials, lc_seed); }; });

  auto* lambda = app.add_subcommand("lambda", "Nonsolvable length, composition factors, series verification");
  std::string la_group, la_file, la_series;
  std::uint64_t la_limit = 5000;
  lambda->add_option("--group,-g", la_group, "Group descriptor");
  lambda->add_option("--group-file,-f", la_file, "Group JSON file");
  lambda->add_option("--series", la_series, "JSON file with a claimed normal series to verify");
  lambda->add_option("--certify-limit", la_limit, "Largest order for the exhaustive minimality check");
  lambda->callback([&] { action = [&] { return cmd_lambda(g, la_group, la_file, la_series, la_limit); }; });

  auto* shortest = app.add_subcommand("shortest-law", "Shortest law by exhaustive search over canonical words");
  std::string sl_group;
  std::optional<std::uint64_t> sl_len;
  int sl_vars = 2;
  shortest->add_option("--group,-g", sl_group, "Group descriptor or JSON file")->required();
  shortest->add_option("--max-len", sl_len, "Largest word length (default 8, or 64 with --vars 1)")->check(CLI::Range(1ULL, 64ULL));
  shortest->add_option("--vars", sl_vars, "Number of variables")->check(CLI::Range(1, 2));
  shortest->callback([&] { action = [&] { return cmd_shortest_law(g, sl_group, sl_len, sl_vars); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    g.config = g.config_path.empty() ? Config::from_environment() : Config::from_file(g.config_path);
    if (!g.json) g.json = g.config.format == OutputFormat::Json;
    if (g.json) g.config.format = OutputFormat::Json;
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
