// tmdyn: Turing machines as dynamical systems.
//
//   tmdyn analyze  --machine utm_6_4 [--n-max 6]
//   tmdyn graph    --machine wutm_6_2 --eps +1
//   tmdyn entropy  --machine utm_6_4 --n-max 6 --oracle
//   tmdyn simulate --machine utm_6_4 --state u2 --tape b --steps 1
//   tmdyn gshift   --machine wutm_6_2 --verify 1000 --seed 7
//
// Exit codes: 0 success, 1 analysis failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tmdyn/configuration.hpp"
#include "tmdyn/corpus.hpp"
#include "tmdyn/gshift.hpp"
#include "tmdyn/machine.hpp"
#include "tmdyn/phi.hpp"
#include "tmdyn/regularity.hpp"
#include "tmdyn/report.hpp"
#include "tmdyn/words.hpp"

#ifndef TMDYN_VERSION
#define TMDYN_VERSION "0.0.0"
#endif

namespace {

using namespace tmdyn;
using report::ordered_json;

constexpr int kOk = 0;
constexpr int kAnalysisFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string machine;
  std::string file;
  std::string halting_mode = "fixpoint";
  bool json = false;
  std::uint64_t seed = 1;
};

struct LoadedMachine {
  TuringMachine machine;
  std::string source;  // "corpus" or "file"
};

LoadedMachine load_machine(const GlobalOptions& g) {
  if (g.machine.empty() == g.file.empty())
    throw UsageError("exactly one of --machine or --file is required");
  std::optional<TuringMachine> m;
  std::string source;
  if (!g.machine.empty()) {
    try {
      m = builtin_machine(g.machine);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    source = "corpus";
  } else {
    std::ifstream in(g.file, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + g.file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      m = parse_machine(buf.str());
    } catch (const ParseError& e) {
      throw UsageError(g.file + ": " + e.what());
    } catch (const ValidationError& e) {
      throw UsageError(g.file + ": " + e.what());
    }
    if (m->name().empty()) {
      std::string stem = g.file;
      if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
      if (auto dot = stem.rfind('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
      m = m->with_name(stem);
    }
    source = "file";
  }
  HaltingMode mode;
  try {
    mode = halting_mode_from_string(g.halting_mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return {m->with_halting_mode(mode), source};
}

ordered_json machine_header(const LoadedMachine& lm) {
  const auto& m = lm.machine;
  return {{"name", m.name()},
          {"source", lm.source},
          {"fingerprint", report::fingerprint(format_machine(m))},
          {"states", m.num_states()},
          {"symbols", m.num_symbols()},
          {"halting_mode", std::string(to_string(m.halting_mode()))}};
}

int parse_direction(const std::string& text) {
  if (text == "+1" || text == "1") return 1;
  if (text == "-1") return -1;
  throw UsageError("--eps must be +1 or -1, got '" + text + "'");
}

// Tape arguments: whitespace-separated symbol names ("b g δ"), or, when every
// character is itself a symbol name, a packed string ("bgδ").
std::vector<std::string> parse_tape(const TuringMachine& m, const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() != 1 || m.find_symbol(tokens[0])) return tokens;

  std::vector<std::string> chars;
  const std::string& s = tokens[0];
  for (std::size_t i = 0; i < s.size();) {
    std::size_t len = 1;
    auto c = static_cast<unsigned char>(s[i]);
    if (c >= 0xF0) len = 4;
    else if (c >= 0xE0) len = 3;
    else if (c >= 0xC0) len = 2;
    chars.push_back(s.substr(i, len));
    i += len;
  }
  for (const auto& ch : chars)
    if (!m.find_symbol(ch)) throw UsageError("unknown tape symbol in '" + text + "'");
  return chars;
}

// ---------------------------------------------------------------------------

struct AnalyzeOptions {
  std::size_t n_max = 0;
  std::uint64_t samples = 1000;
  std::string output;
};

int cmd_analyze(const GlobalOptions& g, const AnalyzeOptions& o) {
  const auto lm = load_machine(g);
  const auto& m = lm.machine;
  const PhiTable table = phi_table(m);

  ordered_json out;
  out["tool"] = "tmdyn";
  out["version"] = TMDYN_VERSION;
  out["seed"] = g.seed;
  out["machine"] = machine_header(lm);
  out["phi_table"] = report::phi_table_json(m, table);
  out["graphs"] = {{"+1", report::graph_json(m, eps_graph(table, m, 1))},
                   {"-1", report::graph_json(m, eps_graph(table, m, -1))}};
  auto strong = check_strong_regularity(m);
  auto regular = check_regularity(m);
  out["strong_regularity"] = strong ? report::witness_json(m, *strong) : ordered_json(nullptr);
  out["regularity"] = regular ? report::witness_json(m, *regular) : ordered_json(nullptr);
  out["certificate"] = report::certificate_json(m, entropy_lower_bound(m));
  int status = kOk;
  if (o.n_max > 0) {
    auto words = entropy_estimates(m, o.n_max);
    out["word_counts"] = report::word_report_json(m, words);
    if (words.error) status = kAnalysisFailure;
  }
  auto conj = verify_conjugacy(m, o.samples, g.seed);
  out["conjugacy"] = report::conjugacy_json(m, conj);
  if (conj.failed > 0) status = kAnalysisFailure;

  const std::string text = out.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + o.output + "'");
    file << text;
  }
  return status;
}

struct GraphOptions {
  std::string eps = "+1";
  std::string format = "dot";
};

int cmd_graph(const GlobalOptions& g, const GraphOptions& o) {
  const int direction = parse_direction(o.eps);
  const auto lm = load_machine(g);
  const auto& m = lm.machine;
  const PhiTable table = phi_table(m);
  const EpsGraph graph = eps_graph(table, m, direction);
  if (g.json || o.format == "json") {
    std::cout << report::graph_json(m, graph).dump(2) << "\n";
  } else if (o.format == "table") {
    std::cout << phi_table_text(m, table);
  } else {
    std::cout << to_dot(m, graph);
  }
  return kOk;
}

struct EntropyOptions {
  std::size_t n_max = 0;
  bool oracle = false;
  bool from_initial = false;
  std::uint64_t node_budget = WordCountOptions{}.node_budget;
};

int cmd_entropy(const GlobalOptions& g, const EntropyOptions& o) {
  if (o.n_max == 0) throw UsageError("--n-max must be >= 1");
  const auto lm = load_machine(g);
  const auto& m = lm.machine;
  WordCountOptions wo;
  wo.from_initial_only = o.from_initial;
  wo.node_budget = o.node_budget;
  const auto words = entropy_estimates(m, o.n_max, wo);

  int status = kOk;
  ordered_json checks = ordered_json::array();
  if (o.oracle) {
    for (const auto& row : words.rows) {
      if (row.n > 4) break;
      const auto expected = count_words_oracle(m, row.n, wo);
      checks.push_back({{"n", row.n}, {"count", row.count}, {"oracle", expected}});
      if (expected != row.count) {
        std::cerr << "oracle mismatch at n = " << row.n << ": search " << row.count
                  << ", oracle " << expected << "\n";
        status = kAnalysisFailure;
      }
    }
  }
  if (words.error) {
    std::cerr << "error: " << *words.error << "\n";
    status = kAnalysisFailure;
  }

  if (g.json) {
    ordered_json out;
    out["machine"] = machine_header(lm);
    out["report"] = report::word_report_json(m, words);
    if (o.oracle) out["oracle_checks"] = std::move(checks);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << report::word_report_csv(words);
  }
  return status;
}

struct SimulateOptions {
  std::string state;
  std::string tape;
  std::int64_t offset = 0;
  std::uint64_t steps = 0;
  bool trace = false;
};

int cmd_simulate(const GlobalOptions& g, const SimulateOptions& o) {
  const auto lm = load_machine(g);
  const auto& m = lm.machine;
  State q = m.initial();
  if (!o.state.empty()) {
    auto found = m.find_state(o.state);
    if (!found) throw UsageError("unknown state '" + o.state + "'");
    q = *found;
  }
  Configuration x = make_config(m, q, parse_tape(m, o.tape), o.offset);

  ordered_json trace = ordered_json::array();
  auto line = [&](std::uint64_t t, const Configuration& c) {
    if (g.json) {
      auto j = report::configuration_json(m, c);
      j["t"] = t;
      trace.push_back(std::move(j));
    } else {
      std::cout << "t=" << t << " " << render(m, c) << "\n";
    }
  };

  // Step one at a time so that --trace can print every configuration; the
  // halting rule matches run().
  std::uint64_t t = 0;
  if (o.trace || o.steps == 0) line(0, x);
  while (t < o.steps && !m.is_halting(x.state())) {
    step_in_place(m, x);
    ++t;
    if (o.trace || t == o.steps || m.is_halting(x.state())) line(t, x);
  }
  const bool halted = m.is_halting(x.state());

  if (g.json) {
    ordered_json out;
    out["machine"] = machine_header(lm);
    out["trace"] = std::move(trace);
    out["steps_taken"] = t;
    out["halted"] = halted;
    out["halting_time"] = halted ? ordered_json(t) : ordered_json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else if (halted) {
    std::cout << "halted: N(x) = " << t << "\n";
  }
  return kOk;
}

struct GshiftOptions {
  std::uint64_t verify = 0;
  bool dump = false;
};

int cmd_gshift(const GlobalOptions& g, const GshiftOptions& o) {
  if ((o.verify > 0) == o.dump) throw UsageError("gshift needs exactly one of --verify N or --dump");
  const auto lm = load_machine(g);
  const auto& m = lm.machine;
  const auto shift = compile_gshift(m);
  if (o.dump) {
    ordered_json out;
    out["machine"] = machine_header(lm);
    out["shift"] = report::gshift_json(m, shift);
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  const auto r = verify_conjugacy(m, shift, o.verify, g.seed);
  if (g.json) {
    ordered_json out;
    out["machine"] = machine_header(lm);
    out["conjugacy"] = report::conjugacy_json(m, r);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "seed: " << r.seed << "\n";
    std::cout << "conjugacy: " << r.passed << "/" << r.samples << " passed\n";
    if (r.first_counterexample)
      std::cout << "first counterexample: " << render(m, *r.first_counterexample) << "\n";
  }
  return r.failed == 0 ? kOk : kAnalysisFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turing machines as dynamical systems: regularity, entropy, generalized shifts",
               "tmdyn"};
  app.set_version_flag("--version", TMDYN_VERSION);
  app.require_subcommand(1);

  GlobalOptions g;
  auto* machine_opt = app.add_option("--machine", g.machine, "built-in machine (utm_6_4, wutm_6_2)");
  auto* file_opt = app.add_option("--file", g.file, "machine description file");
  machine_opt->excludes(file_opt);
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--halting-mode", g.halting_mode, "fixpoint or restart")
      ->check(CLI::IsMember({"fixpoint", "restart"}));
  app.add_option("--seed", g.seed, "random seed for sampled checks");

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "phi table, graphs, regularity certificate");
  a->fallthrough();
  a->add_option("--n-max", analyze.n_max, "also count n-words for n = 1..N");
  a->add_option("--samples", analyze.samples, "conjugacy samples");
  a->add_option("--output,-o", analyze.output, "write the report to a file");

  GraphOptions graph;
  auto* gr = app.add_subcommand("graph", "eps-graph of the phi function");
  gr->fallthrough();
  gr->add_option("--eps", graph.eps, "+1 or -1");
  gr->add_option("--format", graph.format, "dot, table or json")
      ->check(CLI::IsMember({"dot", "table", "json"}));

  EntropyOptions entropy;
  auto* en = app.add_subcommand("entropy", "n-word counts and entropy estimates");
  en->fallthrough();
  en->add_option("--n-max", entropy.n_max, "largest word length")->required();
  en->add_flag("--oracle", entropy.oracle, "cross-check n <= 4 against brute force");
  en->add_flag("--from-initial", entropy.from_initial, "start only from the initial state");
  en->add_option("--node-budget", entropy.node_budget, "search node budget per n");

  SimulateOptions simulate;
  auto* si = app.add_subcommand("simulate", "run the global transition function");
  si->fallthrough();
  si->add_option("--state", simulate.state, "start state (default: initial)");
  si->add_option("--tape", simulate.tape, "tape contents starting at --offset");
  si->add_option("--offset", simulate.offset, "cell of the first tape symbol")->allow_extra_args(false);
  si->add_option("--steps", simulate.steps, "step budget");
  si->add_flag("--trace", simulate.trace, "print every configuration");

  GshiftOptions gshift;
  auto* gs = app.add_subcommand("gshift", "compiled generalized shift");
  gs->fallthrough();
  gs->add_option("--verify", gshift.verify, "check conjugacy on N random configurations");
  gs->add_flag("--dump", gshift.dump, "print the compiled shift as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*a) return cmd_analyze(g, analyze);
    if (*gr) return cmd_graph(g, graph);
    if (*en) return cmd_entropy(g, entropy);
    if (*si) return cmd_simulate(g, simulate);
    if (*gs) return cmd_gshift(g, gshift);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAnalysisFailure;
  }
  return kUsageError;
}
