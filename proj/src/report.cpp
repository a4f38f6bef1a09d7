#include "tmdyn/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace tmdyn::report {

namespace {

ordered_json pairs_json(const TuringMachine& m, const std::vector<StateSymbol>& walk) {
  ordered_json out = ordered_json::array();
  for (const auto& [q, s] : walk) out.push_back({m.state_name(q), m.symbol_name(s)});
  return out;
}

std::string long_double_text(long double v, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << v;
  return out.str();
}

}  // namespace

ordered_json phi_table_json(const TuringMachine& m, const PhiTable& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& e : table.entries()) {
    const auto& o = e.outcome;
    const bool shift = o.kind == PhiKind::shift;
    ordered_json row;
    row["state"] = m.state_name(e.state);
    row["symbol"] = m.symbol_name(e.symbol);
    row["kind"] = std::string(to_string(o.kind));
    row["direction"] = shift ? ordered_json(o.direction) : ordered_json(nullptr);
    row["exit_state"] = shift ? ordered_json(m.state_name(o.exit_state)) : ordered_json(nullptr);
    row["tau"] = shift ? ordered_json(o.tau) : ordered_json(nullptr);
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json graph_json(const TuringMachine& m, const EpsGraph& g) {
  ordered_json out;
  out["direction"] = g.direction;
  ordered_json vertices = ordered_json::array();
  for (State v : g.vertices) vertices.push_back(m.state_name(v));
  out["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", m.state_name(e.from)},
                     {"to", m.state_name(e.to)},
                     {"label", m.symbol_name(e.label)},
                     {"tau", e.tau}});
  }
  out["edges"] = std::move(edges);
  return out;
}

ordered_json witness_json(const TuringMachine& m, const StrongWitness& w) {
  ordered_json out;
  out["kind"] = "strong";
  out["direction"] = w.direction;
  ordered_json states = ordered_json::array();
  for (State q : w.states) states.push_back(m.state_name(q));
  ordered_json symbols = ordered_json::array();
  for (Symbol s : w.symbols) symbols.push_back(m.symbol_name(s));
  out["states"] = std::move(states);
  out["symbols"] = std::move(symbols);
  return out;
}

ordered_json witness_json(const TuringMachine& m, const RegularWitness& w) {
  ordered_json out;
  out["kind"] = "regular";
  out["direction"] = w.direction;
  out["base"] = m.state_name(w.base);
  out["walk_a"] = pairs_json(m, w.walk_a);
  out["walk_b"] = pairs_json(m, w.walk_b);
  out["cost_a"] = w.cost_a;
  out["cost_b"] = w.cost_b;
  return out;
}

ordered_json certificate_json(const TuringMachine& m, const EntropyCertificate& cert) {
  ordered_json out;
  out["verdict"] = std::string(to_string(cert.verdict));
  if (cert.bound) {
    out["bound"] = {{"log_of", cert.bound->log_of},
                    {"over", cert.bound->over},
                    {"decimal", cert.bound->decimal()},
                    {"text", cert.bound->to_string()}};
  } else {
    out["bound"] = nullptr;
  }
  std::visit(
      [&](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, std::monostate>) {
          out["direction"] = nullptr;
          out["witness"] = nullptr;
        } else {
          out["direction"] = w.direction;
          out["witness"] = witness_json(m, w);
        }
      },
      cert.witness);
  return out;
}

ordered_json word_report_json(const TuringMachine& m, const WordCountReport& report) {
  ordered_json out;
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"count", r.count},
                    {"e_n", long_double_text(r.estimate, 20)},
                    {"min_e_n", long_double_text(r.min_estimate, 20)}});
  }
  out["rows"] = std::move(rows);
  out["error"] = report.error ? ordered_json(*report.error) : ordered_json(nullptr);
  out["certificate"] = certificate_json(m, report.certificate);
  return out;
}

std::string word_report_csv(const WordCountReport& report) {
  std::ostringstream out;
  out << "n,count,e_n,min_e_n\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.count << ',' << long_double_text(r.estimate, 20) << ','
        << long_double_text(r.min_estimate, 20) << '\n';
  }
  return out.str();
}

ordered_json gshift_json(const TuringMachine& m, const GeneralizedShift& d) {
  ordered_json out;
  out["radius"] = d.radius();
  ordered_json alphabet = ordered_json::array();
  for (std::uint32_t i = 0; i < d.alphabet_size(); ++i) alphabet.push_back(a_name(m, i));
  out["alphabet"] = std::move(alphabet);
  out["default_symbol"] = a_name(m, a_index(m, m.blank()));
  out["default_rule"] = {{"G", "identity"}, {"F", 0}};
  ordered_json rules = ordered_json::array();
  for (const auto& [window, rule] : d.rules()) {
    ordered_json w = ordered_json::array(), g = ordered_json::array();
    for (auto a : window) w.push_back(a_name(m, a));
    for (auto a : rule.replacement) g.push_back(a_name(m, a));
    rules.push_back({{"window", std::move(w)}, {"G", std::move(g)}, {"F", rule.shift}});
  }
  out["rules"] = std::move(rules);
  return out;
}

ordered_json conjugacy_json(const TuringMachine& m, const ConjugacyReport& r) {
  ordered_json out;
  out["seed"] = r.seed;
  out["samples"] = r.samples;
  out["passed"] = r.passed;
  out["failed"] = r.failed;
  out["first_counterexample"] = r.first_counterexample
                                    ? configuration_json(m, *r.first_counterexample)
                                    : ordered_json(nullptr);
  return out;
}

ordered_json configuration_json(const TuringMachine& m, const Configuration& x) {
  ordered_json out;
  out["state"] = m.state_name(x.state());
  ordered_json tape = ordered_json::object();
  for (const auto& [cell, s] : x.support()) tape[std::to_string(cell)] = m.symbol_name(s);
  out["tape"] = std::move(tape);
  out["text"] = render(m, x);
  return out;
}

std::string fingerprint(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tmdyn::report
