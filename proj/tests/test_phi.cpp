#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "support/fixtures.hpp"
#include "support/random_machine.hpp"
#include "tmdyn/corpus.hpp"
#include "tmdyn/phi.hpp"

using namespace tmdyn;
using namespace tmdyn::testing;

namespace {

State st(const TuringMachine& m, const char* name) { return *m.find_state(name); }
Symbol sy(const TuringMachine& m, const char* name) { return *m.find_symbol(name); }

using NamedEdge = std::tuple<std::string, std::string, std::string>;

std::multiset<NamedEdge> named_edges(const TuringMachine& m, const EpsGraph& g) {
  std::multiset<NamedEdge> out;
  for (const auto& e : g.edges)
    out.insert({m.state_name(e.from), m.state_name(e.to), m.symbol_name(e.label)});
  return out;
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);)
    if (line.find(needle) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_CASE("phi: corpus examples") {
  const auto w = builtin_machine("wutm_6_2");
  CHECK(phi(w, st(w, "u4"), sy(w, "g")) == PhiOutcome{PhiKind::shift, +1, st(w, "u5"), 1});

  const auto u = builtin_machine("utm_6_4");
  CHECK(phi(u, st(u, "u6"), sy(u, "c")).kind == PhiKind::halt);
  CHECK_THROWS_AS(phi(u, u.halting(), sy(u, "g")), std::invalid_argument);
}

TEST_CASE("phi: periodic fixed point") {
  const auto m = toy(kStayForever);
  CHECK(phi(m, st(m, "q"), sy(m, "0")).kind == PhiKind::periodic);
  const auto table = phi_table(m);
  CHECK(table.count(PhiKind::periodic) == 2);
  CHECK(eps_graph(m, +1).edges.empty());
  CHECK(eps_graph(m, -1).edges.empty());
}

TEST_CASE("phi: tau counts the shifting step") {
  // a 0 -> a 1 N, a 1 -> b 1 R: from (a, 0) the shift happens on the second step.
  const auto m = parse_machine(
      "states: a b halt\nalphabet: 0 1\nblank: 0\ninitial: a\nhalting: halt\n"
      "a 0 -> a 1 N\na 1 -> b 1 R\nb 0 -> b 0 N\nb 1 -> HALT\n");
  CHECK(phi(m, st(m, "a"), sy(m, "0")) == PhiOutcome{PhiKind::shift, +1, st(m, "b"), 2});
  CHECK(phi(m, st(m, "a"), sy(m, "1")) == PhiOutcome{PhiKind::shift, +1, st(m, "b"), 1});
  CHECK(phi(m, st(m, "b"), sy(m, "0")).kind == PhiKind::periodic);
  CHECK(phi(m, st(m, "b"), sy(m, "1")).kind == PhiKind::halt);
}

TEST_CASE("phi: halt takes precedence over a shifting transition") {
  const auto m = parse_machine(
      "states: a halt\nalphabet: 0 1\nblank: 0\ninitial: a\nhalting: halt\n"
      "a 0 -> halt 0 R\na 1 -> a 0 N\n");
  CHECK(phi(m, st(m, "a"), sy(m, "0")).kind == PhiKind::halt);
  CHECK(phi(m, st(m, "a"), sy(m, "1")).kind == PhiKind::halt);
}

TEST_CASE("phi_table: corpus shapes") {
  const auto w = builtin_machine("wutm_6_2");
  const auto tw = phi_table(w);
  CHECK(tw.entries().size() == 12);
  CHECK(tw.count_shifts(+1) == 5);
  CHECK(tw.count_shifts(-1) == 7);

  const auto u = builtin_machine("utm_6_4");
  const auto tu = phi_table(u);
  CHECK(tu.entries().size() == 24);
  CHECK(tu.count(PhiKind::halt) == 1);
  CHECK(tu.at(st(u, "u6"), sy(u, "c")).kind == PhiKind::halt);
  for (const auto& e : tu.entries())
    if (e.outcome.kind == PhiKind::shift) CHECK(e.outcome.tau == 1);
}

TEST_CASE("eps_graph: wutm_6_2 plus graph") {
  const auto w = builtin_machine("wutm_6_2");
  const auto g = eps_graph(w, +1);
  std::vector<std::string> vertices;
  for (State v : g.vertices) vertices.push_back(w.state_name(v));
  CHECK(vertices == std::vector<std::string>{"u1", "u2", "u3", "u4", "u5", "u6"});
  const std::multiset<NamedEdge> expected{{"u3", "u2", "g"},
                                          {"u4", "u5", "g"},
                                          {"u4", "u6", "b"},
                                          {"u5", "u4", "b"},
                                          {"u6", "u4", "b"}};
  CHECK(named_edges(w, g) == expected);
}

TEST_CASE("eps_graph: wutm_6_2 minus graph") {
  const auto w = builtin_machine("wutm_6_2");
  const std::multiset<NamedEdge> expected{{"u1", "u1", "g"}, {"u1", "u2", "b"},
                                          {"u2", "u6", "g"}, {"u2", "u3", "b"},
                                          {"u3", "u3", "b"}, {"u5", "u4", "g"},
                                          {"u6", "u1", "g"}};
  CHECK(named_edges(w, eps_graph(w, -1)) == expected);
}

TEST_CASE("eps_graph: utm_6_4 graphs") {
  const auto u = builtin_machine("utm_6_4");
  const std::multiset<NamedEdge> plus{
      {"u1", "u2", "δ"}, {"u2", "u1", "g"}, {"u2", "u2", "b"}, {"u2", "u2", "δ"},
      {"u2", "u5", "c"}, {"u4", "u2", "g"}, {"u4", "u4", "b"}, {"u4", "u4", "δ"},
      {"u4", "u5", "c"}, {"u5", "u6", "b"}, {"u5", "u5", "δ"}, {"u6", "u5", "b"},
      {"u6", "u1", "δ"}};
  const std::multiset<NamedEdge> minus{{"u1", "u1", "g"}, {"u1", "u1", "b"}, {"u1", "u1", "c"},
                                       {"u3", "u3", "g"}, {"u3", "u5", "b"}, {"u3", "u5", "δ"},
                                       {"u3", "u3", "c"}, {"u5", "u6", "g"}, {"u5", "u3", "c"},
                                       {"u6", "u4", "g"}};
  CHECK(named_edges(u, eps_graph(u, +1)) == plus);
  CHECK(named_edges(u, eps_graph(u, -1)) == minus);
  CHECK_THROWS_AS(eps_graph(u, 0), std::invalid_argument);
}

TEST_CASE("to_dot: deterministic text") {
  const auto w = builtin_machine("wutm_6_2");
  const auto dot = to_dot(w, eps_graph(w, +1));
  CHECK(dot.rfind("digraph \"wutm_6_2_eps_plus\" {", 0) == 0);
  CHECK(count_lines_with(dot, "->") == 5);
  CHECK(count_lines_with(dot, "\"u") == 11);  // 6 vertex lines + 5 edge lines
  CHECK(dot.find("\"u4\" -> \"u5\" [label=\"g\"];") != std::string::npos);
  CHECK(dot == to_dot(w, eps_graph(w, +1)));

  const auto s = toy(kStayForever);
  const auto empty = to_dot(s, eps_graph(s, -1), "g");
  CHECK(count_lines_with(empty, "->") == 0);
  CHECK(count_lines_with(empty, "\"q\";") == 1);
}

TEST_CASE("to_dot: parallel edges stay distinct") {
  const auto m = parse_machine(
      "states: a b halt\nalphabet: 0 1\nblank: 0\ninitial: a\nhalting: halt\n"
      "a 0 -> b 0 R\na 1 -> b 1 R\nb 0 -> b 0 N\nb 1 -> b 1 N\n");
  const auto dot = to_dot(m, eps_graph(m, +1));
  CHECK(dot.find("\"a\" -> \"b\" [label=\"0\"];") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"b\" [label=\"1\"];") != std::string::npos);
}

TEST_CASE("phi_table_text: one row per pair") {
  const auto w = builtin_machine("wutm_6_2");
  const auto text = phi_table_text(w, phi_table(w));
  std::istringstream in(text);
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) rows += line.rfind("u", 0) == 0;
  CHECK(rows == 12);
}

// ---- properties ------------------------------------------------------------

TEST_CASE("property: phi agrees with step-by-step semantics") {
  std::mt19937_64 rng(21);
  RandomMachineShape shape;
  shape.stay_probability = 0.5;
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_machine(rng, shape);
    const std::size_t bound = m.num_states() * m.num_symbols();
    for (State q : m.working_states()) {
      for (Symbol s : m.symbols()) {
        const auto o = phi(m, q, s);
        CHECK(o == phi(m, q, s));
        auto x = random_config(rng, m);
        x.set_state(q);
        x.set(0, s);
        switch (o.kind) {
          case PhiKind::shift: {
            CHECK(o.exit_state != m.halting());
            CHECK(o.tau >= 1);
            CHECK(o.tau <= bound + 1);
            for (std::uint32_t t = 1; t <= o.tau; ++t) {
              const auto& tr = m.delta(x.state(), x.at(0));
              CHECK(tr.move == (t < o.tau ? 0 : o.direction));
              step_in_place(m, x);
            }
            CHECK(x.state() == o.exit_state);
            break;
          }
          case PhiKind::halt: {
            bool halted = false;
            for (std::size_t t = 0; t <= bound && !halted; ++t) {
              const auto& tr = m.delta(x.state(), x.at(0));
              if (tr.next == m.halting()) halted = true;
              else CHECK(tr.move == 0);
              step_in_place(m, x);
            }
            CHECK(halted);
            break;
          }
          case PhiKind::periodic: {
            std::set<std::pair<State, Symbol>> seen;
            bool repeated = false;
            for (std::size_t t = 0; t <= bound && !repeated; ++t) {
              if (!seen.insert({x.state(), x.at(0)}).second) {
                repeated = true;
                break;
              }
              const auto& tr = m.delta(x.state(), x.at(0));
              CHECK(tr.move == 0);
              CHECK(tr.next != m.halting());
              step_in_place(m, x);
            }
            CHECK(repeated);
            break;
          }
        }
      }
    }
  }
}

TEST_CASE("property: graph edges match table shift entries") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_machine(rng);
    const auto table = phi_table(m);
    for (int d : {+1, -1}) {
      const auto g = eps_graph(table, m, d);
      CHECK(g.edges.size() == table.count_shifts(d));
      CHECK(g.vertices.size() == m.num_states() - 1);
      std::set<std::pair<State, Symbol>> labels;
      for (const auto& e : g.edges) {
        CHECK(labels.insert({e.from, e.label}).second);
        CHECK(e.from != m.halting());
        CHECK(e.to != m.halting());
      }
    }
  }
}
