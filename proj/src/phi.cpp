#include "tmdyn/phi.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tmdyn {

std::string_view to_string(PhiKind kind) {
  switch (kind) {
    case PhiKind::halt: return "H";
    case PhiKind::periodic: return "P";
    case PhiKind::shift: return "S";
  }
  return "?";
}

PhiOutcome phi(const TuringMachine& m, State q, Symbol s) {
  if (m.is_halting(q)) throw std::invalid_argument("phi is undefined at the halting state");

  // The head never moves before the first shift, so only the (state, cell 0)
  // pair evolves and a repeat of that pair means a cycle.
  std::vector<bool> seen(m.num_states() * m.num_symbols(), false);
  auto key = [&](State a, Symbol b) { return std::size_t{a.id} * m.num_symbols() + b.id; };

  State cur_q = q;
  Symbol cur_s = s;
  seen[key(cur_q, cur_s)] = true;
  for (std::uint32_t stage = 0;; ++stage) {
    const Transition& t = m.delta(cur_q, cur_s);
    if (m.is_halting(t.next)) return PhiOutcome{PhiKind::halt, 0, t.next, stage + 1};
    if (t.move != 0) return PhiOutcome{PhiKind::shift, t.move, t.next, stage + 1};
    cur_q = t.next;
    cur_s = t.write;
    if (seen[key(cur_q, cur_s)]) return PhiOutcome{PhiKind::periodic, 0, cur_q, stage + 1};
    seen[key(cur_q, cur_s)] = true;
  }
}

PhiTable::PhiTable(const TuringMachine& m)
    : num_symbols_(m.num_symbols()),
      index_(m.num_states() * m.num_symbols(), SIZE_MAX) {
  for (State q : m.working_states()) {
    for (Symbol s : m.symbols()) {
      index_[std::size_t{q.id} * num_symbols_ + s.id] = entries_.size();
      entries_.push_back(PhiEntry{q, s, phi(m, q, s)});
    }
  }
}

const PhiOutcome& PhiTable::at(State q, Symbol s) const {
  std::size_t i = index_.at(std::size_t{q.id} * num_symbols_ + s.id);
  if (i == SIZE_MAX) throw std::invalid_argument("phi is undefined at the halting state");
  return entries_[i].outcome;
}

std::size_t PhiTable::count(PhiKind kind) const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.outcome.kind == kind;
  return n;
}

std::size_t PhiTable::count_shifts(int direction) const {
  std::size_t n = 0;
  for (const auto& e : entries_)
    n += e.outcome.kind == PhiKind::shift && e.outcome.direction == direction;
  return n;
}

PhiTable phi_table(const TuringMachine& m) { return PhiTable(m); }

std::string phi_table_text(const TuringMachine& m, const PhiTable& table) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "state" << std::setw(8) << "symbol" << std::setw(6) << "kind"
      << std::setw(5) << "dir" << std::setw(8) << "exit" << "tau\n";
  for (const auto& e : table.entries()) {
    const auto& o = e.outcome;
    const bool shift = o.kind == PhiKind::shift;
    // setw counts bytes; pad by hand so multibyte names stay aligned enough.
    auto cell = [&](const std::string& text, int width) {
      out << text;
      int pad = width - static_cast<int>(text.size());
      out << std::string(static_cast<std::size_t>(std::max(pad, 1)), ' ');
    };
    cell(m.state_name(e.state), 8);
    cell(m.symbol_name(e.symbol), 8);
    cell(std::string(to_string(o.kind)), 6);
    cell(shift ? (o.direction > 0 ? "+1" : "-1") : "-", 5);
    cell(shift ? m.state_name(o.exit_state) : "-", 8);
    out << (shift ? std::to_string(o.tau) : "-") << '\n';
  }
  return out.str();
}

std::vector<std::size_t> EpsGraph::out_edges(State q) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].from == q) out.push_back(i);
  return out;
}

EpsGraph eps_graph(const PhiTable& table, const TuringMachine& m, int direction) {
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("direction must be +1 or -1");
  EpsGraph g;
  g.direction = direction;
  g.vertices = m.working_states();
  for (const auto& e : table.entries()) {
    if (e.outcome.kind == PhiKind::shift && e.outcome.direction == direction)
      g.edges.push_back(EpsEdge{e.state, e.outcome.exit_state, e.symbol, e.outcome.tau});
  }
  return g;
}

EpsGraph eps_graph(const TuringMachine& m, int direction) {
  return eps_graph(phi_table(m), m, direction);
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const TuringMachine& m, const EpsGraph& g, const std::string& graph_name) {
  std::string name = graph_name;
  if (name.empty()) {
    name = (m.name().empty() ? std::string("machine") : m.name()) +
           (g.direction > 0 ? "_eps_plus" : "_eps_minus");
  }
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  for (State v : g.vertices) out << "  " << dot_quote(m.state_name(v)) << ";\n";
  for (const auto& e : g.edges) {
    out << "  " << dot_quote(m.state_name(e.from)) << " -> " << dot_quote(m.state_name(e.to))
        << " [label=" << dot_quote(m.symbol_name(e.label)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tmdyn
