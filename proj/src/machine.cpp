#include "tmdyn/machine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tmdyn {

std::string_view to_string(HaltingMode mode) {
  return mode == HaltingMode::fixpoint ? "fixpoint" : "restart";
}

HaltingMode halting_mode_from_string(std::string_view text) {
  if (text == "fixpoint") return HaltingMode::fixpoint;
  if (text == "restart") return HaltingMode::restart;
  throw std::invalid_argument("unknown halting mode '" + std::string(text) +
                              "' (expected fixpoint or restart)");
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw ValidationError(std::string("empty ") + what + " name");
    if (!seen.insert(n).second)
      throw ValidationError(std::string("duplicate ") + what + " '" + n + "'");
  }
}

}  // namespace

TuringMachine::TuringMachine(std::vector<std::string> state_names,
                             std::vector<std::string> symbol_names, Symbol blank,
                             State initial, State halting,
                             std::vector<std::optional<Transition>> table,
                             HaltingMode mode, std::string name)
    : state_names_(std::move(state_names)),
      symbol_names_(std::move(symbol_names)),
      blank_(blank),
      initial_(initial),
      halting_(halting),
      mode_(mode),
      name_(std::move(name)) {
  if (symbol_names_.size() < 2)
    throw ValidationError("alphabet must have >= 2 symbols");
  if (state_names_.empty()) throw ValidationError("state set is empty");
  if (state_names_.size() > 0xFFFF || symbol_names_.size() > 0xFFFF)
    throw ValidationError("too many states or symbols");
  check_unique(state_names_, "state");
  check_unique(symbol_names_, "symbol");
  if (blank_.id >= symbol_names_.size()) throw ValidationError("blank symbol out of range");
  if (initial_.id >= state_names_.size()) throw ValidationError("initial state out of range");
  if (halting_.id >= state_names_.size()) throw ValidationError("halting state out of range");
  if (table.size() != state_names_.size() * symbol_names_.size())
    throw ValidationError("transition table has wrong size");

  table_.resize(table.size());
  for (std::size_t qi = 0; qi < state_names_.size(); ++qi) {
    State q{static_cast<std::uint16_t>(qi)};
    if (q == halting_) continue;
    for (std::size_t si = 0; si < symbol_names_.size(); ++si) {
      Symbol s{static_cast<std::uint16_t>(si)};
      const auto& entry = table[index(q, s)];
      if (!entry)
        throw ValidationError("missing transition for (" + state_names_[qi] + ", " +
                              symbol_names_[si] + ")");
      if (entry->next.id >= state_names_.size() || entry->write.id >= symbol_names_.size())
        throw ValidationError("transition at (" + state_names_[qi] + ", " +
                              symbol_names_[si] + ") is out of range");
      if (entry->move < -1 || entry->move > 1)
        throw ValidationError("transition at (" + state_names_[qi] + ", " +
                              symbol_names_[si] + ") has invalid move");
      table_[index(q, s)] = *entry;
    }
  }
  rebuild_halting_row();
}

void TuringMachine::rebuild_halting_row() {
  const State target = mode_ == HaltingMode::fixpoint ? halting_ : initial_;
  for (std::size_t si = 0; si < symbol_names_.size(); ++si) {
    Symbol s{static_cast<std::uint16_t>(si)};
    table_[index(halting_, s)] = Transition{target, s, 0};
  }
}

const Transition& TuringMachine::delta(State q, Symbol s) const {
  return table_[index(q, s)];
}

const std::string& TuringMachine::state_name(State q) const { return state_names_.at(q.id); }
const std::string& TuringMachine::symbol_name(Symbol s) const { return symbol_names_.at(s.id); }

std::optional<State> TuringMachine::find_state(std::string_view name) const {
  auto it = std::find(state_names_.begin(), state_names_.end(), name);
  if (it == state_names_.end()) return std::nullopt;
  return State{static_cast<std::uint16_t>(it - state_names_.begin())};
}

std::optional<Symbol> TuringMachine::find_symbol(std::string_view name) const {
  auto it = std::find(symbol_names_.begin(), symbol_names_.end(), name);
  if (it == symbol_names_.end()) return std::nullopt;
  return Symbol{static_cast<std::uint16_t>(it - symbol_names_.begin())};
}

std::vector<State> TuringMachine::states() const {
  std::vector<State> out;
  for (std::size_t i = 0; i < state_names_.size(); ++i)
    out.push_back(State{static_cast<std::uint16_t>(i)});
  return out;
}

std::vector<State> TuringMachine::working_states() const {
  auto out = states();
  std::erase(out, halting_);
  return out;
}

std::vector<Symbol> TuringMachine::symbols() const {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < symbol_names_.size(); ++i)
    out.push_back(Symbol{static_cast<std::uint16_t>(i)});
  return out;
}

TuringMachine TuringMachine::with_halting_mode(HaltingMode mode) const {
  TuringMachine copy = *this;
  copy.mode_ = mode;
  copy.rebuild_halting_row();
  return copy;
}

TuringMachine TuringMachine::with_name(std::string name) const {
  TuringMachine copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Header {
  std::vector<std::string> values;
  std::size_t line = 0;
};

}  // namespace

TuringMachine parse_machine(std::string_view text) {
  std::map<std::string, Header> headers;
  struct RawRule {
    std::vector<std::string> tokens;
    std::size_t line;
  };
  std::vector<RawRule> rules;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (auto colon = tokens[0].find(':'); colon != std::string::npos) {
      // `key: values` or `key:value ...`
      std::string key = tokens[0].substr(0, colon);
      std::string rest = tokens[0].substr(colon + 1);
      std::vector<std::string> values;
      if (!rest.empty()) values.push_back(rest);
      values.insert(values.end(), tokens.begin() + 1, tokens.end());
      static const std::set<std::string> known{"states",  "alphabet", "blank",
                                               "initial", "halting",  "name"};
      if (!known.contains(key)) throw ParseError(line_no, "unknown header '" + key + "'");
      if (!rules.empty()) throw ParseError(line_no, "header '" + key + "' after rules");
      if (headers.contains(key)) throw ParseError(line_no, "repeated header '" + key + "'");
      if (values.empty()) throw ParseError(line_no, "header '" + key + "' has no value");
      headers[key] = Header{std::move(values), line_no};
      continue;
    }
    rules.push_back(RawRule{std::move(tokens), line_no});
  }

  const std::size_t first_rule_line = rules.empty() ? line_no : rules.front().line;
  for (const char* key : {"states", "alphabet", "blank", "initial", "halting"}) {
    if (!headers.contains(key))
      throw ParseError(first_rule_line, std::string("missing header '") + key + ":'");
  }
  for (const char* key : {"blank", "initial", "halting", "name"}) {
    auto it = headers.find(key);
    if (it != headers.end() && it->second.values.size() != 1)
      throw ParseError(it->second.line, std::string("header '") + key + "' takes one value");
  }

  const auto& state_names = headers["states"].values;
  const auto& symbol_names = headers["alphabet"].values;
  auto dup_check = [](const Header& h, const char* what) {
    std::set<std::string_view> seen;
    for (const auto& n : h.values)
      if (!seen.insert(n).second)
        throw ParseError(h.line, std::string("duplicate ") + what + " '" + n + "'");
  };
  dup_check(headers["states"], "state");
  dup_check(headers["alphabet"], "symbol");
  if (symbol_names.size() < 2)
    throw ParseError(headers["alphabet"].line, "alphabet must have >= 2 symbols");

  auto lookup = [](const std::vector<std::string>& names, const std::string& tok)
      -> std::optional<std::uint16_t> {
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::uint16_t>(it - names.begin());
  };
  auto header_state = [&](const char* key) {
    const Header& h = headers[key];
    auto id = lookup(state_names, h.values[0]);
    if (!id) throw ParseError(h.line, "unknown state '" + h.values[0] + "'");
    return State{*id};
  };
  const State initial = header_state("initial");
  const State halting = header_state("halting");
  auto blank_id = lookup(symbol_names, headers["blank"].values[0]);
  if (!blank_id)
    throw ParseError(headers["blank"].line,
                     "unknown symbol '" + headers["blank"].values[0] + "'");

  std::vector<std::optional<Transition>> table(state_names.size() * symbol_names.size());
  for (const auto& rule : rules) {
    const auto& t = rule.tokens;
    const bool halt_form = t.size() == 4 && t[2] == "->" && t[3] == "HALT";
    if (!halt_form && (t.size() != 6 || t[2] != "->"))
      throw ParseError(rule.line,
                       "expected 'state symbol -> state symbol move' or 'state symbol -> HALT'");
    auto q = lookup(state_names, t[0]);
    if (!q) throw ParseError(rule.line, "unknown state '" + t[0] + "'");
    auto s = lookup(symbol_names, t[1]);
    if (!s) throw ParseError(rule.line, "unknown symbol '" + t[1] + "'");
    if (State{*q} == halting)
      throw ParseError(rule.line, "rule for the halting state '" + t[0] + "'");
    auto& slot = table[static_cast<std::size_t>(*q) * symbol_names.size() + *s];
    if (slot) throw ParseError(rule.line, "duplicate rule for (" + t[0] + ", " + t[1] + ")");

    if (halt_form) {
      slot = Transition{halting, Symbol{*s}, 0};
      continue;
    }
    auto q2 = lookup(state_names, t[3]);
    if (!q2) throw ParseError(rule.line, "unknown state '" + t[3] + "'");
    auto s2 = lookup(symbol_names, t[4]);
    if (!s2) throw ParseError(rule.line, "unknown symbol '" + t[4] + "'");
    int move = 0;
    if (t[5] == "L") move = -1;
    else if (t[5] == "R") move = 1;
    else if (t[5] == "N") move = 0;
    else throw ParseError(rule.line, "unknown move '" + t[5] + "' (expected L, R or N)");
    slot = Transition{State{*q2}, Symbol{*s2}, move};
  }

  for (std::size_t qi = 0; qi < state_names.size(); ++qi) {
    if (qi == halting.id) continue;
    for (std::size_t si = 0; si < symbol_names.size(); ++si) {
      if (!table[qi * symbol_names.size() + si])
        throw ParseError(0, "missing rule for (" + state_names[qi] + ", " + symbol_names[si] +
                                ")");
    }
  }

  std::string name;
  if (auto it = headers.find("name"); it != headers.end()) name = it->second.values[0];
  return TuringMachine(state_names, symbol_names, Symbol{*blank_id}, initial, halting,
                       std::move(table), HaltingMode::fixpoint, std::move(name));
}

std::string format_machine(const TuringMachine& m) {
  std::ostringstream out;
  if (!m.name().empty()) out << "name: " << m.name() << '\n';
  out << "states:";
  for (State q : m.states()) out << ' ' << m.state_name(q);
  out << "\nalphabet:";
  for (Symbol s : m.symbols()) out << ' ' << m.symbol_name(s);
  out << "\nblank: " << m.symbol_name(m.blank()) << '\n';
  out << "initial: " << m.state_name(m.initial()) << '\n';
  out << "halting: " << m.state_name(m.halting()) << '\n';
  for (State q : m.working_states()) {
    for (Symbol s : m.symbols()) {
      const Transition& t = m.delta(q, s);
      out << m.state_name(q) << ' ' << m.symbol_name(s) << " -> " << m.state_name(t.next) << ' '
          << m.symbol_name(t.write) << ' ' << (t.move < 0 ? 'L' : t.move > 0 ? 'R' : 'N')
          << '\n';
    }
  }
  return out.str();
}

}  // namespace tmdyn
