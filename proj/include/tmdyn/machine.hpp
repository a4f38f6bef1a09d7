#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tmdyn {

struct State {
  std::uint16_t id = 0;
  friend constexpr auto operator<=>(State, State) = default;
};

struct Symbol {
  std::uint16_t id = 0;
  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

struct StateSymbol {
  State state;
  Symbol symbol;
  friend constexpr auto operator<=>(const StateSymbol&, const StateSymbol&) = default;
};

// Move value as applied to the tape: +1 shifts the tape left (the head moves
// right), -1 shifts it right, 0 leaves it in place.
struct Transition {
  State next;
  Symbol write;
  int move = 0;
  friend constexpr bool operator==(const Transition&, const Transition&) = default;
};

// How the global transition function is extended to the halting state.
//   fixpoint: delta(q_halt, t) = (q_halt, t, 0)
//   restart:  delta(q_halt, t) = (q_0, t, 0)
enum class HaltingMode { fixpoint, restart };

std::string_view to_string(HaltingMode mode);
HaltingMode halting_mode_from_string(std::string_view text);

// Thrown for malformed machine documents. `line` is 1-based; 0 means the
// problem is not attached to a single line (e.g. a missing table entry).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Thrown when a machine violates a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable deterministic single-tape Turing machine (Q, q0, q_halt, Sigma,
/// delta). The table is total on (Q \ {q_halt}) x Sigma; the halting row is
/// synthesized from the configured halting mode.
class TuringMachine {
 public:
  /// `table` is indexed by state * |Sigma| + symbol. Entries of the halting
  /// row are ignored and may be empty; every other entry must be present.
  TuringMachine(std::vector<std::string> state_names,
                std::vector<std::string> symbol_names, Symbol blank,
                State initial, State halting,
                std::vector<std::optional<Transition>> table,
                HaltingMode mode = HaltingMode::fixpoint,
                std::string name = {});

  std::size_t num_states() const noexcept { return state_names_.size(); }
  std::size_t num_symbols() const noexcept { return symbol_names_.size(); }

  Symbol blank() const noexcept { return blank_; }
  State initial() const noexcept { return initial_; }
  State halting() const noexcept { return halting_; }
  HaltingMode halting_mode() const noexcept { return mode_; }
  const std::string& name() const noexcept { return name_; }

  bool is_halting(State q) const noexcept { return q == halting_; }

  /// Transition at (q, s), including the synthesized halting row.
  const Transition& delta(State q, Symbol s) const;

  const std::string& state_name(State q) const;
  const std::string& symbol_name(Symbol s) const;
  std::optional<State> find_state(std::string_view name) const;
  std::optional<Symbol> find_symbol(std::string_view name) const;

  std::vector<State> states() const;
  std::vector<State> working_states() const;  // Q \ {q_halt}
  std::vector<Symbol> symbols() const;

  TuringMachine with_halting_mode(HaltingMode mode) const;
  TuringMachine with_name(std::string name) const;

 private:
  std::size_t index(State q, Symbol s) const noexcept {
    return static_cast<std::size_t>(q.id) * symbol_names_.size() + s.id;
  }
  void rebuild_halting_row();

  std::vector<std::string> state_names_;
  std::vector<std::string> symbol_names_;
  Symbol blank_;
  State initial_;
  State halting_;
  HaltingMode mode_;
  std::string name_;
  std::vector<Transition> table_;
};

/// Parses the line-oriented machine format:
///
///   # comment
///   states:   u1 u2 halt
///   alphabet: 0 1
///   blank:    0
///   initial:  u1
///   halting:  halt
///   u1 0 -> u2 1 R
///   u2 1 -> HALT
///
/// Moves are L (-1), R (+1) and N (0). R means the head moves right, which is
/// the tape shifting left. `-> HALT` abbreviates `-> <halting> <same symbol> N`.
/// An optional `name:` header labels the machine.
TuringMachine parse_machine(std::string_view text);

/// Inverse of parse_machine (up to comments and whitespace).
std::string format_machine(const TuringMachine& m);

}  // namespace tmdyn
