#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmdyn/machine.hpp"

namespace tmdyn {

enum class PhiKind { halt, periodic, shift };

std::string_view to_string(PhiKind kind);

/// Eventual fate of the head cell started from (q, s) while the tape does not
/// move.
///
/// For `shift`, `tau` counts every machine step up to and including the one
/// that moves the tape, so an immediate shift has tau = 1. For `halt` it is
/// the number of steps until q_halt is entered, and for `periodic` the number
/// of non-moving steps taken before a (state, symbol) pair repeated.
struct PhiOutcome {
  PhiKind kind = PhiKind::periodic;
  int direction = 0;  // +1 or -1 when kind == shift
  State exit_state;   // meaningful when kind == shift
  std::uint32_t tau = 0;

  friend bool operator==(const PhiOutcome&, const PhiOutcome&) = default;
};

/// Throws std::invalid_argument when q is the halting state.
PhiOutcome phi(const TuringMachine& m, State q, Symbol s);

struct PhiEntry {
  State state;
  Symbol symbol;
  PhiOutcome outcome;
};

/// phi at every (non-halting state, symbol) pair, ordered by state then symbol.
class PhiTable {
 public:
  explicit PhiTable(const TuringMachine& m);

  const PhiOutcome& at(State q, Symbol s) const;
  const std::vector<PhiEntry>& entries() const noexcept { return entries_; }
  std::size_t count(PhiKind kind) const;
  std::size_t count_shifts(int direction) const;

 private:
  std::size_t num_symbols_;
  std::vector<PhiEntry> entries_;
  std::vector<std::size_t> index_;  // state * |Sigma| + symbol -> entry
};

PhiTable phi_table(const TuringMachine& m);

/// Whitespace-aligned dump: state, symbol, kind, direction, exit state, tau.
std::string phi_table_text(const TuringMachine& m, const PhiTable& table);

struct EpsEdge {
  State from;
  State to;
  Symbol label;
  std::uint32_t tau = 0;
  friend bool operator==(const EpsEdge&, const EpsEdge&) = default;
};

/// Directed multigraph on the non-halting states with one edge q -> q' per
/// symbol s such that phi(q, s) = shift(direction, q').
struct EpsGraph {
  int direction = 1;
  std::vector<State> vertices;
  std::vector<EpsEdge> edges;  // sorted by (from, label)

  std::vector<std::size_t> out_edges(State q) const;
};

EpsGraph eps_graph(const TuringMachine& m, int direction);
EpsGraph eps_graph(const PhiTable& table, const TuringMachine& m, int direction);

/// Graphviz digraph text. Deterministic: vertices by id, edges by (from, label).
std::string to_dot(const TuringMachine& m, const EpsGraph& g, const std::string& graph_name = {});

}  // namespace tmdyn
