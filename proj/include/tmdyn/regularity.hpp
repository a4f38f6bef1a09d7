#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tmdyn/machine.hpp"
#include "tmdyn/phi.hpp"

namespace tmdyn {

/// Block Q' x Sigma' on which the machine always shifts in `direction` and
/// never leaves Q'.
struct StrongWitness {
  int direction = 1;
  std::vector<State> states;    // sorted
  std::vector<Symbol> symbols;  // sorted, size >= 2
  friend bool operator==(const StrongWitness&, const StrongWitness&) = default;
};

/// Two distinct closed phi-walks from a common base state in one eps-graph.
/// Each walk lists the (state, symbol) pairs read along the cycle; the pair
/// after the last one would be back at `base`. Costs are 1 + sum of tau.
struct RegularWitness {
  int direction = 1;
  State base;
  std::vector<StateSymbol> walk_a;
  std::vector<StateSymbol> walk_b;
  std::uint64_t cost_a = 0;
  std::uint64_t cost_b = 0;

  std::uint64_t cost() const noexcept { return cost_a > cost_b ? cost_a : cost_b; }
  friend bool operator==(const RegularWitness&, const RegularWitness&) = default;
};

struct StrongSearchOptions {
  // Subset enumeration is exponential in |Sigma|; larger alphabets are refused.
  std::size_t max_alphabet = 16;
  // Search both directions for the largest Sigma' instead of stopping at the
  // first direction (+1, then -1) that admits a block.
  bool maximize_across_directions = false;
};

/// Returns a block with maximal |Sigma'| for the first direction that admits
/// one (and, for that Sigma', the greatest Q'), or nothing. Throws
/// std::length_error if the alphabet exceeds the cap.
std::optional<StrongWitness> check_strong_regularity(const TuringMachine& m,
                                                     const StrongSearchOptions& options = {});

/// Greatest Q' for a fixed direction and Sigma' (possibly empty).
std::vector<State> greatest_block_states(const TuringMachine& m, int direction,
                                         const std::vector<Symbol>& symbols);

/// Strongly connected components of an eps-graph. Components are listed in
/// order of their smallest vertex, vertices sorted within each.
std::vector<std::vector<State>> strongly_connected_components(const TuringMachine& m,
                                                              const EpsGraph& g);

std::optional<RegularWitness> check_regularity(const TuringMachine& m);

/// Closed walk of the given edge followed by a cheapest path back to its source,
/// staying within `allowed` vertices. Self-loops are doubled. Empty if no
/// return path exists.
std::vector<std::size_t> closed_walk_through(const TuringMachine& m, const EpsGraph& g,
                                             std::size_t first_edge,
                                             const std::vector<bool>& allowed);

/// Re-checks every clause of the definition directly against delta.
bool verify_witness(const TuringMachine& m, const StrongWitness& w);
/// Re-checks every clause of the definition directly against phi.
bool verify_witness(const TuringMachine& m, const RegularWitness& w);

/// Exact entropy bound log(log_of) / over.
struct LogBound {
  std::uint64_t log_of = 1;
  std::uint64_t over = 1;

  long double value() const;
  std::string decimal() const;
  std::string to_string() const;  // "log 2 / 3"
  friend bool operator==(const LogBound&, const LogBound&) = default;
};

/// Exact comparison of log(a.log_of)/a.over against log(b.log_of)/b.over.
std::strong_ordering compare(const LogBound& a, const LogBound& b);

enum class Verdict { strongly_regular, regular, no_witness_found };
std::string_view to_string(Verdict v);

struct EntropyCertificate {
  Verdict verdict = Verdict::no_witness_found;
  // Absent means no certificate, not zero entropy.
  std::optional<LogBound> bound;
  std::variant<std::monostate, StrongWitness, RegularWitness> witness;
};

LogBound bound_of(const StrongWitness& w);
LogBound bound_of(const RegularWitness& w);

EntropyCertificate entropy_lower_bound(const TuringMachine& m,
                                       const StrongSearchOptions& options = {});

}  // namespace tmdyn
