#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tmdyn/machine.hpp"

namespace tmdyn {

/// A machine state together with a finitely supported bi-infinite tape. The
/// head is pinned at cell 0; moving the machine re-indexes the tape. Blank
/// cells are never stored, so two configurations are equal iff their fields
/// are.
class Configuration {
 public:
  Configuration(State state, Symbol blank) : state_(state), blank_(blank) {}

  State state() const noexcept { return state_; }
  void set_state(State q) noexcept { state_ = q; }
  Symbol blank() const noexcept { return blank_; }

  Symbol at(std::int64_t cell) const;
  void set(std::int64_t cell, Symbol s);

  /// Re-indexes the tape: after shift(+1) the old cell i is cell i - 1.
  void shift(int move) noexcept { origin_ += move; }

  /// Stored (non-blank) cells in increasing cell order.
  std::vector<std::pair<std::int64_t, Symbol>> support() const;
  std::size_t support_size() const noexcept { return cells_.size(); }
  std::optional<std::int64_t> lowest_cell() const;
  std::optional<std::int64_t> highest_cell() const;

  friend bool operator==(const Configuration& a, const Configuration& b);

 private:
  State state_;
  Symbol blank_;
  // Logical cell i lives at key i + origin_.
  std::int64_t origin_ = 0;
  std::map<std::int64_t, Symbol> cells_;
};

/// Configuration in state q whose tape holds `window` starting at `offset`.
Configuration make_config(const TuringMachine& m, State q, std::span<const Symbol> window,
                          std::int64_t offset = 0);

/// Same, with the window given by symbol names.
Configuration make_config(const TuringMachine& m, State q,
                          const std::vector<std::string>& window, std::int64_t offset = 0);

/// One application of the global transition function.
Configuration step(const TuringMachine& m, const Configuration& x);
void step_in_place(const TuringMachine& m, Configuration& x);

struct RunResult {
  bool halted = false;
  std::uint64_t steps_taken = 0;
  Configuration final_configuration;
  std::optional<std::uint64_t> halting_time;
};

/// Steps until the state is q_halt or `max_steps` steps have been taken.
RunResult run(const TuringMachine& m, const Configuration& x, std::uint64_t max_steps);

/// Configuration metric: 0 if equal, 1 if states differ, otherwise 2^-n where
/// n is the radius of tape agreement around the head.
mpq_class distance(const Configuration& x, const Configuration& y);

/// `… a b . c d …` rendering; the symbol after the dot is cell 0. The window
/// always covers [min_cell, max_cell] plus the stored support.
std::string render_tape(const TuringMachine& m, const Configuration& x,
                        std::int64_t min_cell = -1, std::int64_t max_cell = 1);

std::string render(const TuringMachine& m, const Configuration& x);

}  // namespace tmdyn
