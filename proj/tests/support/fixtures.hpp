#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "tmdyn/configuration.hpp"
#include "tmdyn/machine.hpp"

namespace tmdyn::testing {

// delta(q0, s) = (halt, s, 0) for every s.
inline constexpr const char* kHaltAtOnce = R"(states: q0 halt
alphabet: 0 1
blank: 0
initial: q0
halting: halt
q0 0 -> HALT
q0 1 -> HALT
)";

// delta(q, s) = (q, s, +1): the right-runner.
inline constexpr const char* kRightRunner = R"(states: q halt
alphabet: 0 1
blank: 0
initial: q
halting: halt
q 0 -> q 0 R
q 1 -> q 1 R
)";

// Never moves, never halts.
inline constexpr const char* kStayForever = R"(states: q halt
alphabet: 0 1
blank: 0
initial: q
halting: halt
q 0 -> q 0 N
q 1 -> q 1 N
)";

// Each eps-graph is a single simple cycle: +1 is a <-> b on symbol 0, -1 is a <-> b on 1.
inline constexpr const char* kTwoCycles = R"(states: a b halt
alphabet: 0 1
blank: 0
initial: a
halting: halt
a 0 -> b 0 R
b 0 -> a 0 R
a 1 -> b 1 L
b 1 -> a 1 L
)";

inline TuringMachine toy(const char* text) { return parse_machine(text); }

// Random finite configuration: state over all of Q, up to `max_len` cells
// placed at an offset in [min_offset, min_offset + spread].
inline Configuration random_config(std::mt19937_64& rng, const TuringMachine& m,
                                   std::size_t max_len = 9, std::int64_t min_offset = -6,
                                   std::int64_t spread = 8) {
  std::uniform_int_distribution<std::size_t> pick_state(0, m.num_states() - 1);
  std::uniform_int_distribution<std::size_t> pick_symbol(0, m.num_symbols() - 1);
  std::uniform_int_distribution<std::size_t> pick_len(0, max_len);
  std::uniform_int_distribution<std::int64_t> pick_offset(min_offset, min_offset + spread);
  Configuration x(State{static_cast<std::uint16_t>(pick_state(rng))}, m.blank());
  const std::size_t len = pick_len(rng);
  const std::int64_t offset = pick_offset(rng);
  for (std::size_t i = 0; i < len; ++i)
    x.set(offset + static_cast<std::int64_t>(i),
          Symbol{static_cast<std::uint16_t>(pick_symbol(rng))});
  return x;
}

}  // namespace tmdyn::testing
