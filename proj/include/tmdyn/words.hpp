#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmdyn/machine.hpp"
#include "tmdyn/regularity.hpp"

namespace tmdyn {

/// (state, head symbol) read at times 0, 1, ..., n-1 along one orbit.
using TraceWord = std::vector<StateSymbol>;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WordCountOptions {
  // Start only from q0 instead of every state. Exploration aid; the n-word
  // set of the dynamical system ranges over all states.
  bool from_initial_only = false;
  // Lazy enumerator: maximum number of search nodes.
  std::uint64_t node_budget = 100'000'000;
  // Brute-force oracle: largest admissible n.
  std::size_t oracle_cap = 5;
  // word_set: largest admissible n.
  std::size_t word_set_cap = 4;
};

/// |S(n)| by brute force: every start state and every assignment of the cells
/// [-(n-1), n-1], each simulated for n-1 steps.
std::uint64_t count_words_oracle(const TuringMachine& m, std::size_t n,
                                 const WordCountOptions& options = {});

/// |S(n)| by depth-first search over execution prefixes in which a tape cell
/// is branched on only when it is first read. Throws BudgetExceeded.
std::uint64_t count_words(const TuringMachine& m, std::size_t n,
                          const WordCountOptions& options = {});

/// The set S(n) itself, for small n.
std::set<TraceWord> word_set(const TuringMachine& m, std::size_t n,
                             const WordCountOptions& options = {});

struct WordCountRow {
  std::size_t n = 0;
  std::uint64_t count = 0;
  long double estimate = 0;      // log(count) / n, an upper bound on h
  long double min_estimate = 0;  // min over rows 1..n
};

struct WordCountReport {
  std::vector<WordCountRow> rows;
  // Set when row `rows.size() + 1` could not be completed.
  std::optional<std::string> error;
  EntropyCertificate certificate;
};

WordCountReport entropy_estimates(const TuringMachine& m, std::size_t n_max,
                                  const WordCountOptions& options = {});

}  // namespace tmdyn
