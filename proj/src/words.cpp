#include "tmdyn/words.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

namespace tmdyn {

namespace {

using Encoded = std::u32string;

std::vector<State> start_states(const TuringMachine& m, const WordCountOptions& options) {
  if (options.from_initial_only) return {m.initial()};
  return m.states();
}

char32_t encode(const TuringMachine& m, State q, Symbol s) {
  return static_cast<char32_t>(std::size_t{q.id} * m.num_symbols() + s.id);
}

TraceWord decode(const TuringMachine& m, const Encoded& word) {
  TraceWord out;
  out.reserve(word.size());
  for (char32_t c : word) {
    out.push_back(StateSymbol{State{static_cast<std::uint16_t>(c / m.num_symbols())},
                              Symbol{static_cast<std::uint16_t>(c % m.num_symbols())}});
  }
  return out;
}

void check_n(std::size_t n) {
  if (n == 0) throw std::invalid_argument("word length must be >= 1");
}

std::unordered_set<Encoded> oracle_words(const TuringMachine& m, std::size_t n,
                                         const WordCountOptions& options) {
  check_n(n);
  if (n > options.oracle_cap)
    throw std::invalid_argument("oracle word length " + std::to_string(n) + " exceeds cap " +
                                std::to_string(options.oracle_cap));
  const std::size_t width = 2 * n - 1;
  const auto starts = start_states(m, options);
  long double executions = static_cast<long double>(starts.size()) *
                           std::pow(static_cast<long double>(m.num_symbols()), width);
  if (executions > 1e9L)
    throw BudgetExceeded("oracle would need " + std::to_string(static_cast<double>(executions)) +
                         " executions");

  std::unordered_set<Encoded> words;
  std::vector<Symbol> window(width);
  std::vector<Symbol> tape(width);
  Encoded trace(n, 0);
  const auto center = static_cast<std::int64_t>(n - 1);
  for (State start : starts) {
    std::fill(window.begin(), window.end(), Symbol{0});
    while (true) {
      tape = window;
      State q = start;
      std::int64_t head = center;
      for (std::size_t t = 0; t < n; ++t) {
        Symbol s = tape[static_cast<std::size_t>(head)];
        trace[t] = encode(m, q, s);
        if (t + 1 == n) break;
        const Transition& tr = m.delta(q, s);
        tape[static_cast<std::size_t>(head)] = tr.write;
        q = tr.next;
        head += tr.move;
      }
      words.insert(trace);

      // Odometer over window assignments.
      std::size_t i = 0;
      while (i < width && window[i].id + 1u == m.num_symbols()) window[i++] = Symbol{0};
      if (i == width) break;
      ++window[i].id;
    }
  }
  return words;
}

class LazySearch {
 public:
  LazySearch(const TuringMachine& m, std::size_t n, std::uint64_t budget)
      : m_(m), n_(n), budget_(budget), tape_(2 * n + 1, kUnread), trace_(n, 0) {}

  std::unordered_set<Encoded> run(const std::vector<State>& starts) {
    for (State q : starts) visit(q, static_cast<std::int64_t>(n_), 0);
    return std::move(words_);
  }

 private:
  static constexpr std::int32_t kUnread = -1;

  void visit(State q, std::int64_t head, std::size_t depth) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("word search for n = " + std::to_string(n_) +
                           " exceeded the node budget of " + std::to_string(budget_));
    auto& cell = tape_[static_cast<std::size_t>(head)];
    if (cell == kUnread) {
      for (Symbol s : m_.symbols()) {
        cell = s.id;
        advance(q, Symbol{s.id}, head, depth);
      }
      cell = kUnread;
    } else {
      advance(q, Symbol{static_cast<std::uint16_t>(cell)}, head, depth);
    }
  }

  void advance(State q, Symbol s, std::int64_t head, std::size_t depth) {
    trace_[depth] = encode(m_, q, s);
    if (depth + 1 == n_) {
      words_.insert(trace_);
      return;
    }
    const Transition& t = m_.delta(q, s);
    auto& cell = tape_[static_cast<std::size_t>(head)];
    const std::int32_t saved = cell;
    cell = t.write.id;
    visit(t.next, head + t.move, depth + 1);
    cell = saved;
  }

  const TuringMachine& m_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int32_t> tape_;
  Encoded trace_;
  std::unordered_set<Encoded> words_;
};

}  // namespace

std::uint64_t count_words_oracle(const TuringMachine& m, std::size_t n,
                                 const WordCountOptions& options) {
  return oracle_words(m, n, options).size();
}

std::uint64_t count_words(const TuringMachine& m, std::size_t n,
                          const WordCountOptions& options) {
  check_n(n);
  return LazySearch(m, n, options.node_budget).run(start_states(m, options)).size();
}

std::set<TraceWord> word_set(const TuringMachine& m, std::size_t n,
                             const WordCountOptions& options) {
  check_n(n);
  if (n > options.word_set_cap)
    throw std::invalid_argument("word_set length " + std::to_string(n) + " exceeds cap " +
                                std::to_string(options.word_set_cap));
  std::set<TraceWord> out;
  for (const auto& w : LazySearch(m, n, options.node_budget).run(start_states(m, options)))
    out.insert(decode(m, w));
  return out;
}

WordCountReport entropy_estimates(const TuringMachine& m, std::size_t n_max,
                                  const WordCountOptions& options) {
  if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
  WordCountReport report;
  report.certificate = entropy_lower_bound(m);
  long double running_min = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::uint64_t count = 0;
    try {
      count = count_words(m, n, options);
    } catch (const BudgetExceeded& e) {
      report.error = e.what();
      break;
    }
    long double estimate = std::log(static_cast<long double>(count)) / static_cast<long double>(n);
    running_min = n == 1 ? estimate : std::min(running_min, estimate);
    report.rows.push_back(WordCountRow{n, count, estimate, running_min});
  }
  return report;
}

}  // namespace tmdyn
