#include "tmdyn/configuration.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tmdyn {

Symbol Configuration::at(std::int64_t cell) const {
  auto it = cells_.find(cell + origin_);
  return it == cells_.end() ? blank_ : it->second;
}

void Configuration::set(std::int64_t cell, Symbol s) {
  if (s == blank_) {
    cells_.erase(cell + origin_);
  } else {
    cells_[cell + origin_] = s;
  }
}

std::vector<std::pair<std::int64_t, Symbol>> Configuration::support() const {
  std::vector<std::pair<std::int64_t, Symbol>> out;
  out.reserve(cells_.size());
  for (const auto& [key, s] : cells_) out.emplace_back(key - origin_, s);
  return out;
}

std::optional<std::int64_t> Configuration::lowest_cell() const {
  if (cells_.empty()) return std::nullopt;
  return cells_.begin()->first - origin_;
}

std::optional<std::int64_t> Configuration::highest_cell() const {
  if (cells_.empty()) return std::nullopt;
  return cells_.rbegin()->first - origin_;
}

bool operator==(const Configuration& a, const Configuration& b) {
  if (a.state_ != b.state_ || a.blank_ != b.blank_ || a.cells_.size() != b.cells_.size())
    return false;
  return std::equal(a.cells_.begin(), a.cells_.end(), b.cells_.begin(),
                    [&](const auto& l, const auto& r) {
                      return l.first - a.origin_ == r.first - b.origin_ && l.second == r.second;
                    });
}

Configuration make_config(const TuringMachine& m, State q, std::span<const Symbol> window,
                          std::int64_t offset) {
  if (q.id >= m.num_states()) throw std::invalid_argument("state out of range");
  Configuration x(q, m.blank());
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i].id >= m.num_symbols())
      throw std::invalid_argument("symbol id " + std::to_string(window[i].id) +
                                  " outside the alphabet");
    x.set(offset + static_cast<std::int64_t>(i), window[i]);
  }
  return x;
}

Configuration make_config(const TuringMachine& m, State q,
                          const std::vector<std::string>& window, std::int64_t offset) {
  std::vector<Symbol> symbols;
  for (const auto& name : window) {
    auto s = m.find_symbol(name);
    if (!s) throw std::invalid_argument("symbol '" + name + "' is not in the alphabet");
    symbols.push_back(*s);
  }
  return make_config(m, q, symbols, offset);
}

void step_in_place(const TuringMachine& m, Configuration& x) {
  const Transition& t = m.delta(x.state(), x.at(0));
  x.set(0, t.write);
  x.set_state(t.next);
  x.shift(t.move);
}

Configuration step(const TuringMachine& m, const Configuration& x) {
  Configuration y = x;
  step_in_place(m, y);
  return y;
}

RunResult run(const TuringMachine& m, const Configuration& x, std::uint64_t max_steps) {
  RunResult result{false, 0, x, std::nullopt};
  Configuration& cur = result.final_configuration;
  while (!m.is_halting(cur.state()) && result.steps_taken < max_steps) {
    step_in_place(m, cur);
    ++result.steps_taken;
  }
  if (m.is_halting(cur.state())) {
    result.halted = true;
    result.halting_time = result.steps_taken;
  }
  return result;
}

mpq_class distance(const Configuration& x, const Configuration& y) {
  if (x.blank() != y.blank()) throw std::invalid_argument("configurations of different machines");
  if (x.state() != y.state()) return mpq_class(1);
  if (x == y) return mpq_class(0);

  // Smallest |i| at which the tapes differ. Only stored cells can differ.
  std::int64_t radius = -1;
  auto consider = [&](const Configuration& a, const Configuration& b) {
    for (const auto& [cell, s] : a.support()) {
      if (b.at(cell) != s) {
        std::int64_t r = std::abs(cell);
        if (radius < 0 || r < radius) radius = r;
      }
    }
  };
  consider(x, y);
  consider(y, x);
  mpz_class denom = 1;
  denom <<= static_cast<mp_bitcnt_t>(radius);
  return mpq_class(mpz_class(1), denom);
}

std::string render_tape(const TuringMachine& m, const Configuration& x, std::int64_t min_cell,
                        std::int64_t max_cell) {
  std::int64_t lo = std::min<std::int64_t>(min_cell, 0);
  std::int64_t hi = std::max<std::int64_t>(max_cell, 0);
  if (auto l = x.lowest_cell()) lo = std::min(lo, *l);
  if (auto h = x.highest_cell()) hi = std::max(hi, *h);
  std::ostringstream out;
  out << "…";
  for (std::int64_t i = lo; i <= hi; ++i) {
    out << (i == 0 ? " . " : " ") << m.symbol_name(x.at(i));
  }
  out << " …";
  return out.str();
}

std::string render(const TuringMachine& m, const Configuration& x) {
  return m.state_name(x.state()) + " " + render_tape(m, x);
}

}  // namespace tmdyn
