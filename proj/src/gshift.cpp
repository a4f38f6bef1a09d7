#include "tmdyn/gshift.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tmdyn {

ASequence::ASequence(std::uint32_t alphabet_size, std::uint32_t default_symbol)
    : alphabet_size_(alphabet_size), default_(default_symbol) {
  if (alphabet_size == 0 || default_symbol >= alphabet_size)
    throw std::invalid_argument("default symbol outside the alphabet");
}

std::uint32_t ASequence::at(std::int64_t cell) const {
  auto it = cells_.find(cell);
  return it == cells_.end() ? default_ : it->second;
}

void ASequence::set(std::int64_t cell, std::uint32_t symbol) {
  if (symbol >= alphabet_size_) throw std::invalid_argument("symbol outside the alphabet");
  if (symbol == default_) {
    cells_.erase(cell);
  } else {
    cells_[cell] = symbol;
  }
}

ASequence ASequence::shifted(std::int64_t k) const {
  ASequence out(alphabet_size_, default_);
  for (const auto& [cell, sym] : cells_) out.cells_.emplace(cell - k, sym);
  return out;
}

GeneralizedShift::GeneralizedShift(std::uint32_t radius, std::uint32_t alphabet_size)
    : radius_(radius), alphabet_size_(alphabet_size) {}

void GeneralizedShift::set_rule(const Window& window, Rule rule) {
  if (window.size() != window_size() || rule.replacement.size() != window_size())
    throw std::invalid_argument("rule windows must have length 2r+1");
  for (auto sym : window)
    if (sym >= alphabet_size_) throw std::invalid_argument("window symbol outside the alphabet");
  for (auto sym : rule.replacement)
    if (sym >= alphabet_size_) throw std::invalid_argument("replacement symbol outside the alphabet");
  if (rule.replacement == window && rule.shift == 0) {
    rules_.erase(window);
  } else {
    rules_[window] = std::move(rule);
  }
}

GeneralizedShift::Rule GeneralizedShift::rule_for(const Window& window) const {
  auto it = rules_.find(window);
  return it == rules_.end() ? Rule{window, 0} : it->second;
}

ASequence gshift_step(const GeneralizedShift& d, const ASequence& s) {
  const auto r = static_cast<std::int64_t>(d.radius());
  GeneralizedShift::Window window;
  window.reserve(d.window_size());
  for (std::int64_t i = -r; i <= r; ++i) window.push_back(s.at(i));
  const auto rule = d.rule_for(window);
  if (rule.replacement == window && rule.shift == 0) return s;

  ASequence out = s;
  for (std::int64_t i = -r; i <= r; ++i) out.set(i, rule.replacement[static_cast<std::size_t>(i + r)]);
  return rule.shift == 0 ? out : out.shifted(rule.shift);
}

// ---------------------------------------------------------------------------
// Host machine alphabet

std::uint32_t a_index(const TuringMachine&, Symbol s) { return s.id; }
std::uint32_t a_index(const TuringMachine& m, State q) {
  return static_cast<std::uint32_t>(m.num_symbols()) + q.id;
}
std::uint32_t a_size(const TuringMachine& m) {
  return static_cast<std::uint32_t>(m.num_symbols() + m.num_states());
}

std::string a_name(const TuringMachine& m, std::uint32_t index) {
  if (index < m.num_symbols()) return m.symbol_name(Symbol{static_cast<std::uint16_t>(index)});
  return m.state_name(State{static_cast<std::uint16_t>(index - m.num_symbols())});
}

GeneralizedShift compile_gshift(const TuringMachine& m) {
  GeneralizedShift d(1, a_size(m));
  for (Symbol left : m.symbols()) {
    for (State q : m.states()) {
      for (Symbol head : m.symbols()) {
        const Transition& t = m.delta(q, head);
        const auto l = a_index(m, left);
        const auto qa = a_index(m, q);
        const auto h = a_index(m, head);
        const auto next = a_index(m, t.next);
        const auto written = a_index(m, t.write);
        GeneralizedShift::Rule rule;
        rule.shift = t.move;
        if (t.move > 0) {
          rule.replacement = {l, written, next};
        } else if (t.move < 0) {
          rule.replacement = {next, l, written};
        } else {
          rule.replacement = {l, next, written};
        }
        d.set_rule({l, qa, h}, std::move(rule));
      }
    }
  }
  return d;
}

ASequence embed(const TuringMachine& m, const Configuration& x) {
  ASequence s(a_size(m), a_index(m, m.blank()));
  s.set(0, a_index(m, x.state()));
  for (const auto& [cell, sym] : x.support()) {
    s.set(cell >= 0 ? cell + 1 : cell, a_index(m, sym));
  }
  return s;
}

Configuration unembed(const TuringMachine& m, const ASequence& s) {
  if (s.alphabet_size() != a_size(m) || s.default_symbol() != a_index(m, m.blank()))
    throw NotInImage("sequence is not over the machine's alphabet");
  const auto n_sym = static_cast<std::uint32_t>(m.num_symbols());
  const auto head = s.at(0);
  if (head < n_sym) throw NotInImage("cell 0 does not hold a state");
  Configuration x(State{static_cast<std::uint16_t>(head - n_sym)}, m.blank());
  for (const auto& [cell, sym] : s.cells()) {
    if (cell == 0) continue;
    if (sym >= n_sym)
      throw NotInImage("state symbol at cell " + std::to_string(cell));
    x.set(cell > 0 ? cell - 1 : cell, Symbol{static_cast<std::uint16_t>(sym)});
  }
  return x;
}

ConjugacyReport verify_conjugacy(const TuringMachine& m, const GeneralizedShift& d,
                                 std::uint64_t samples, std::uint64_t seed) {
  ConjugacyReport report;
  report.samples = samples;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_state(0, m.num_states() - 1);
  std::uniform_int_distribution<std::size_t> pick_symbol(0, m.num_symbols() - 1);
  std::uniform_int_distribution<int> pick_length(0, 9);
  std::uniform_int_distribution<int> pick_offset(-6, 2);

  for (std::uint64_t i = 0; i < samples; ++i) {
    Configuration x(State{static_cast<std::uint16_t>(pick_state(rng))}, m.blank());
    const int length = pick_length(rng);
    const int offset = pick_offset(rng);
    for (int c = 0; c < length; ++c)
      x.set(offset + c, Symbol{static_cast<std::uint16_t>(pick_symbol(rng))});

    if (gshift_step(d, embed(m, x)) == embed(m, step(m, x))) {
      ++report.passed;
    } else {
      ++report.failed;
      if (!report.first_counterexample) report.first_counterexample = x;
    }
  }
  return report;
}

ConjugacyReport verify_conjugacy(const TuringMachine& m, std::uint64_t samples,
                                 std::uint64_t seed) {
  return verify_conjugacy(m, compile_gshift(m), samples, seed);
}

// ---------------------------------------------------------------------------
// Binary and Cantor coding

std::uint32_t block_width(std::uint32_t alphabet_size) {
  std::uint32_t w = 1;
  while ((std::uint64_t{1} << w) < alphabet_size) ++w;
  return w;
}

BinarySequence block_encode(const ASequence& s) {
  const std::uint32_t w = block_width(s.alphabet_size());
  const std::uint32_t d = s.default_symbol();
  BinarySequence bits;
  for (const auto& [cell, sym] : s.cells()) {
    const std::uint32_t code = sym < d ? sym + 1 : sym;
    for (std::uint32_t j = 0; j < w; ++j) {
      if ((code >> (w - 1 - j)) & 1u) bits.insert(cell * static_cast<std::int64_t>(w) + j);
    }
  }
  return bits;
}

CantorPoint cantor_encode(const BinarySequence& s) {
  // Left half: bit at cell -k contributes 2/3^k. Right half: bit at cell k-1
  // contributes 2/3^k.
  CantorPoint p{mpq_class(0), mpq_class(0)};
  for (std::int64_t cell : s) {
    const std::int64_t k = cell < 0 ? -cell : cell + 1;
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 3, static_cast<unsigned long>(k));
    mpq_class term(mpz_class(2), denom);
    term.canonicalize();
    (cell < 0 ? p.x : p.y) += term;
  }
  return p;
}

std::string render(const TuringMachine& m, const ASequence& s) {
  std::int64_t lo = 0, hi = 0;
  if (!s.cells().empty()) {
    lo = std::min(lo, s.cells().begin()->first);
    hi = std::max(hi, s.cells().rbegin()->first);
  }
  std::ostringstream out;
  out << "…";
  for (std::int64_t i = lo; i <= hi; ++i) out << (i == 0 ? " . " : " ") << a_name(m, s.at(i));
  out << " …";
  return out.str();
}

}  // namespace tmdyn
