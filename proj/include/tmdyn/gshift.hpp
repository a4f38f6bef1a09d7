#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tmdyn/configuration.hpp"
#include "tmdyn/machine.hpp"

namespace tmdyn {

/// Finitely supported bi-infinite sequence over an alphabet {0, ..., size-1}.
/// Cells equal to `default_symbol` are never stored.
class ASequence {
 public:
  ASequence(std::uint32_t alphabet_size, std::uint32_t default_symbol);

  std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }
  std::uint32_t default_symbol() const noexcept { return default_; }

  std::uint32_t at(std::int64_t cell) const;
  void set(std::int64_t cell, std::uint32_t symbol);
  const std::map<std::int64_t, std::uint32_t>& cells() const noexcept { return cells_; }

  /// sigma^k: result cell i is this cell i + k.
  ASequence shifted(std::int64_t k) const;

  friend bool operator==(const ASequence&, const ASequence&) = default;

 private:
  std::uint32_t alphabet_size_;
  std::uint32_t default_;
  std::map<std::int64_t, std::uint32_t> cells_;
};

/// Moore's generalized shift: read the window s[-r, r], replace it with G of
/// that window, then apply sigma^F. Windows without a rule are left unchanged
/// with F = 0.
class GeneralizedShift {
 public:
  using Window = std::vector<std::uint32_t>;
  struct Rule {
    Window replacement;
    std::int64_t shift = 0;
  };

  GeneralizedShift(std::uint32_t radius, std::uint32_t alphabet_size);

  std::uint32_t radius() const noexcept { return radius_; }
  std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t window_size() const noexcept { return 2 * std::size_t{radius_} + 1; }

  void set_rule(const Window& window, Rule rule);
  /// Rule for a window; the identity rule when none is stored.
  Rule rule_for(const Window& window) const;
  const std::map<Window, Rule>& rules() const noexcept { return rules_; }

 private:
  std::uint32_t radius_;
  std::uint32_t alphabet_size_;
  std::map<Window, Rule> rules_;
};

ASequence gshift_step(const GeneralizedShift& d, const ASequence& s);

// A = Q ∪ Σ for a host machine: symbol s has index s.id, state q has index
// |Σ| + q.id. The default symbol is the blank.
std::uint32_t a_index(const TuringMachine& m, Symbol s);
std::uint32_t a_index(const TuringMachine& m, State q);
std::uint32_t a_size(const TuringMachine& m);
std::string a_name(const TuringMachine& m, std::uint32_t index);

/// r = 1 generalized shift conjugate to the machine on the image of embed.
GeneralizedShift compile_gshift(const TuringMachine& m);

/// (q, t) -> ... t_{-1} . q t_0 t_1 ...: cell 0 holds q, cell i >= 1 holds
/// t_{i-1}, cell i <= -1 holds t_i.
ASequence embed(const TuringMachine& m, const Configuration& x);

class NotInImage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse of embed on its image. Throws NotInImage otherwise.
Configuration unembed(const TuringMachine& m, const ASequence& s);

struct ConjugacyReport {
  std::uint64_t samples = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t seed = 0;
  std::optional<Configuration> first_counterexample;
};

/// Checks gshift_step(d, embed(x)) == embed(step(x)) on random finite
/// configurations (uniform state, support window of up to 9 cells near the
/// head).
ConjugacyReport verify_conjugacy(const TuringMachine& m, const GeneralizedShift& d,
                                 std::uint64_t samples, std::uint64_t seed);
ConjugacyReport verify_conjugacy(const TuringMachine& m, std::uint64_t samples,
                                 std::uint64_t seed);

/// Binary sequence as the set of cells holding 1.
using BinarySequence = std::set<std::int64_t>;

/// Bits per symbol: ceil(log2 |A|), at least 1.
std::uint32_t block_width(std::uint32_t alphabet_size);

/// Fixed-width code, most significant bit first; symbol at cell i occupies
/// bits [i*w, (i+1)*w). The default symbol gets the all-zero codeword and
/// the remaining symbols keep their relative order.
BinarySequence block_encode(const ASequence& s);

struct CantorPoint {
  mpq_class x;
  mpq_class y;
  friend bool operator==(const CantorPoint& a, const CantorPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// (sum_k s_{-k} 2/3^k, sum_k s_{k-1} 2/3^k), evaluated exactly.
CantorPoint cantor_encode(const BinarySequence& s);

/// `… x y . z w …` with cell 0 after the dot.
std::string render(const TuringMachine& m, const ASequence& s);

}  // namespace tmdyn
