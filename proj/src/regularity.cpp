#include "tmdyn/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

namespace tmdyn {

// ---------------------------------------------------------------------------
// Strong regularity

std::vector<State> greatest_block_states(const TuringMachine& m, int direction,
                                         const std::vector<Symbol>& symbols) {
  std::vector<bool> in(m.num_states(), true);
  in[m.halting().id] = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (State q : m.working_states()) {
      if (!in[q.id]) continue;
      for (Symbol s : symbols) {
        const Transition& t = m.delta(q, s);
        if (t.move != direction || !in[t.next.id]) {
          in[q.id] = false;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<State> out;
  for (State q : m.working_states())
    if (in[q.id]) out.push_back(q);
  return out;
}

namespace {

// Calls fn on every k-subset of {0..n-1} in lexicographic order until fn
// returns true.
bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<StrongWitness> check_strong_regularity(const TuringMachine& m,
                                                     const StrongSearchOptions& options) {
  const std::size_t n = m.num_symbols();
  if (n > options.max_alphabet)
    throw std::length_error("alphabet of " + std::to_string(n) +
                            " symbols exceeds the strong-regularity search cap of " +
                            std::to_string(options.max_alphabet));

  const int directions[] = {1, -1};
  // A block for Sigma' restricts to a block for each of its 2-subsets, so
  // the pairwise table both detects witnesses and prunes the larger search.
  std::vector<std::vector<bool>> pair_ok(2, std::vector<bool>(n * n, false));
  bool any = false;
  for (int d = 0; d < 2; ++d) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        std::vector<Symbol> pair{Symbol{static_cast<std::uint16_t>(a)},
                                 Symbol{static_cast<std::uint16_t>(b)}};
        bool ok = !greatest_block_states(m, directions[d], pair).empty();
        pair_ok[d][a * n + b] = pair_ok[d][b * n + a] = ok;
        any = any || ok;
      }
    }
  }
  if (!any) return std::nullopt;

  // Directions are searched +1 first. By default the first direction with a
  // block wins and |Sigma'| is maximized within it; with
  // maximize_across_directions the larger block over both directions wins.
  std::optional<StrongWitness> found;
  for (int d = 0; d < 2; ++d) {
    for (std::size_t k = n; k >= 2; --k) {
      if (found && found->symbols.size() >= k) break;
      bool hit = for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < idx.size(); ++i)
          for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (!pair_ok[d][idx[i] * n + idx[j]]) return false;
        std::vector<Symbol> symbols;
        for (std::size_t i : idx) symbols.push_back(Symbol{static_cast<std::uint16_t>(i)});
        auto states = greatest_block_states(m, directions[d], symbols);
        if (states.empty()) return false;
        found = StrongWitness{directions[d], std::move(states), std::move(symbols)};
        return true;
      });
      if (hit) break;
    }
    if (found && !options.maximize_across_directions) break;
  }
  return found;
}

bool verify_witness(const TuringMachine& m, const StrongWitness& w) {
  if (w.direction != 1 && w.direction != -1) return false;
  if (w.states.empty() || w.symbols.size() < 2) return false;
  std::vector<bool> in(m.num_states(), false);
  for (State q : w.states) {
    if (q.id >= m.num_states() || m.is_halting(q) || in[q.id]) return false;
    in[q.id] = true;
  }
  std::set<Symbol> distinct;
  for (Symbol s : w.symbols) {
    if (s.id >= m.num_symbols() || !distinct.insert(s).second) return false;
  }
  for (State q : w.states) {
    for (Symbol s : w.symbols) {
      const Transition& t = m.delta(q, s);
      if (t.move != w.direction || !in[t.next.id]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Regularity

namespace {

struct Tarjan {
  const std::vector<std::vector<std::size_t>>& adjacency;
  std::vector<int> number, low;
  std::vector<bool> on_stack;
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  int counter = 0;

  explicit Tarjan(const std::vector<std::vector<std::size_t>>& adj)
      : adjacency(adj), number(adj.size(), -1), low(adj.size(), -1), on_stack(adj.size(), false) {}

  void visit(std::size_t v) {
    number[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : adjacency[v]) {
      if (number[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], number[w]);
      }
    }
    if (low[v] == number[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      components.push_back(std::move(comp));
    }
  }
};

}  // namespace

std::vector<std::vector<State>> strongly_connected_components(const TuringMachine& m,
                                                              const EpsGraph& g) {
  std::vector<std::vector<std::size_t>> adjacency(m.num_states());
  for (const auto& e : g.edges) adjacency[e.from.id].push_back(e.to.id);
  Tarjan tarjan(adjacency);
  for (State v : g.vertices)
    if (tarjan.number[v.id] < 0) tarjan.visit(v.id);

  std::vector<std::vector<State>> out;
  for (auto& comp : tarjan.components) {
    std::sort(comp.begin(), comp.end());
    std::vector<State> states;
    for (std::size_t v : comp) states.push_back(State{static_cast<std::uint16_t>(v)});
    out.push_back(std::move(states));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<std::size_t> closed_walk_through(const TuringMachine& m, const EpsGraph& g,
                                             std::size_t first_edge,
                                             const std::vector<bool>& allowed) {
  const EpsEdge& first = g.edges.at(first_edge);
  if (first.to == first.from) return {first_edge, first_edge};

  // Cheapest path (by tau) from first.to back to first.from.
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> dist(m.num_states(), kInf);
  std::vector<std::size_t> via(m.num_states(), SIZE_MAX);
  using Item = std::pair<std::uint64_t, std::uint16_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[first.to.id] = 0;
  queue.emplace(0, first.to.id);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d != dist[v]) continue;
    if (v == first.from.id) break;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const EpsEdge& e = g.edges[i];
      if (e.from.id != v || !allowed[e.to.id]) continue;
      std::uint64_t nd = d + e.tau;
      if (nd < dist[e.to.id]) {
        dist[e.to.id] = nd;
        via[e.to.id] = i;
        queue.emplace(nd, e.to.id);
      }
    }
  }
  if (dist[first.from.id] == kInf) return {};

  std::vector<std::size_t> path;
  for (std::uint16_t v = first.from.id; v != first.to.id; v = g.edges[via[v]].from.id)
    path.push_back(via[v]);
  path.push_back(first_edge);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<RegularWitness> check_regularity(const TuringMachine& m) {
  const PhiTable table = phi_table(m);
  std::optional<RegularWitness> best;

  for (int direction : {1, -1}) {
    const EpsGraph g = eps_graph(table, m, direction);
    for (const auto& comp : strongly_connected_components(m, g)) {
      std::vector<bool> allowed(m.num_states(), false);
      for (State v : comp) allowed[v.id] = true;
      std::size_t internal = 0;
      for (const auto& e : g.edges) internal += allowed[e.from.id] && allowed[e.to.id];
      // A strongly connected multigraph is a single simple cycle exactly when
      // it has as many edges as vertices.
      if (internal <= comp.size()) continue;

      for (State v : comp) {
        struct Walk {
          std::vector<StateSymbol> pairs;
          std::uint64_t cost;
        };
        std::vector<Walk> walks;
        for (std::size_t ei : g.out_edges(v)) {
          if (!allowed[g.edges[ei].to.id]) continue;
          auto path = closed_walk_through(m, g, ei, allowed);
          if (path.empty()) continue;
          Walk w{{}, 1};
          for (std::size_t i : path) {
            w.pairs.push_back(StateSymbol{g.edges[i].from, g.edges[i].label});
            w.cost += g.edges[i].tau;
          }
          walks.push_back(std::move(w));
        }
        if (walks.size() < 2) continue;
        std::stable_sort(walks.begin(), walks.end(),
                         [](const Walk& a, const Walk& b) { return a.cost < b.cost; });
        RegularWitness w{direction, v, walks[0].pairs, walks[1].pairs, walks[0].cost,
                         walks[1].cost};
        if (!best || w.cost() < best->cost()) best = std::move(w);
      }
    }
  }
  return best;
}

bool verify_witness(const TuringMachine& m, const RegularWitness& w) {
  if (w.direction != 1 && w.direction != -1) return false;
  if (w.base.id >= m.num_states() || m.is_halting(w.base)) return false;
  if (w.walk_a == w.walk_b) return false;

  auto check_walk = [&](const std::vector<StateSymbol>& walk, std::uint64_t cost) {
    if (walk.size() < 2 || walk.front().state != w.base) return false;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const auto& [q, s] = walk[i];
      if (q.id >= m.num_states() || s.id >= m.num_symbols() || m.is_halting(q)) return false;
      const PhiOutcome o = phi(m, q, s);
      const State next = i + 1 < walk.size() ? walk[i + 1].state : w.base;
      if (o.kind != PhiKind::shift || o.direction != w.direction || o.exit_state != next)
        return false;
      total += o.tau;
    }
    return total == cost;
  };
  return check_walk(w.walk_a, w.cost_a) && check_walk(w.walk_b, w.cost_b);
}

// ---------------------------------------------------------------------------
// Certificates

long double LogBound::value() const {
  return std::log(static_cast<long double>(log_of)) / static_cast<long double>(over);
}

std::string LogBound::decimal() const {
  std::ostringstream out;
  out << std::setprecision(17) << static_cast<double>(value());
  return out.str();
}

std::string LogBound::to_string() const {
  std::string s = "log " + std::to_string(log_of);
  if (over != 1) s += " / " + std::to_string(over);
  return s;
}

std::strong_ordering compare(const LogBound& a, const LogBound& b) {
  // log(p)/q <=> log(p')/q'  iff  p^q' <=> p'^q
  mpz_class lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), a.log_of, b.over);
  mpz_ui_pow_ui(rhs.get_mpz_t(), b.log_of, a.over);
  int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::strongly_regular: return "strongly-regular";
    case Verdict::regular: return "regular";
    case Verdict::no_witness_found: return "no-witness-found";
  }
  return "?";
}

LogBound bound_of(const StrongWitness& w) { return LogBound{w.symbols.size(), 1}; }
LogBound bound_of(const RegularWitness& w) { return LogBound{2, w.cost()}; }

EntropyCertificate entropy_lower_bound(const TuringMachine& m,
                                       const StrongSearchOptions& options) {
  auto strong = check_strong_regularity(m, options);
  auto regular = check_regularity(m);

  EntropyCertificate cert;
  if (strong && (!regular || compare(bound_of(*strong), bound_of(*regular)) >= 0)) {
    cert.verdict = Verdict::strongly_regular;
    cert.bound = bound_of(*strong);
    cert.witness = std::move(*strong);
  } else if (regular) {
    cert.verdict = Verdict::regular;
    cert.bound = bound_of(*regular);
    cert.witness = std::move(*regular);
  }
  return cert;
}

}  // namespace tmdyn
