#include "tmdyn/corpus.hpp"

#include <stdexcept>

namespace tmdyn {

namespace {

// Neary–Woods UTM(6,4). Columns of the published table are states, rows are
// symbols; the blank is taken to be g.
constexpr std::string_view kUtm64 = R"(# UTM(6,4)
name: utm_6_4
states: u1 u2 u3 u4 u5 u6 halt
alphabet: g b δ c
blank: g
initial: u1
halting: halt

u1 g -> u1 b L
u1 b -> u1 g L
u1 δ -> u2 c R
u1 c -> u1 δ L

u2 g -> u1 g R
u2 b -> u2 g R
u2 δ -> u2 c R
u2 c -> u5 g R

u3 g -> u3 b L
u3 b -> u5 b L
u3 δ -> u5 δ L
u3 c -> u3 δ L

u4 g -> u2 b R
u4 b -> u4 g R
u4 δ -> u4 c R
u4 c -> u5 c R

u5 g -> u6 b L
u5 b -> u6 g R
u5 δ -> u5 δ R
u5 c -> u3 b L

u6 g -> u4 b L
u6 b -> u5 g R
u6 δ -> u1 g R
u6 c -> HALT
)";

// Woods–Neary weakly universal (6,2) machine. The published table labels the
// rows g, b and writes 0, 1; here g = 0 (blank) and b = 1.
constexpr std::string_view kWutm62 = R"(# WUTM(6,2)
name: wutm_6_2
states: u1 u2 u3 u4 u5 u6 halt
alphabet: g b
blank: g
initial: u1
halting: halt

u1 g -> u1 g L
u1 b -> u2 b L

u2 g -> u6 g L
u2 b -> u3 g L

u3 g -> u2 g R
u3 b -> u3 b L

u4 g -> u5 b R
u4 b -> u6 g R

u5 g -> u4 b L
u5 b -> u4 b R

u6 g -> u1 b L
u6 b -> u4 g R
)";

}  // namespace

std::vector<std::string> corpus_names() { return {"utm_6_4", "wutm_6_2"}; }

std::string_view corpus_text(std::string_view name) {
  if (name == "utm_6_4") return kUtm64;
  if (name == "wutm_6_2") return kWutm62;
  throw std::invalid_argument("unknown corpus machine '" + std::string(name) +
                              "' (known: utm_6_4, wutm_6_2)");
}

TuringMachine builtin_machine(std::string_view name) { return parse_machine(corpus_text(name)); }

}  // namespace tmdyn
