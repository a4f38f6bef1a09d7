#include <doctest.h>

#include <random>
#include <set>

#include "support/fixtures.hpp"
#include "support/random_machine.hpp"
#include "tmdyn/corpus.hpp"
#include "tmdyn/gshift.hpp"

using namespace tmdyn;
using namespace tmdyn::testing;

namespace {

State st(const TuringMachine& m, const char* name) { return *m.find_state(name); }
Symbol sy(const TuringMachine& m, const char* name) { return *m.find_symbol(name); }

}  // namespace

TEST_CASE("alphabet: symbols first, then states") {
  const auto u = builtin_machine("utm_6_4");
  CHECK(a_size(u) == 11);
  CHECK(a_index(u, sy(u, "g")) == 0);
  CHECK(a_index(u, st(u, "u1")) == 4);
  CHECK(a_name(u, a_index(u, st(u, "u2"))) == "u2");
  CHECK(a_name(u, a_index(u, sy(u, "δ"))) == "δ");
}

TEST_CASE("compile: utm_6_4 head window rule") {
  const auto u = builtin_machine("utm_6_4");
  const auto d = compile_gshift(u);
  CHECK(d.radius() == 1);
  CHECK(d.alphabet_size() == 11);
  const auto g = a_index(u, sy(u, "g")), b = a_index(u, sy(u, "b"));
  const auto u2 = a_index(u, st(u, "u2"));
  const auto rule = d.rule_for({g, u2, b});
  CHECK(rule.replacement == GeneralizedShift::Window{g, g, u2});
  CHECK(rule.shift == +1);

  // Off-image and halting windows are identity.
  const auto u3 = a_index(u, st(u, "u3"));
  const auto off = d.rule_for({u2, u3, b});
  CHECK(off.replacement == GeneralizedShift::Window{u2, u3, b});
  CHECK(off.shift == 0);
  const auto h = a_index(u, u.halting());
  const auto halt = d.rule_for({g, h, b});
  CHECK(halt.replacement == GeneralizedShift::Window{g, h, b});
  CHECK(halt.shift == 0);
  CHECK_FALSE(d.rules().contains({g, h, b}));
}

TEST_CASE("compile: left and stay moves") {
  const auto m = parse_machine(
      "states: a halt\nalphabet: 0 1\nblank: 0\ninitial: a\nhalting: halt\n"
      "a 0 -> a 1 L\na 1 -> halt 0 N\n");
  const auto d = compile_gshift(m);
  const auto z = a_index(m, sy(m, "0")), o = a_index(m, sy(m, "1"));
  const auto a = a_index(m, st(m, "a")), h = a_index(m, m.halting());
  const auto left = d.rule_for({o, a, z});
  CHECK(left.replacement == GeneralizedShift::Window{a, o, o});
  CHECK(left.shift == -1);
  const auto stay = d.rule_for({o, a, o});
  CHECK(stay.replacement == GeneralizedShift::Window{o, h, z});
  CHECK(stay.shift == 0);
}

TEST_CASE("embed: index bookkeeping and inverse") {
  const auto u = builtin_machine("utm_6_4");
  const State u2 = st(u, "u2");

  const auto blank = embed(u, make_config(u, u2, std::vector<std::string>{}));
  CHECK(blank.cells() == std::map<std::int64_t, std::uint32_t>{{0, a_index(u, u2)}});

  const auto x = make_config(u, u2, std::vector<std::string>{"b"});
  const auto e = embed(u, x);
  CHECK(e.cells() == std::map<std::int64_t, std::uint32_t>{{0, a_index(u, u2)},
                                                           {1, a_index(u, sy(u, "b"))}});
  CHECK(unembed(u, e) == x);

  const auto y = make_config(u, u2, std::vector<std::string>{"c"}, -1);
  CHECK(embed(u, y).cells() == std::map<std::int64_t, std::uint32_t>{
                                   {-1, a_index(u, sy(u, "c"))}, {0, a_index(u, u2)}});

  CHECK(unembed(u, blank) == make_config(u, u2, std::vector<std::string>{}));
}

TEST_CASE("unembed: rejects sequences outside the image") {
  const auto u = builtin_machine("utm_6_4");
  const auto q = a_index(u, st(u, "u1"));
  ASequence s(a_size(u), 0);
  s.set(1, q);
  CHECK_THROWS_AS(unembed(u, s), NotInImage);  // cell 0 holds the blank

  ASequence t(a_size(u), 0);
  t.set(0, q);
  t.set(-3, q);
  CHECK_THROWS_AS(unembed(u, t), NotInImage);
}

TEST_CASE("gshift_step: identity, Bernoulli and compiled") {
  ASequence s(3, 0);
  s.set(0, 1);
  s.set(2, 2);
  CHECK(gshift_step(GeneralizedShift(1, 3), s) == s);

  GeneralizedShift bernoulli(0, 3);
  for (std::uint32_t a = 0; a < 3; ++a) bernoulli.set_rule({a}, {{a}, +1});
  ASequence one(3, 0);
  one.set(0, 1);
  ASequence moved(3, 0);
  moved.set(-1, 1);
  CHECK(gshift_step(bernoulli, one) == moved);

  const auto u = builtin_machine("utm_6_4");
  const auto x = make_config(u, st(u, "u2"), std::vector<std::string>{"b", "c"});
  CHECK(gshift_step(compile_gshift(u), embed(u, x)) == embed(u, step(u, x)));
}

TEST_CASE("conjugacy: corpus machines") {
  for (const auto& name : corpus_names()) {
    for (auto mode : {HaltingMode::fixpoint, HaltingMode::restart}) {
      const auto m = builtin_machine(name).with_halting_mode(mode);
      const auto r = verify_conjugacy(m, 1000, 7);
      CHECK(r.samples == 1000);
      CHECK(r.passed == 1000);
      CHECK(r.failed == 0);
      CHECK(r.seed == 7);
      CHECK_FALSE(r.first_counterexample);
    }
  }
}

TEST_CASE("conjugacy: a corrupted table is caught") {
  const auto w = builtin_machine("wutm_6_2");
  auto d = compile_gshift(w);
  // Flip the direction of one head rule.
  auto it = d.rules().begin();
  REQUIRE(it != d.rules().end());
  auto window = it->first;
  auto rule = it->second;
  rule.shift = -rule.shift + (rule.shift == 0 ? 1 : 0);
  d.set_rule(window, rule);
  const auto r = verify_conjugacy(w, d, 2000, 3);
  CHECK(r.failed > 0);
  REQUIRE(r.first_counterexample);
  const auto& x = *r.first_counterexample;
  CHECK(gshift_step(d, embed(w, x)) != embed(w, step(w, x)));
}

TEST_CASE("conjugacy: reports are reproducible") {
  const auto w = builtin_machine("wutm_6_2");
  auto d = compile_gshift(w);
  d.set_rule(d.rules().begin()->first, {d.rules().begin()->first, 0});
  const auto a = verify_conjugacy(w, d, 500, 99);
  const auto b = verify_conjugacy(w, d, 500, 99);
  CHECK(a.failed == b.failed);
  CHECK(a.first_counterexample == b.first_counterexample);
}

TEST_CASE("block_encode: widths and placement") {
  CHECK(block_width(2) == 1);
  CHECK(block_width(3) == 2);
  CHECK(block_width(10) == 4);
  CHECK(block_width(11) == 4);
  CHECK(block_width(1) == 1);

  ASequence two(2, 0);
  two.set(-2, 1);
  two.set(3, 1);
  CHECK(block_encode(two) == BinarySequence{-2, 3});

  CHECK(block_encode(ASequence(10, 0)).empty());

  ASequence ten(10, 0);
  ten.set(-1, 3);
  CHECK(block_encode(ten) == BinarySequence{-2, -1});  // 0011 at cells -4..-1

  // A non-zero default still maps to the all-zero codeword.
  ASequence shifted_default(4, 2);
  CHECK(block_encode(shifted_default).empty());
  shifted_default.set(0, 0);
  shifted_default.set(1, 3);
  CHECK(block_encode(shifted_default) == BinarySequence{1, 2, 3});  // 01 then 11
}

TEST_CASE("cantor_encode: exact values") {
  CHECK(cantor_encode({}) == CantorPoint{0, 0});
  CHECK(cantor_encode({-1}) == CantorPoint{mpq_class(2, 3), 0});
  CHECK(cantor_encode({0}) == CantorPoint{0, mpq_class(2, 3)});
  CHECK(cantor_encode({-2, 1}) == CantorPoint{mpq_class(2, 9), mpq_class(2, 9)});
  CHECK(cantor_encode({-1, -2, 0, 1, 2}) ==
        CantorPoint{mpq_class(8, 9), mpq_class(26, 27)});
}

// ---- properties ------------------------------------------------------------

TEST_CASE("property: conjugacy and forward invariance on random machines") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_machine(rng);
    if (trial % 2) m = m.with_halting_mode(HaltingMode::restart);
    const auto d = compile_gshift(m);
    CHECK(verify_conjugacy(m, d, 200, trial).failed == 0);
    for (int i = 0; i < 20; ++i) {
      const auto x = random_config(rng, m);
      CHECK_NOTHROW(unembed(m, gshift_step(d, embed(m, x))));
    }
  }
}

TEST_CASE("property: embedding round trip and metric compatibility") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_machine(rng);
    const auto x = random_config(rng, m);
    const auto e = embed(m, x);
    CHECK(unembed(m, e) == x);
    CHECK(embed(m, unembed(m, e)) == e);

    auto y = x;
    std::uniform_int_distribution<int> pick_k(1, 5);
    const int k = pick_k(rng);
    y.set(k, Symbol{static_cast<std::uint16_t>((x.at(k).id + 1) % m.num_symbols())});
    // x and y agree on |i| < k; their embeddings agree on |i| < k + 1 only
    // up to the shifted right half, so at least on |i| < k.
    const auto f = embed(m, y);
    for (std::int64_t i = -(k - 1); i <= k - 1; ++i) CHECK(e.at(i) == f.at(i));
    // Conversely: agreement on |i| < k + 1 in the image gives agreement on |i| < k.
    std::int64_t agree = 0;
    while (e.at(agree) == f.at(agree) && e.at(-agree) == f.at(-agree)) ++agree;
    for (std::int64_t i = -(agree - 2); i <= agree - 2; ++i) CHECK(x.at(i) == y.at(i));
  }
}

TEST_CASE("property: Cantor coding is injective on small windows") {
  // Every binary sequence supported in [-4, 4].
  std::set<std::pair<mpq_class, mpq_class>> seen;
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    BinarySequence s;
    for (int i = 0; i < 9; ++i)
      if (mask >> i & 1u) s.insert(i - 4);
    const auto p = cantor_encode(s);
    CHECK(p.x >= 0);
    CHECK(p.x <= 1);
    CHECK(p.y >= 0);
    CHECK(p.y <= 1);
    seen.insert({p.x, p.y});
  }
  CHECK(seen.size() == 512);
}
