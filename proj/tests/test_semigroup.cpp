#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wfsep/selftest.hpp"

using namespace wfsep;

TEST_CASE("transition semigroup of the aa language has five elements") {
  auto [s, m] = transition_semigroup(corpus::contains_aa());
  CHECK(s.size == 5);
  CHECK_NOTHROW(s.validate());
  for (const auto& w : enumerate_words(m.alphabet, 7))
    CHECK(m.in_set("L", w) == accepts(corpus::contains_aa(), w));
}

TEST_CASE("transition semigroup of the b-detector is the two-element flag") {
  auto [s, m] = transition_semigroup(corpus::contains_b());
  CHECK(s.size == 2);
  int ta = m.letter_image[m.alphabet.require("a")];
  int tb = m.letter_image[m.alphabet.require("b")];
  CHECK(s.mul(ta, ta) == ta);
  CHECK(s.mul(ta, tb) == tb);
  CHECK(s.mul(tb, ta) == tb);
  CHECK(s.mul(tb, tb) == tb);
}

TEST_CASE("empty word in the language is rejected") {
  CHECK_THROWS_AS(transition_semigroup(complement(corpus::contains_aa())),
                  EpsilonAccepted);
}

TEST_CASE("omega powers are idempotent") {
  for (const Dfa& d : {corpus::contains_aa(), corpus::even_a()}) {
    auto [s, m] = transition_semigroup(d);
    (void)m;
    int w = s.omega();
    CHECK(w >= 1);
    for (int x = 0; x < s.size; ++x) {
      CHECK(s.is_idempotent(s.power(x, w)));
      CHECK(s.omega_power(x) == s.power(x, w));
    }
  }
}

TEST_CASE("parity semigroup structure") {
  auto [s, m] = transition_semigroup(corpus::even_a());
  CHECK(s.size == 2);
  CHECK(s.omega() == 2);
  CHECK(s.idempotents().size() == 1);
  int ta = m.letter_image[m.alphabet.require("a")];
  CHECK(m.witness[ta] == Word{"a"});
  CHECK(m.witness[s.mul(ta, ta)] == Word{"a", "a"});
}

TEST_CASE("witness words generate every element") {
  auto [s, m] = transition_semigroup(corpus::up_ab());
  for (int x = 0; x < s.size; ++x) CHECK(m.image(m.witness[x]) == x);
}

TEST_CASE("product recognizer tracks both languages") {
  auto [s, m] = product_recognizer(corpus::contains_aa(), corpus::contains_b());
  (void)s;
  for (const auto& w : enumerate_words(m.alphabet, 6)) {
    CHECK(m.in_set("L", w) == accepts(corpus::contains_aa(), w));
    CHECK(m.in_set("Lp", w) == accepts(corpus::contains_b(), w));
  }
}

TEST_CASE("syntactic order of an upward closed language is nontrivial") {
  auto [s, m] = syntactic_ordered_semigroup(corpus::up_ab());
  (void)m;
  REQUIRE(s.has_order());
  CHECK_NOTHROW(s.validate());
  bool strict = false;
  for (int x = 0; x < s.size; ++x)
    for (int y = 0; y < s.size; ++y)
      if (x != y && s.le(x, y)) strict = true;
  CHECK(strict);
}

TEST_CASE("syntactic order of a group language is equality") {
  auto [s, m] = syntactic_ordered_semigroup(corpus::even_a());
  (void)m;
  for (int x = 0; x < s.size; ++x)
    for (int y = 0; y < s.size; ++y)
      CHECK(s.le(x, y) == (x == y));
}

TEST_CASE("identity checking") {
  auto [aa, m1] = syntactic_ordered_semigroup(corpus::contains_aa());
  (void)m1;
  CHECK(check_preset(aa, "aperiodic").holds);
  auto [parity, m2] = syntactic_ordered_semigroup(corpus::even_a());
  (void)m2;
  IdentityResult r = check_preset(parity, "aperiodic");
  CHECK_FALSE(r.holds);
  CHECK(!r.counterexample.empty());
  CHECK(check_preset(parity, "commutative").holds);
  CHECK_FALSE(check_preset(aa, "commutative").holds);
}

TEST_CASE("suffix class preset holds exactly for right-zero behavior") {
  FiniteSemigroup right_zero = parse_semigroup(
      "elements 2\nmul 0 : 0 1\nmul 1 : 0 1\nle 0 0\nle 1 1\n");
  CHECK(check_preset(right_zero, "D").holds);
  FiniteSemigroup flag = parse_semigroup(
      "elements 2\nidentity 0\nmul 0 : 0 1\nmul 1 : 1 1\nle 0 0\nle 1 1\n");
  CHECK_FALSE(check_preset(flag, "D").holds);
}

TEST_CASE("identity term parsing") {
  IdentitySpec spec = parse_identity("x^w.x = x^w");
  CHECK_FALSE(spec.is_order);
  IdentitySpec ord = parse_identity("x <= y");
  CHECK(ord.is_order);
  CHECK_THROWS_AS(parse_identity("x^w.x"), MalformedInput);
  FiniteSemigroup no_order = parse_semigroup(
      "elements 1\nmul 0 : 0\n");
  CHECK_THROWS_AS(check_identity(no_order, ord), MissingOrder);
}

TEST_CASE("semigroup codec round trip") {
  auto [s, m] = syntactic_ordered_semigroup(corpus::up_ab());
  (void)m;
  FiniteSemigroup again = parse_semigroup(serialize_semigroup(s));
  CHECK(again.size == s.size);
  CHECK(again.mul_table == s.mul_table);
  CHECK(again.identity == s.identity);
  CHECK(again.order == s.order);
}

TEST_CASE("codec rejects malformed tables") {
  CHECK_THROWS_AS(parse_semigroup("elements 2\nmul 0 : 0 1\n"),
                  MalformedInput);
  CHECK_THROWS_AS(parse_semigroup("elements 2\nmul 0 : 0 1\nmul 1 : 1\n"),
                  MalformedInput);
  // (0.0).1 = 0 but 0.(0.1) = 1
  CHECK_THROWS_AS(parse_semigroup("elements 2\nmul 0 : 1 0\nmul 1 : 0 0\n"),
                  MalformedInput);
}
