#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wfsep/selftest.hpp"

using namespace wfsep;

TEST_CASE("dfa parse and serialize round trip") {
  Dfa d = corpus::contains_aa();
  Dfa again = parse_dfa(serialize_dfa(d));
  CHECK(equivalent(d, again));
  CHECK(serialize_dfa(canonicalize(d)) == serialize_dfa(again));
}

TEST_CASE("parse errors are reported") {
  CHECK_THROWS_AS(parse_dfa("alphabet a\nstates 1\ninitial 0\naccepting\n"),
                  MalformedInput);  // missing transition
  CHECK_THROWS_AS(parse_dfa("alphabet a\nstates 1\ninitial 2\naccepting\n"
                            "trans 0 a 0\n"),
                  MalformedInput);
  CHECK_THROWS_AS(parse_dfa("alphabet a\nstates 1\ninitial 0\naccepting\n"
                            "trans 0 a 0\ntrans 0 a 0\n"),
                  MalformedInput);
  CHECK_THROWS_AS(parse_dfa("alphabet a\nstates 1\ninitial 0\naccepting\n"
                            "trans 0 b 0\n"),
                  UnknownSymbol);
}

TEST_CASE("comments and blank lines are ignored") {
  Dfa d = parse_dfa(
      "# a comment\nalphabet a\n\nstates 1\ninitial 0 # trailing\n"
      "accepting 0\ntrans 0 a 0\n");
  CHECK(accepts(d, {"a"}));
}

TEST_CASE("boolean operations agree with membership") {
  Dfa x = corpus::contains_aa(), y = corpus::up_ab();
  Dfa nx = complement(x), both = intersect(x, y), either = unite(x, y);
  for (const auto& w : enumerate_words(x.alphabet, 7)) {
    CHECK(accepts(nx, w) == !accepts(x, w));
    CHECK(accepts(both, w) == (accepts(x, w) && accepts(y, w)));
    CHECK(accepts(either, w) == (accepts(x, w) || accepts(y, w)));
  }
}

TEST_CASE("inclusion and equivalence") {
  CHECK(includes(corpus::up_ab(), corpus::just_ab()));
  CHECK_FALSE(includes(corpus::just_ab(), corpus::up_ab()));
  CHECK(equivalent(corpus::even_a(), corpus::even_a()));
  CHECK_FALSE(equivalent(corpus::even_a(), corpus::odd_a()));
}

TEST_CASE("emptiness witness is shortest-lex") {
  auto w = is_empty_with_witness(corpus::contains_aa());
  REQUIRE(w.has_value());
  CHECK(*w == Word{"a", "a"});
  CHECK_FALSE(is_empty_with_witness(corpus::empty_lang()).has_value());
  Dfa eps_only = parse_dfa(
      "alphabet a\nstates 2\ninitial 0\naccepting 0\n"
      "trans 0 a 1\ntrans 1 a 1\n");
  auto e = is_empty_with_witness(eps_only);
  REQUIRE(e.has_value());
  CHECK(e->empty());
}

TEST_CASE("enumeration is length-then-lex ordered") {
  auto words = enumerate_accepted(corpus::up_ab(), 4);
  REQUIRE(!words.empty());
  CHECK(words.front() == Word{"a", "b"});
  for (size_t i = 1; i < words.size(); ++i) {
    CHECK(words[i - 1].size() <= words[i].size());
    if (words[i - 1].size() == words[i].size())
      CHECK(words[i - 1] < words[i]);
  }
}

TEST_CASE("determinization preserves the language and minimizes") {
  Nfa n = parse_nfa(
      "alphabet a b\nstates 3\ninitial 0 1\naccepting 2\n"
      "trans 0 a 2\ntrans 1 b 2\ntrans 2 a 2\ntrans 2 b 2\n");
  Dfa d = determinize_minimize(n);
  for (const auto& w : enumerate_words(d.alphabet, 6))
    CHECK(accepts(d, w) == accepts(n, w));
  CHECK(d.num_states <= 3);
}

TEST_CASE("upward closure matches the embedding oracle") {
  Dfa d = corpus::just_ab();
  Dfa closed = determinize_minimize(upward_closure(nfa_from_dfa(d)));
  for (const auto& w : enumerate_words(d.alphabet, 6)) {
    bool embeds = is_scattered_subword({"a", "b"}, w);
    CHECK(accepts(closed, w) == embeds);
  }
}

TEST_CASE("strip_epsilon removes only the empty word") {
  Dfa with_eps = complement(corpus::contains_aa());
  REQUIRE(with_eps.accepting[with_eps.initial]);
  Dfa stripped = strip_epsilon(with_eps);
  CHECK_FALSE(stripped.accepting[stripped.initial]);
  for (const auto& w : enumerate_words(with_eps.alphabet, 6))
    CHECK(accepts(stripped, w) == accepts(with_eps, w));
}

TEST_CASE("word parsing forms") {
  CHECK(parse_word("ab") == Word{"a", "b"});
  CHECK(parse_word("ab,ba") == Word{"ab", "ba"});
  CHECK(parse_word("-").empty());
}

TEST_CASE("scattered subword relation") {
  CHECK(is_scattered_subword({}, {"a"}));
  CHECK(is_scattered_subword({"a", "b"}, {"a", "a", "b"}));
  CHECK_FALSE(is_scattered_subword({"b", "a"}, {"a", "b"}));
  CHECK_FALSE(is_scattered_subword({"a", "a"}, {"a"}));
}

TEST_CASE("nfa serialization round trip") {
  Nfa n = upward_closure(nfa_from_dfa(corpus::just_ab()));
  Nfa again = parse_nfa(serialize_nfa(n));
  for (const auto& w : enumerate_words(n.alphabet, 5))
    CHECK(accepts(n, w) == accepts(again, w));
}
