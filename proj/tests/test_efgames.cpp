#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wfsep/selftest.hpp"

using namespace wfsep;

namespace {
Word w(const char* s) { return parse_word(s); }
}  // namespace

TEST_CASE("two-pebble game base cases") {
  CHECK(fo2_equiv(w("ab"), w("ab"), 3, true));
  CHECK(fo2_equiv(w("aab"), w("aaab"), 1, false));
  // first letters differ, so even zero rounds distinguish
  CHECK_FALSE(fo2_equiv(w("ab"), w("ba"), 0, false));
}

TEST_CASE("two-pebble game separates order patterns") {
  // some a before a b in one word only
  CHECK_FALSE(fo2_equiv(w("ab"), w("b"), 1, false));
  CHECK_FALSE(fo2_equiv(w("aab"), w("aba"), 2, false));
}

TEST_CASE("successor enrichment refines the two-pebble game") {
  // adjacency of the leading aa is invisible without successor at rank 1
  CHECK(fo2_equiv(w("aab"), w("aab"), 2, true));
  CHECK(fo2_equiv(w("aab"), w("aba"), 1, false));
  CHECK_FALSE(fo2_equiv(w("aab"), w("aba"), 1, true));
}

TEST_CASE("one-block preorder is the subword relation on profiles") {
  CHECK(sigma_preorder(w("a"), w("ba"), 1, 2, false));
  CHECK_FALSE(sigma_preorder(w("ab"), w("ba"), 1, 2, false));
  CHECK(sigma_preorder(w("ab"), w("aabb"), 1, 3, false));
  CHECK_FALSE(sigma_preorder(w("aa"), w("a"), 1, 2, false));
}

TEST_CASE("enriched preorder sees adjacency and endpoints") {
  CHECK(sigma_preorder(w("aaaaaaaa"), w("aaaaaaaaa"), 1, 2, true));
  // both endpoints pebbled: adjacent in the short word only
  CHECK_FALSE(sigma_preorder(w("aa"), w("aaa"), 1, 2, true));
  CHECK_FALSE(sigma_preorder(w("aa"), w("aba"), 1, 2, true));
  // min/max: first letter mismatch matters
  CHECK_FALSE(sigma_preorder(w("ab"), w("bab"), 1, 1, true));
  CHECK(sigma_preorder(w("ab"), w("ab"), 1, 1, true));
}

TEST_CASE("alternation helps the spoiler") {
  // with one block, a embeds into ab; with two blocks Spoiler can switch and
  // exhibit the b that a lacks
  CHECK(sigma_preorder(w("a"), w("ab"), 1, 1, false));
  CHECK_FALSE(sigma_preorder(w("a"), w("ab"), 2, 1, false));
}

TEST_CASE("equivalence is the two-sided preorder") {
  for (const auto& u : enumerate_words(Alphabet({"a", "b"}), 3))
    for (const auto& v : enumerate_words(Alphabet({"a", "b"}), 3))
      for (int k = 1; k <= 2; ++k)
        CHECK(bsigma_equiv(u, v, 1, k, false) ==
              (sigma_preorder(u, v, 1, k, false) &&
               sigma_preorder(v, u, 1, k, false)));
}

TEST_CASE("game agrees with the subword profile oracle") {
  auto words = enumerate_words(Alphabet({"a", "b"}), 5);
  for (const auto& u : words)
    for (const auto& v : words)
      for (int k = 1; k <= 2; ++k)
        CHECK(sigma_preorder(u, v, 1, k, false) ==
              subword_profile_preorder(u, v, k));
}

TEST_CASE("bounds are enforced") {
  GameLimits limits{2, 4};
  CHECK_THROWS_AS(fo2_equiv(w("aaaaa"), w("a"), 1, false, limits),
                  BoundExceeded);
  CHECK_THROWS_AS(sigma_preorder(w("a"), w("a"), 1, 3, false, limits),
                  BoundExceeded);
  CHECK_THROWS_AS(fo2_equiv(w("-"), w("a"), 1, false), MalformedInput);
}

TEST_CASE("rank monotonicity") {
  auto words = enumerate_words(Alphabet({"a", "b"}), 4);
  for (const auto& u : words)
    for (const auto& v : words) {
      if (fo2_equiv(u, v, 2, true)) CHECK(fo2_equiv(u, v, 1, true));
      if (sigma_preorder(u, v, 1, 2, true))
        CHECK(sigma_preorder(u, v, 1, 1, true));
    }
}
