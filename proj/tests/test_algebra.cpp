#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wfsep/selftest.hpp"

using namespace wfsep;

namespace {

FiniteSemigroup right_zero(int n) {
  FiniteSemigroup s;
  s.size = n;
  s.order.assign(n * n, 0);
  for (int i = 0; i < n; ++i) {
    s.order[i * n + i] = 1;
    for (int j = 0; j < n; ++j) s.mul_table.push_back(j);
  }
  return s;
}

ActionTable trivial_action(int t_size, int m_size) {
  ActionTable act;
  act.t_size = t_size;
  act.m_size = m_size;
  for (int t = 0; t <= t_size; ++t)
    for (int m = 0; m < m_size; ++m) act.table.push_back(m);
  return act;
}

FiniteSemigroup flag_monoid() {
  FiniteSemigroup m;
  m.size = 2;
  m.identity = 0;
  m.mul_table = {0, 1, 1, 1};
  m.order = {1, 0, 0, 1};
  return m;
}

}  // namespace

TEST_CASE("action validation") {
  ActionReport ok = validate_action(flag_monoid(), right_zero(2),
                                    trivial_action(2, 2));
  CHECK(ok.valid);
  ActionTable bad = trivial_action(2, 2);
  bad.table[0 * 2 + 0] = 1;  // t1 * 1_M = 0, breaking unit preservation
  ActionReport r = validate_action(flag_monoid(), right_zero(2), bad);
  CHECK_FALSE(r.valid);
  CHECK(!r.violations.empty());
}

TEST_CASE("semidirect product with a trivial action is the direct product") {
  SemidirectProduct sd =
      semidirect(flag_monoid(), right_zero(2), trivial_action(2, 2));
  CHECK(sd.product.size == 4);
  CHECK_NOTHROW(sd.product.validate());
  for (int m1 = 0; m1 < 2; ++m1)
    for (int t1 = 0; t1 < 2; ++t1)
      for (int m2 = 0; m2 < 2; ++m2)
        for (int t2 = 0; t2 < 2; ++t2) {
          int p = sd.product.mul(sd.pair(m1, t1), sd.pair(m2, t2));
          CHECK(sd.first(p) == flag_monoid().mul(m1, m2));
          CHECK(sd.second(p) == t2);
        }
}

TEST_CASE("invalid actions are rejected at product construction") {
  ActionTable bad = trivial_action(2, 2);
  bad.table[0 * 2 + 0] = 1;
  CHECK_THROWS_AS(semidirect(flag_monoid(), right_zero(2), bad),
                  InvalidAction);
}

TEST_CASE("suffix class membership") {
  CHECK(is_in_D(right_zero(2)));
  CHECK(is_in_D(right_zero(1)));
  FiniteSemigroup flag = flag_monoid();
  CHECK_FALSE(is_in_D(flag));  // 0 * 1 = 0 but 1 is idempotent
}

TEST_CASE("antichain monoid") {
  for (int n = 1; n <= 5; ++n) {
    FiniteSemigroup m = antichain_monoid(n);
    CHECK(m.size == n + 2);
    CHECK_NOTHROW(m.validate());
    REQUIRE(m.identity.has_value());
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        CHECK(m.mul(i, j) == n + 1);
        if (i != j) CHECK_FALSE(m.le(i, j));
      }
    CHECK(m.mul(n + 1, 1) == n + 1);
  }
}

TEST_CASE("action codec round trip") {
  ActionTable act = trivial_action(2, 3);
  ActionTable again = parse_action(serialize_action(act), 2, 3);
  CHECK(again.table == act.table);
  CHECK_THROWS_AS(parse_action("act 0 0\n", 2, 3), MalformedInput);
  CHECK_THROWS_AS(parse_action("act 9 0 0\n", 2, 3), MalformedInput);
}

TEST_CASE("fixed instances recognize their language pairs") {
  auto instances = algebra_instances();
  REQUIRE(instances.size() == 3);
  for (const auto& inst : instances) {
    CHECK(validate_action(inst.sd.m, inst.sd.t, inst.sd.act).valid);
    CHECK(is_in_D(inst.sd.t));
    CHECK_NOTHROW(inst.sd.product.validate());
    // delta recognizes L via F
    for (const auto& w : enumerate_words(inst.l.alphabet, 6)) {
      int acc = -1;
      for (const auto& tok : w) {
        int v = inst.delta_letter[inst.l.alphabet.require(tok)];
        acc = acc < 0 ? v : inst.sd.product.mul(acc, v);
      }
      CHECK(static_cast<bool>(inst.f[acc]) == accepts(inst.l, w));
      if (accepts(inst.lp, w)) CHECK_FALSE(static_cast<bool>(inst.f[acc]));
    }
  }
}

TEST_CASE("recast morphism lands in an upward closed set") {
  auto inst = algebra_instances().front();
  Reduction red = reduce(inst.l, inst.lp);
  GammaMorphism g = gamma_construction(inst.sd, inst.delta_letter, inst.f,
                                       red.ctx, inst.n, inst.inject);
  REQUIRE(g.monoid.has_order());
  for (int x = 0; x < g.monoid.size; ++x)
    for (int y = 0; y < g.monoid.size; ++y)
      if (g.accepting[x] && g.monoid.le(x, y)) CHECK(g.accepting[y]);
  for (const auto& u : enumerate_well_formed(red.ctx, 3)) {
    Word exp = expand(red.ctx, u, inst.sd.product.omega());
    CHECK(static_cast<bool>(g.accepting[g.eval(u)]) == accepts(inst.l, exp));
  }
}

TEST_CASE("gamma construction rejects bad inputs") {
  auto inst = algebra_instances().front();
  Reduction red = reduce(inst.l, inst.lp);
  // suffix component outside the class
  SemidirectProduct bad_sd =
      semidirect(flag_monoid(), flag_monoid(), trivial_action(2, 2));
  CHECK_THROWS_AS(gamma_construction(bad_sd, inst.delta_letter, inst.f,
                                     red.ctx, inst.n, inst.inject),
                  NotInD);
  // comparable injection targets
  FiniteSemigroup chain = antichain_monoid(2);
  chain.order[1 * chain.size + 2] = 1;
  CHECK_THROWS_AS(gamma_construction(inst.sd, inst.delta_letter, inst.f,
                                     red.ctx, chain, {1, 2}),
                  NotAntichain);
  // accepting set not upward closed
  SemidirectProduct ordered = algebra_instances()[1].sd;
  std::vector<char> down(ordered.product.size, 0);
  // accept only the bottom element of the ordered component
  down[ordered.pair(1, 0)] = 1;
  Reduction red2 = reduce(algebra_instances()[1].l, algebra_instances()[1].lp);
  CHECK_THROWS_AS(gamma_construction(ordered, algebra_instances()[1].delta_letter,
                                     down, red2.ctx, antichain_monoid(1), {1}),
                  NotUpwardClosed);
}

TEST_CASE("suffix evaluator matches the language on the reference map") {
  Reduction red = reduce(corpus::contains_b(),
                         strip_epsilon(complement(corpus::contains_b())));
  GammaMorphism g =
      beta_gamma(red.ctx, red.ctx.morphism.accepting_sets.at("L"));
  DeltaEvaluator ev = delta_evaluator(g, red.ctx);
  CHECK(ev.suffix_window == red.ctx.locality);
  for (const auto& w : enumerate_words(red.ctx.morphism.alphabet, 7)) {
    CHECK(ev.in_F(w) == accepts(corpus::contains_b(), w));
    CHECK(ev.lab(w) == ev.lab(ev.rho(w)));
    CHECK(static_cast<int>(ev.rho(w).size()) <=
          std::min<int>(w.size(), red.ctx.locality));
  }
}
