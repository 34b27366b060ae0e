#include "wfsep/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace wfsep {

namespace corpus {

Dfa contains_aa() {
  return parse_dfa(
      "alphabet a b\nstates 3\ninitial 0\naccepting 2\n"
      "trans 0 a 1\ntrans 0 b 0\ntrans 1 a 2\ntrans 1 b 0\n"
      "trans 2 a 2\ntrans 2 b 2\n");
}

Dfa contains_b() {
  return parse_dfa(
      "alphabet a b\nstates 2\ninitial 0\naccepting 1\n"
      "trans 0 a 0\ntrans 0 b 1\ntrans 1 a 1\ntrans 1 b 1\n");
}

Dfa even_a() {
  return parse_dfa(
      "alphabet a\nstates 3\ninitial 0\naccepting 2\n"
      "trans 0 a 1\ntrans 1 a 2\ntrans 2 a 1\n");
}

Dfa odd_a() {
  return parse_dfa(
      "alphabet a\nstates 3\ninitial 0\naccepting 1\n"
      "trans 0 a 1\ntrans 1 a 2\ntrans 2 a 1\n");
}

Dfa starts_a() {
  return parse_dfa(
      "alphabet a b\nstates 3\ninitial 0\naccepting 1\n"
      "trans 0 a 1\ntrans 0 b 2\ntrans 1 a 1\ntrans 1 b 1\n"
      "trans 2 a 2\ntrans 2 b 2\n");
}

Dfa starts_b() {
  return parse_dfa(
      "alphabet a b\nstates 3\ninitial 0\naccepting 1\n"
      "trans 0 b 1\ntrans 0 a 2\ntrans 1 a 1\ntrans 1 b 1\n"
      "trans 2 a 2\ntrans 2 b 2\n");
}

Dfa up_ab() {
  return parse_dfa(
      "alphabet a b\nstates 3\ninitial 0\naccepting 2\n"
      "trans 0 a 1\ntrans 0 b 0\ntrans 1 a 1\ntrans 1 b 2\n"
      "trans 2 a 2\ntrans 2 b 2\n");
}

Dfa just_b() {
  return parse_dfa(
      "alphabet a b\nstates 3\ninitial 0\naccepting 1\n"
      "trans 0 b 1\ntrans 0 a 2\ntrans 1 a 2\ntrans 1 b 2\n"
      "trans 2 a 2\ntrans 2 b 2\n");
}

Dfa just_ab() {
  return parse_dfa(
      "alphabet a b\nstates 4\ninitial 0\naccepting 2\n"
      "trans 0 a 1\ntrans 0 b 3\ntrans 1 b 2\ntrans 1 a 3\n"
      "trans 2 a 3\ntrans 2 b 3\ntrans 3 a 3\ntrans 3 b 3\n");
}

Dfa a_plus() {
  return parse_dfa(
      "alphabet a b\nstates 3\ninitial 0\naccepting 1\n"
      "trans 0 a 1\ntrans 0 b 2\ntrans 1 a 1\ntrans 1 b 2\n"
      "trans 2 a 2\ntrans 2 b 2\n");
}

Dfa ab_star() {
  return parse_dfa(
      "alphabet a b\nstates 3\ninitial 0\naccepting 1\n"
      "trans 0 a 1\ntrans 0 b 2\ntrans 1 a 2\ntrans 1 b 1\n"
      "trans 2 a 2\ntrans 2 b 2\n");
}

Dfa empty_lang() {
  return parse_dfa(
      "alphabet a b\nstates 1\ninitial 0\naccepting\n"
      "trans 0 a 0\ntrans 0 b 0\n");
}

}  // namespace corpus

std::vector<Word> enumerate_words(const Alphabet& alphabet, int max_len) {
  std::vector<Word> out;
  std::vector<Word> layer = {{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int a = 0; a < alphabet.size(); ++a) {
        Word w2 = w;
        w2.push_back(alphabet.token(a));
        out.push_back(w2);
        next.push_back(std::move(w2));
      }
    layer = std::move(next);
  }
  return out;
}

std::vector<WfWord> enumerate_well_formed(const WfContext& ctx,
                                          int max_letters) {
  std::vector<WfLetter> letters = wf_alphabet(ctx);
  std::vector<WfWord> out;
  for (const auto& l : letters)
    if (l.kind == WfLetter::Kind::Single) out.push_back({l});
  // chains First Mid* Last with matching junction idempotents
  std::vector<WfWord> open;
  for (const auto& l : letters)
    if (l.kind == WfLetter::Kind::First) open.push_back({l});
  for (int len = 2; len <= max_letters; ++len) {
    std::vector<WfWord> next_open;
    for (const auto& w : open) {
      int junction = w.back().right;
      for (const auto& l : letters) {
        if (l.kind == WfLetter::Kind::Last && l.left == junction) {
          WfWord closed = w;
          closed.push_back(l);
          out.push_back(std::move(closed));
        }
        if (l.kind == WfLetter::Kind::Mid && l.left == junction &&
            len < max_letters) {
          WfWord longer = w;
          longer.push_back(l);
          next_open.push_back(std::move(longer));
        }
      }
    }
    open = std::move(next_open);
  }
  return out;
}

std::vector<AlgebraInstance> algebra_instances() {
  std::vector<AlgebraInstance> out;

  FiniteSemigroup two_flat;  // {1, z} multiplicative, equality order
  two_flat.size = 2;
  two_flat.identity = 0;
  two_flat.mul_table = {0, 1, 1, 1};
  two_flat.order = {1, 0, 0, 1};

  FiniteSemigroup right_zero2;
  right_zero2.size = 2;
  right_zero2.mul_table = {0, 1, 0, 1};
  right_zero2.order = {1, 0, 0, 1};

  auto trivial_action = [](const FiniteSemigroup& m, const FiniteSemigroup& t) {
    ActionTable act;
    act.t_size = t.size;
    act.m_size = m.size;
    for (int i = 0; i <= t.size; ++i)
      for (int s = 0; s < m.size; ++s) act.table.push_back(s);
    return act;
  };

  {
    AlgebraInstance inst;
    inst.name = "flag-with-suffix-tag";
    inst.sd = semidirect(two_flat, right_zero2,
                         trivial_action(two_flat, right_zero2));
    inst.delta_letter = {inst.sd.pair(0, 0), inst.sd.pair(1, 1)};  // a, b
    inst.f.assign(inst.sd.product.size, 0);
    inst.f[inst.sd.pair(1, 0)] = 1;
    inst.f[inst.sd.pair(1, 1)] = 1;
    inst.l = corpus::contains_b();
    inst.lp = corpus::a_plus();
    inst.n = antichain_monoid(2);
    inst.inject = {1, 2};
    out.push_back(std::move(inst));
  }

  {
    FiniteSemigroup two_ordered = two_flat;  // z below 1
    two_ordered.order = {1, 0, 1, 1};
    FiniteSemigroup trivial;
    trivial.size = 1;
    trivial.mul_table = {0};
    trivial.order = {1};
    AlgebraInstance inst;
    inst.name = "ordered-flag";
    inst.sd =
        semidirect(two_ordered, trivial, trivial_action(two_ordered, trivial));
    inst.delta_letter = {inst.sd.pair(0, 0), inst.sd.pair(1, 0)};
    inst.f.assign(inst.sd.product.size, 0);
    inst.f[inst.sd.pair(0, 0)] = 1;
    inst.l = corpus::a_plus();
    inst.lp = corpus::contains_b();
    inst.n = antichain_monoid(1);
    inst.inject = {1};
    out.push_back(std::move(inst));
  }

  {
    FiniteSemigroup m = antichain_monoid(1);  // {1, z, 0}
    ActionTable act;  // both generators act by the endomorphism z -> 0
    act.t_size = right_zero2.size;
    act.m_size = m.size;
    act.table = {0, 2, 2, 0, 2, 2, 0, 1, 2};  // rows t1, t2, unit
    AlgebraInstance inst;
    inst.name = "absorbing-restart";
    inst.sd = semidirect(m, right_zero2, act);
    inst.delta_letter = {inst.sd.pair(1, 0), inst.sd.pair(0, 1)};  // a, b
    inst.f.assign(inst.sd.product.size, 0);
    inst.f[inst.sd.pair(1, 0)] = 1;
    inst.f[inst.sd.pair(1, 1)] = 1;
    inst.l = corpus::ab_star();
    inst.lp = determinize_minimize(
        nfa_from_dfa(strip_epsilon(complement(corpus::ab_star()))));
    inst.n = antichain_monoid(2);
    inst.inject = {1, 2};
    out.push_back(std::move(inst));
  }
  return out;
}

namespace {

struct Suite {
  SuiteResult result;
  explicit Suite(std::string name) { result.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok && result.pass) {
      result.pass = false;
      result.detail = what;
    }
  }
};

bool subword_oracle(const Dfa& d, const Word& w, int max_len) {
  for (const auto& u : enumerate_accepted(d, max_len))
    if (!u.empty() && is_scattered_subword(u, w)) return true;
  return false;
}

SuiteResult suite_automata_boolean(const SelftestOptions& opt) {
  Suite s("automata-boolean-algebra");
  auto pairs = {std::make_pair(corpus::contains_aa(), corpus::up_ab()),
                std::make_pair(corpus::contains_b(), corpus::starts_a())};
  for (const auto& [x, y] : pairs) {
    Dfa nx = complement(x), both = intersect(x, y), either = unite(x, y);
    for (const auto& w : enumerate_words(x.alphabet, std::min(opt.max_len, 8))) {
      bool ax = accepts(x, w), ay = accepts(y, w);
      s.check(accepts(nx, w) == !ax, "complement disagrees on " + word_string(w));
      s.check(accepts(both, w) == (ax && ay),
              "intersection disagrees on " + word_string(w));
      s.check(accepts(either, w) == (ax || ay),
              "union disagrees on " + word_string(w));
    }
  }
  return s.result;
}

SuiteResult suite_automata_closure(const SelftestOptions& opt) {
  Suite s("automata-upward-closure");
  int n = std::min(opt.max_len, 8);
  for (const Dfa& d : {corpus::just_ab(), corpus::even_a(), corpus::empty_lang()}) {
    Dfa closed = determinize_minimize(upward_closure(nfa_from_dfa(d)));
    Dfa twice = determinize_minimize(
        upward_closure(nfa_from_dfa(closed)));
    s.check(equivalent(closed, twice), "closure is not idempotent");
    s.check(includes(closed, d), "closure is not extensive");
    for (const auto& w : enumerate_words(d.alphabet, n))
      s.check(accepts(closed, w) == subword_oracle(d, w, n),
              "closure disagrees with embedding oracle on " + word_string(w));
  }
  return s.result;
}

SuiteResult suite_automata_minimize(const SelftestOptions& opt) {
  Suite s("automata-minimization");
  for (const Dfa& d : {corpus::contains_aa(), corpus::up_ab(), corpus::just_ab()}) {
    Dfa min = determinize_minimize(nfa_from_dfa(d));
    for (const auto& w : enumerate_words(d.alphabet, std::min(opt.max_len, 8)))
      s.check(accepts(min, w) == accepts(d, w),
              "minimization changed the language on " + word_string(w));
    for (int p = 0; p < min.num_states; ++p)
      for (int q = p + 1; q < min.num_states; ++q) {
        Dfa dp = min, dq = min;
        dp.initial = p;
        dq.initial = q;
        s.check(!equivalent(dp, dq), "two states are language-equivalent");
      }
  }
  return s.result;
}

SuiteResult suite_automata_includes(const SelftestOptions&) {
  Suite s("automata-inclusion");
  auto cases = {std::make_pair(corpus::up_ab(), corpus::up_ab()),
                std::make_pair(corpus::up_ab(), corpus::just_ab()),
                std::make_pair(corpus::just_ab(), corpus::up_ab()),
                std::make_pair(corpus::contains_aa(), corpus::just_ab())};
  for (const auto& [x, y] : cases) {
    bool inc = includes(x, y);
    bool counter = false;
    for (const auto& w :
         enumerate_words(x.alphabet, x.num_states * y.num_states))
      if (accepts(y, w) && !accepts(x, w)) counter = true;
    s.check(inc == !counter, "inclusion disagrees with enumeration");
  }
  return s.result;
}

SuiteResult suite_semigroup(const SelftestOptions& opt) {
  Suite s("semigroup-structure");
  for (const Dfa& d : {corpus::contains_aa(), corpus::contains_b(),
                       corpus::even_a(), corpus::up_ab()}) {
    auto [sg, m] = transition_semigroup(d);
    try {
      sg.validate();
      s.check(true, "");
    } catch (const Error& e) {
      s.check(false, e.what());
    }
    int omega = sg.omega();
    for (int x = 0; x < sg.size; ++x)
      s.check(sg.is_idempotent(sg.power(x, omega)),
              "omega power is not idempotent");
    for (int e : sg.idempotents())
      s.check(sg.mul(e, e) == e, "idempotent set is wrong");
    for (const auto& w : enumerate_words(d.alphabet, std::min(opt.max_len, 8)))
      s.check(accepts(d, w) == m.in_set("L", w),
              "recognition disagrees on " + word_string(w));
    for (int x = 0; x < sg.size; ++x)
      s.check(m.image(m.witness[x]) == x, "generation witness is wrong");
  }
  return s.result;
}

SuiteResult suite_semigroup_order(const SelftestOptions&) {
  Suite s("semigroup-syntactic-order");
  auto [sg, m] = syntactic_ordered_semigroup(corpus::up_ab());
  try {
    sg.validate();
    s.check(true, "");
  } catch (const Error& e) {
    s.check(false, e.what());
  }
  auto [pg, pm] = syntactic_ordered_semigroup(corpus::even_a());
  for (int x = 0; x < pg.size; ++x)
    for (int y = 0; y < pg.size; ++y)
      s.check(pg.le(x, y) == (x == y),
              "group-like language should have the equality order");
  auto [cg, cm] =
      syntactic_ordered_semigroup(strip_epsilon(complement(corpus::up_ab())));
  s.check(cg.size == sg.size, "complement changed the syntactic semigroup");
  return s.result;
}

int beta_fold(const WfContext& ctx, const WfWord& w, bool fault) {
  if (fault && w.size() > 1) return beta_eval(ctx, w[0]);
  return beta_eval(ctx, w);
}

SuiteResult suite_wf_encoding(const SelftestOptions& opt) {
  Suite s("wellformed-canonical-encoding");
  auto run = [&](const Dfa& l) {
    Reduction red = reduce(l, strip_epsilon(complement(l)));
    for (const auto& w :
         enumerate_words(l.alphabet, std::min(opt.max_len, 10))) {
      auto canon = canonical_wf(red.ctx, w);
      s.check(is_well_formed(canon.word),
              "encoding is not well formed for " + word_string(w));
      s.check(beta_fold(red.ctx, canon.word, opt.inject_beta_fault) ==
                  red.ctx.morphism.image(w),
              "beta of the encoding differs from the word image on " +
                  word_string(w));
      Word tokens;
      for (const auto& l2 : canon.word)
        tokens.push_back(wf_letter_token(l2));
      s.check(accepts(l, w) == accepts(red.lang, tokens),
              "membership transfer fails on " + word_string(w));
    }
  };
  run(corpus::contains_b());
  run(corpus::even_a());
  return s.result;
}

SuiteResult suite_wf_pigeonhole(const SelftestOptions& opt) {
  Suite s("wellformed-pigeonhole");
  auto run = [&](const Dfa& l) {
    Reduction red = reduce(l, strip_epsilon(complement(l)));
    int window = red.ctx.window;
    for (const auto& w :
         enumerate_words(l.alphabet, std::min(opt.max_len, 10))) {
      int len = static_cast<int>(w.size());
      for (int start = 1; start + window <= len; ++start) {
        bool found = false;
        for (int x = start; x <= start + window && !found; ++x)
          if (distinguished(red.ctx, w, x)) found = true;
        s.check(found, "window without a distinguished position in " +
                           word_string(w));
      }
    }
  };
  run(corpus::contains_b());
  run(corpus::even_a());
  return s.result;
}

SuiteResult suite_wf_locality(const SelftestOptions& opt) {
  Suite s("wellformed-locality");
  Reduction red =
      reduce(corpus::contains_b(),
             strip_epsilon(complement(corpus::contains_b())));
  std::mt19937 rng(opt.seed);
  const Alphabet& alphabet = red.ctx.morphism.alphabet;
  auto random_word = [&](int len) {
    Word w;
    for (int i = 0; i < len; ++i)
      w.push_back(alphabet.token(rng() % alphabet.size()));
    return w;
  };
  int window = red.ctx.locality;
  for (int trial = 0; trial < 200; ++trial) {
    int len1 = window + static_cast<int>(rng() % 6);
    int len2 = window + static_cast<int>(rng() % 6);
    Word w1 = random_word(len1), w2 = random_word(len2);
    int x = len1, y = len2;
    // force a shared infix of length 2|S| ending at the last positions
    for (int i = 0; i < window; ++i) w2[y - 1 - i] = w1[x - 1 - i];
    auto d1 = distinguished(red.ctx, w1, x);
    auto d2 = distinguished(red.ctx, w2, y);
    s.check(d1 == d2, "distinguished status is not local");
  }
  return s.result;
}

SuiteResult suite_wf_language_dfa(const SelftestOptions&) {
  Suite s("wellformed-language-automaton");
  auto run = [&](const Dfa& l, int max_letters) {
    Reduction red = reduce(l, strip_epsilon(complement(l)));
    const auto& f = red.ctx.morphism.accepting_sets.at("L");
    std::vector<WfLetter> letters = wf_alphabet(red.ctx);
    std::vector<WfWord> layer = {{}};
    for (int len = 1; len <= max_letters; ++len) {
      std::vector<WfWord> next;
      for (const auto& w : layer)
        for (const auto& l2 : letters) {
          WfWord w2 = w;
          w2.push_back(l2);
          Word tokens;
          for (const auto& l3 : w2) tokens.push_back(wf_letter_token(l3));
          bool expected = is_well_formed(w2) && f[beta_eval(red.ctx, w2)];
          s.check(accepts(red.lang, tokens) == expected,
                  "language automaton disagrees with the predicate");
          next.push_back(std::move(w2));
        }
      layer = std::move(next);
    }
  };
  run(corpus::even_a(), 4);
  run(corpus::contains_b(), 3);
  return s.result;
}

SuiteResult suite_wf_preimage(const SelftestOptions& opt) {
  Suite s("wellformed-preimage");
  Reduction red =
      reduce(corpus::contains_b(),
             strip_epsilon(complement(corpus::contains_b())));
  const auto& f = red.ctx.morphism.accepting_sets.at("L");
  std::vector<char> all(red.ctx.s().size, 1), none(red.ctx.s().size, 0);
  std::vector<Dfa> ks = {wf_language_dfa(red.ctx, f),
                         wf_language_dfa(red.ctx, all),
                         wf_language_dfa(red.ctx, none)};
  for (const Dfa& k : ks) {
    Dfa pre = preimage_dfa(red.ctx, k);
    s.check(!pre.accepting[pre.initial], "preimage accepts the empty word");
    for (const auto& w :
         enumerate_words(red.ctx.morphism.alphabet, std::min(opt.max_len, 8))) {
      Word tokens;
      for (const auto& l : canonical_wf(red.ctx, w).word)
        tokens.push_back(wf_letter_token(l));
      s.check(accepts(pre, w) == accepts(k, tokens),
              "preimage disagrees with the direct encoding on " +
                  word_string(w));
    }
  }
  return s.result;
}

SuiteResult suite_wf_expansion(const SelftestOptions& opt) {
  Suite s("wellformed-expansion");
  auto run = [&](const Dfa& l) {
    Reduction red = reduce(l, strip_epsilon(complement(l)));
    for (const auto& u : enumerate_well_formed(red.ctx, 4))
      for (int i = 1; i <= std::min(opt.max_k + 1, 4); ++i) {
        Word w = expand(red.ctx, u, i);
        s.check(red.ctx.morphism.image(w) == beta_eval(red.ctx, u),
                "expansion image differs from beta");
        Word tokens;
        for (const auto& l2 : u) tokens.push_back(wf_letter_token(l2));
        s.check(accepts(red.lang, tokens) == accepts(l, w),
                "expansion membership transfer fails");
      }
  };
  run(corpus::contains_b());
  run(corpus::even_a());
  return s.result;
}

SuiteResult suite_separation_soundness(const SelftestOptions&) {
  Suite s("separation-soundness");
  auto separable_cases = {
      std::make_pair(corpus::contains_aa(),
                     strip_epsilon(complement(corpus::contains_aa()))),
      std::make_pair(corpus::starts_a(), corpus::starts_b()),
      std::make_pair(corpus::up_ab(), corpus::just_b())};
  for (const auto& [l, lp] : separable_cases) {
    SeparationVerdict v = sigma1_plus_separates(l, lp);
    s.check(v.separable, "expected a separable verdict");
    if (v.separable) {
      s.check(includes(v.separator, l), "separator misses part of L");
      s.check(!is_empty_with_witness(intersect(v.separator, lp)).has_value(),
              "separator meets L'");
    }
  }
  SeparationVerdict v = sigma1_plus_separates(corpus::even_a(), corpus::odd_a());
  s.check(!v.separable, "parity languages should be inseparable");
  if (!v.separable) {
    GameLimits big{3, 128};
    for (int k = 1; k <= std::min(2, 3); ++k) {
      auto [u, up] = witness_pairs(v, k);
      s.check(accepts(corpus::even_a(), u), "witness left the language");
      s.check(accepts(corpus::odd_a(), up), "witness left the language");
      s.check(sigma_preorder(u, up, 1, k, true, big),
              "witness pair fails the game check");
    }
  }
  return s.result;
}

SuiteResult suite_separation_patterns(const SelftestOptions&) {
  Suite s("separation-patterns");
  auto basis = minimal_patterns(
      determinize_minimize(upward_closure(nfa_from_dfa(corpus::just_ab()))));
  s.check(basis.size() == 1 && basis[0] == Word{"a", "b"},
          "basis of the closure of {ab} is wrong");
  Nfa a_or_bb = parse_nfa(
      "alphabet a b\nstates 4\ninitial 0\naccepting 1 3\n"
      "trans 0 a 1\ntrans 0 b 2\ntrans 2 b 3\n");
  auto basis2 =
      minimal_patterns(determinize_minimize(upward_closure(a_or_bb)));
  s.check(basis2.size() == 2, "two-pattern basis has the wrong size");
  s.check(minimal_patterns(corpus::empty_lang()).empty(),
          "empty language should have an empty basis");
  bool threw = false;
  try {
    minimal_patterns(corpus::contains_aa());
  } catch (const NotUpwardClosed&) {
    threw = true;
  }
  s.check(threw, "non-closed language should be rejected");
  return s.result;
}

SuiteResult suite_separation_membership(const SelftestOptions&) {
  Suite s("separation-membership");
  s.check(membership_sigma1(corpus::up_ab()), "closure should be a member");
  s.check(!membership_sigma1(corpus::contains_aa()),
          "contains-aa is not upward closed");
  s.check(membership_sigma1_plus(corpus::contains_aa()),
          "contains-aa should be definable with successor");
  s.check(membership_sigma1_plus(corpus::starts_a()),
          "first-letter language should be definable with min");
  s.check(!membership_sigma1_plus(corpus::even_a()),
          "parity should not be definable");
  SeparationVerdict v1 = sigma1_separates(corpus::starts_a(), corpus::starts_b());
  s.check(!v1.separable, "prefix languages are not subword-separable");
  SeparationVerdict v2 = sigma1_separates(corpus::just_ab(), corpus::just_b());
  s.check(v2.separable, "{ab} should be subword-separable from {b}");
  if (v1.separable == false) {
    SeparationVerdict v3 =
        sigma1_plus_separates(corpus::just_ab(), corpus::just_b());
    s.check(v3.separable, "enriched logic is at least as strong");
  }
  s.check(transfer_membership(corpus::contains_b(),
                              [](const Dfa&) { return true; }),
          "transfer plumbing broke");
  s.check(bsigma1_profile_check(corpus::even_a(), corpus::even_a(), 2),
          "identical languages must share a profile");
  s.check(!bsigma1_profile_check(corpus::just_ab(), corpus::just_b(), 2),
          "distinct singletons share no length-2 profile");
  s.check(bsigma1_profile_check(corpus::even_a(), corpus::odd_a(), 2),
          "long parity words share profiles");
  return s.result;
}

SuiteResult suite_ef_basic(const SelftestOptions& opt) {
  Suite s("efgames-relations");
  Alphabet ab({"a", "b"});
  std::vector<Word> words = enumerate_words(ab, std::min(4, opt.max_len));
  std::mt19937 rng(opt.seed + 1);
  auto pick = [&]() { return words[rng() % words.size()]; };
  int kmax = std::min(opt.max_k, 3);
  for (int trial = 0; trial < 60; ++trial) {
    Word u = pick(), v = pick(), w = pick();
    for (int k = 0; k <= kmax; ++k) {
      s.check(fo2_equiv(u, u, k, true), "reflexivity fails");
      s.check(sigma_preorder(u, u, 1, k, true), "reflexivity fails");
      if (k > 0) {
        s.check(!fo2_equiv(u, v, k, false) || fo2_equiv(u, v, k - 1, false),
                "rank monotonicity fails");
        s.check(!sigma_preorder(u, v, 1, k, false) ||
                    sigma_preorder(u, v, 1, k - 1, false),
                "rank monotonicity fails");
      }
      if (sigma_preorder(u, v, 1, k, false) &&
          sigma_preorder(v, w, 1, k, false))
        s.check(sigma_preorder(u, w, 1, k, false), "transitivity fails");
    }
    if (is_scattered_subword(u, v))
      s.check(sigma_preorder(u, v, 1, kmax, false),
              "embedding should imply the preorder");
  }
  return s.result;
}

SuiteResult suite_ef_oracle(const SelftestOptions& opt) {
  Suite s("efgames-subword-oracle");
  Alphabet ab({"a", "b"});
  int n = std::min(opt.max_len, 5);
  int kmax = std::min(opt.max_k, 3);
  std::vector<Word> words = enumerate_words(ab, n);
  for (const auto& u : words)
    for (const auto& v : words)
      for (int k = 1; k <= kmax; ++k)
        s.check(sigma_preorder(u, v, 1, k, false) ==
                    subword_profile_preorder(u, v, k),
                "game disagrees with the subword oracle on " + word_string(u) +
                    " vs " + word_string(v));
  return s.result;
}

SuiteResult suite_ef_transfer_fo2(const SelftestOptions& opt) {
  Suite s("efgames-transfer-two-variable");
  Reduction red =
      reduce(corpus::contains_b(),
             strip_epsilon(complement(corpus::contains_b())));
  std::vector<WfWord> wf = enumerate_well_formed(red.ctx, 3);
  int kmax = std::min(opt.max_k, 2);
  GameLimits big{kmax, 64};
  for (const auto& u : wf)
    for (const auto& v : wf)
      for (int k = 1; k <= kmax; ++k) {
        Word tu, tv;
        for (const auto& l : u) tu.push_back(wf_letter_token(l));
        for (const auto& l : v) tv.push_back(wf_letter_token(l));
        if (!fo2_equiv(tu, tv, k, false, big)) continue;
        Word eu = expand(red.ctx, u, 2 * k), ev = expand(red.ctx, v, 2 * k);
        s.check(fo2_equiv(eu, ev, k, true, big),
                "two-variable transfer fails for " + wf_word_string(u) +
                    " vs " + wf_word_string(v));
      }
  return s.result;
}

SuiteResult suite_ef_transfer_sigma(const SelftestOptions& opt) {
  Suite s("efgames-transfer-alternation");
  Reduction red =
      reduce(corpus::contains_b(),
             strip_epsilon(complement(corpus::contains_b())));
  std::vector<WfWord> wf = enumerate_well_formed(red.ctx, 2);
  int kmax = std::min(opt.max_k, 2);
  GameLimits big{kmax, 64};
  for (const auto& u : wf)
    for (const auto& v : wf)
      for (int n = 1; n <= 2; ++n)
        for (int k = 1; k <= kmax; ++k) {
          Word tu, tv;
          for (const auto& l : u) tu.push_back(wf_letter_token(l));
          for (const auto& l : v) tv.push_back(wf_letter_token(l));
          if (!sigma_preorder(tu, tv, n, k, false, big)) continue;
          int exponent = 1 << (k + 1);
          Word eu = expand(red.ctx, u, exponent),
               ev = expand(red.ctx, v, exponent);
          s.check(sigma_preorder(eu, ev, n, k, true, big),
                  "alternation transfer fails for " + wf_word_string(u) +
                      " vs " + wf_word_string(v));
        }
  return s.result;
}

SuiteResult suite_algebra(const SelftestOptions& opt) {
  Suite s("algebra-constructions");
  for (const auto& inst : algebra_instances()) {
    ActionReport rep = validate_action(inst.sd.m, inst.sd.t, inst.sd.act);
    s.check(rep.valid, inst.name + ": invalid action");
    s.check(is_in_D(inst.sd.t), inst.name + ": suffix component not in class");
    try {
      inst.sd.product.validate();
      s.check(true, "");
    } catch (const Error& e) {
      s.check(false, inst.name + ": " + e.what());
    }
    for (int t = 0; t < inst.sd.t.size; ++t)
      for (int tp : inst.sd.t.idempotents())
        s.check(inst.sd.t.mul(t, tp) == tp,
                inst.name + ": suffix law fails");

    Reduction red = reduce(inst.l, inst.lp);
    GammaMorphism g = gamma_construction(inst.sd, inst.delta_letter, inst.f,
                                         red.ctx, inst.n, inst.inject);
    int omega = inst.sd.product.omega();
    auto delta = [&](const Word& w) {
      int acc = -1;
      for (const auto& tok : w) {
        int v = inst.delta_letter[red.ctx.morphism.alphabet.require(tok)];
        acc = acc < 0 ? v : inst.sd.product.mul(acc, v);
      }
      return acc;
    };
    std::vector<Word> reps = representatives(red.ctx);
    for (int e : red.ctx.idempotent_order) {
      int me_te = inst.sd.product.power(delta(reps[e]), omega);
      int me = inst.sd.first(me_te), te = inst.sd.second(me_te);
      s.check(inst.sd.m.mul(me, inst.sd.act.apply(te, me)) == me,
              inst.name + ": idempotent display law fails");
    }
    int nn = inst.n.size;
    for (const auto& w : enumerate_well_formed(red.ctx, 3)) {
      int mt = delta(expand(red.ctx, w, omega));
      int expected =
          inst.sd.first(mt) * nn + inst.inject[inst.sd.second(mt)];
      s.check(g.eval(w) == expected,
              inst.name + ": recast morphism disagrees on " +
                  wf_word_string(w));
    }
    DeltaEvaluator ev = delta_evaluator(g, red.ctx);
    int max_len = std::min(opt.max_len, 8);
    for (const auto& w :
         enumerate_words(red.ctx.morphism.alphabet, max_len)) {
      auto [f1, u] = ev.evaluate(w);
      WfLetter end = canonical_wf(red.ctx, u).word.back();
      int lhs = g.eval(canonical_wf(red.ctx, w).word);
      s.check(lhs == g.monoid.mul(f1, g.eval(end)),
              inst.name + ": suffix evaluation law fails on " +
                  word_string(w));
      // reference label computed on the full word
      int x = static_cast<int>(w.size());
      int ref;
      if (auto ex = distinguished(red.ctx, w, x)) {
        int y = -1, ey = -1;
        for (int p = x - 1; p >= 1 && y < 0; --p)
          if (auto e2 = distinguished(red.ctx, w, p)) {
            y = p;
            ey = *e2;
          }
        Word seg(w.begin() + (y < 0 ? 0 : y), w.end());
        int img = red.ctx.morphism.image(seg);
        ref = g.eval(y < 0 ? WfLetter::first(img, *ex)
                           : WfLetter::mid(ey, img, *ex));
      } else {
        ref = *g.monoid.identity;
      }
      s.check(ev.lab(w) == ref,
              inst.name + ": label is not suffix-local on " + word_string(w));
      s.check(ev.lab(w) == ev.lab(ev.rho(w)),
              inst.name + ": label truncation law fails");
      if (accepts(inst.l, w))
        s.check(ev.in_F(w), inst.name + ": evaluator rejects an L word");
      if (accepts(inst.lp, w))
        s.check(!ev.in_F(w), inst.name + ": evaluator accepts an L' word");
    }
  }
  return s.result;
}

SuiteResult suite_algebra_reference(const SelftestOptions& opt) {
  Suite s("algebra-reference-evaluator");
  Reduction red =
      reduce(corpus::contains_b(),
             strip_epsilon(complement(corpus::contains_b())));
  GammaMorphism g =
      beta_gamma(red.ctx, red.ctx.morphism.accepting_sets.at("L"));
  DeltaEvaluator ev = delta_evaluator(g, red.ctx);
  for (const auto& w : enumerate_words(red.ctx.morphism.alphabet,
                                       std::min(opt.max_len, 8))) {
    s.check(ev.in_F(w) == accepts(corpus::contains_b(), w),
            "reference evaluator disagrees with the language on " +
                word_string(w));
    if (w.size() >= 2) {
      Word v(w.begin(), w.begin() + w.size() / 2);
      Word rest(w.begin() + w.size() / 2, w.end());
      Word probe = ev.rho(v);
      s.check(ev.point(w, {}) == ev.evaluate(w).first,
              "point probe at the unit disagrees");
      int split = g.monoid.mul(ev.evaluate(v).first, ev.point(rest, probe));
      s.check(split == ev.evaluate(w).first,
              "pointwise product law fails on " + word_string(w));
    }
  }
  return s.result;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt) {
  std::vector<SuiteResult> out;
  out.push_back(suite_automata_boolean(opt));
  out.push_back(suite_automata_closure(opt));
  out.push_back(suite_automata_minimize(opt));
  out.push_back(suite_automata_includes(opt));
  out.push_back(suite_semigroup(opt));
  out.push_back(suite_semigroup_order(opt));
  out.push_back(suite_wf_encoding(opt));
  out.push_back(suite_wf_pigeonhole(opt));
  out.push_back(suite_wf_locality(opt));
  out.push_back(suite_wf_language_dfa(opt));
  out.push_back(suite_wf_preimage(opt));
  out.push_back(suite_wf_expansion(opt));
  out.push_back(suite_separation_soundness(opt));
  out.push_back(suite_separation_patterns(opt));
  out.push_back(suite_separation_membership(opt));
  out.push_back(suite_ef_basic(opt));
  out.push_back(suite_ef_oracle(opt));
  out.push_back(suite_ef_transfer_fo2(opt));
  out.push_back(suite_ef_transfer_sigma(opt));
  out.push_back(suite_algebra(opt));
  out.push_back(suite_algebra_reference(opt));
  return out;
}

}  // namespace wfsep
