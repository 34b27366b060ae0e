// Acceptance battery: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "wfsep/selftest.hpp"

using namespace wfsep;

namespace {

int failures = 0;

void criterion(int number, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string note;
  try {
    pass = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << "CRITERION " << number << ' ' << (pass ? "PASS" : "FAIL")
            << " [" << ms << " ms]" << note << std::endl;
  if (!pass) ++failures;
}

WfContext flag_context() {
  return make_context(transition_semigroup(corpus::contains_b()).second);
}

WfContext parity_context() {
  return make_context(transition_semigroup(corpus::even_a()).second);
}

Word tokens_of(const WfWord& w) {
  Word out;
  for (const auto& l : w) out.push_back(wf_letter_token(l));
  return out;
}

bool encoding_sweep() {
  for (WfContext ctx : {flag_context(), parity_context()}) {
    for (const auto& w : enumerate_words(ctx.morphism.alphabet, 10)) {
      CanonicalResult r = canonical_wf(ctx, w);
      if (!is_well_formed(r.word)) return false;
      if (beta_eval(ctx, r.word) != ctx.morphism.image(w)) return false;
    }
  }
  return true;
}

bool pigeonhole_sweep() {
  for (WfContext ctx : {flag_context(), parity_context()}) {
    for (const auto& w : enumerate_words(ctx.morphism.alphabet, 10)) {
      int len = static_cast<int>(w.size());
      for (int start = 1; start + ctx.window <= len; ++start) {
        bool found = false;
        for (int x = start; x <= start + ctx.window && !found; ++x)
          if (distinguished(ctx, w, x)) found = true;
        if (!found) return false;
      }
    }
  }
  return true;
}

bool expansion_sweep() {
  auto langs = {corpus::contains_b(), corpus::even_a()};
  for (const Dfa& l : langs) {
    Reduction red = reduce(l, strip_epsilon(complement(l)));
    for (const auto& u : enumerate_well_formed(red.ctx, 4))
      for (int i = 1; i <= 4; ++i) {
        Word w = expand(red.ctx, u, i);
        if (red.ctx.morphism.image(w) != beta_eval(red.ctx, u)) return false;
        if (accepts(red.lang, tokens_of(u)) != accepts(l, w)) return false;
      }
  }
  return true;
}

bool preimage_sweep() {
  Reduction red = reduce(corpus::contains_b(),
                         strip_epsilon(complement(corpus::contains_b())));
  std::vector<char> all(red.ctx.s().size, 1), none(red.ctx.s().size, 0);
  std::vector<Dfa> ks = {red.lang, wf_language_dfa(red.ctx, all),
                         wf_language_dfa(red.ctx, none)};
  for (const Dfa& k : ks) {
    Dfa pre = preimage_dfa(red.ctx, k);
    for (const auto& w : enumerate_words(red.ctx.morphism.alphabet, 8))
      if (accepts(pre, w) !=
          accepts(k, tokens_of(canonical_wf(red.ctx, w).word)))
        return false;
  }
  return true;
}

bool separable_corpus() {
  auto cases = {
      std::make_pair(corpus::contains_aa(),
                     strip_epsilon(complement(corpus::contains_aa()))),
      std::make_pair(corpus::starts_a(), corpus::starts_b()),
      std::make_pair(corpus::up_ab(), corpus::just_b())};
  for (const auto& [l, lp] : cases) {
    SeparationVerdict v = sigma1_plus_separates(l, lp);
    if (!v.separable) return false;
    if (!includes(v.separator, l)) return false;
    if (is_empty_with_witness(intersect(v.separator, lp))) return false;
  }
  return true;
}

bool inseparable_parity() {
  SeparationVerdict v = sigma1_plus_separates(corpus::even_a(), corpus::odd_a());
  if (v.separable) return false;
  GameLimits limits{4, 256};
  for (int k = 1; k <= 3; ++k) {
    auto [u, up] = witness_pairs(v, k);
    if (!accepts(corpus::even_a(), u)) return false;
    if (!accepts(corpus::odd_a(), up)) return false;
    if (!sigma_preorder(u, up, 1, k, true, limits)) return false;
  }
  return true;
}

bool fo2_transfer_sweep() {
  WfContext ctx = flag_context();
  std::vector<WfWord> wf = enumerate_well_formed(ctx, 3);
  GameLimits limits{2, 64};
  for (const auto& u : wf)
    for (const auto& v : wf)
      for (int k = 1; k <= 2; ++k) {
        if (!fo2_equiv(tokens_of(u), tokens_of(v), k, false, limits)) continue;
        if (!fo2_equiv(expand(ctx, u, 2 * k), expand(ctx, v, 2 * k), k, true,
                       limits))
          return false;
      }
  return true;
}

bool sigma_transfer_sweep() {
  WfContext ctx = flag_context();
  std::vector<WfWord> wf = enumerate_well_formed(ctx, 3);
  GameLimits limits{2, 64};
  for (const auto& u : wf)
    for (const auto& v : wf)
      for (int n = 1; n <= 2; ++n)
        for (int k = 1; k <= 2; ++k) {
          if (!sigma_preorder(tokens_of(u), tokens_of(v), n, k, false, limits))
            continue;
          int exponent = 1 << (k + 1);
          if (!sigma_preorder(expand(ctx, u, exponent),
                              expand(ctx, v, exponent), n, k, true, limits))
            return false;
        }
  return true;
}

bool oracle_agreement() {
  auto words = enumerate_words(Alphabet({"a", "b"}), 6);
  for (const auto& u : words)
    for (const auto& v : words)
      for (int k = 1; k <= 3; ++k)
        if (sigma_preorder(u, v, 1, k, false) !=
            subword_profile_preorder(u, v, k))
          return false;
  return true;
}

bool algebra_battery() {
  for (const auto& inst : algebra_instances()) {
    if (!validate_action(inst.sd.m, inst.sd.t, inst.sd.act).valid) return false;
    inst.sd.product.validate();
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
    // recast morphism equality on all well-formed words of <= 3 letters
    int nn = inst.n.size;
    for (const auto& w : enumerate_well_formed(red.ctx, 3)) {
      int mt = delta(expand(red.ctx, w, omega));
      if (g.eval(w) != inst.sd.first(mt) * nn + inst.inject[inst.sd.second(mt)])
        return false;
    }
    // idempotent display law
    std::vector<Word> reps = representatives(red.ctx);
    for (int e : red.ctx.idempotent_order) {
      int met = inst.sd.product.power(delta(reps[e]), omega);
      int me = inst.sd.first(met), te = inst.sd.second(met);
      if (inst.sd.m.mul(me, inst.sd.act.apply(te, me)) != me) return false;
    }
    // suffix evaluation law and label locality on all |w| <= 8
    DeltaEvaluator ev = delta_evaluator(g, red.ctx);
    for (const auto& w : enumerate_words(red.ctx.morphism.alphabet, 8)) {
      auto [f1, u] = ev.evaluate(w);
      WfLetter end = canonical_wf(red.ctx, u).word.back();
      if (g.eval(canonical_wf(red.ctx, w).word) !=
          g.monoid.mul(f1, g.eval(end)))
        return false;
      if (ev.lab(w) != ev.lab(ev.rho(w))) return false;
    }
  }
  return true;
}

bool regressions() {
  return !membership_sigma1(corpus::contains_aa()) &&
         membership_sigma1_plus(corpus::contains_aa()) &&
         membership_sigma1_plus(corpus::starts_a()) &&
         !membership_sigma1_plus(corpus::even_a());
}

}  // namespace

int main() {
  criterion(1, encoding_sweep);
  criterion(2, pigeonhole_sweep);
  criterion(3, expansion_sweep);
  criterion(4, preimage_sweep);
  criterion(5, separable_corpus);
  criterion(6, inseparable_parity);
  criterion(7, fo2_transfer_sweep);
  criterion(8, sigma_transfer_sweep);
  criterion(9, oracle_agreement);
  criterion(10, algebra_battery);
  criterion(11, regressions);
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
