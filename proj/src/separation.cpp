#include "wfsep/separation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wfsep {

Reduction reduce(const Dfa& l, const Dfa& lp) {
  auto [s, m] = product_recognizer(l, lp);
  (void)s;
  Reduction r{make_context(std::move(m)), {}, {}};
  r.lang = wf_language_dfa(r.ctx, r.ctx.morphism.accepting_sets.at("L"));
  r.lang_p = wf_language_dfa(r.ctx, r.ctx.morphism.accepting_sets.at("Lp"));
  return r;
}

namespace {

void require_no_epsilon(const Dfa& d) {
  if (d.accepting[d.initial])
    throw EpsilonAccepted("language must not contain the empty word");
}

/// NFA of all scattered subwords of w (including the empty word).
Nfa subword_nfa(const Alphabet& alphabet, const Word& w) {
  Nfa n;
  n.alphabet = alphabet;
  n.num_states = static_cast<int>(w.size()) + 1;
  n.initials = {0};
  n.accepting.assign(n.num_states, 1);
  for (int i = 0; i < n.num_states; ++i)
    for (int j = i; j + 1 < n.num_states; ++j)
      n.transitions.emplace_back(i, alphabet.require(w[j]), j + 1);
  return n;
}

}  // namespace

Word embedded_subword_witness(const Dfa& lang, const Word& w) {
  Nfa sub = subword_nfa(lang.alphabet, w);
  auto hit = is_empty_with_witness(
      intersect(determinize_minimize(sub), lang));
  if (!hit)
    throw Error("no embedded witness; inseparability data is inconsistent");
  return *hit;
}

SeparationVerdict sigma1_separates(const Dfa& l, const Dfa& lp) {
  if (!(l.alphabet == lp.alphabet)) throw AlphabetMismatch("alphabet mismatch");
  require_no_epsilon(l);
  require_no_epsilon(lp);
  SeparationVerdict v;
  v.logic = "sigma1";
  Dfa closure = determinize_minimize(upward_closure(nfa_from_dfa(l)));
  auto overlap = is_empty_with_witness(intersect(closure, lp));
  if (!overlap) {
    v.separable = true;
    v.separator = closure;
    return v;
  }
  v.separable = false;
  v.witness = *overlap;
  return v;
}

SeparationVerdict sigma1_plus_separates(const Dfa& l, const Dfa& lp) {
  Reduction red = reduce(l, lp);
  SeparationVerdict inner = sigma1_separates(red.lang, red.lang_p);
  SeparationVerdict v;
  v.logic = "sigma1plus";
  if (inner.separable) {
    Dfa sep = determinize_minimize(
        nfa_from_dfa(preimage_dfa(red.ctx, inner.separator)));
    if (!includes(sep, l) ||
        is_empty_with_witness(intersect(sep, lp)).has_value())
      throw Error("separator failed exact verification");
    v.separable = true;
    v.separator = sep;
    return v;
  }
  v.separable = false;
  auto ctx = std::make_shared<WfContext>(red.ctx);
  v.ctx = ctx;
  for (const auto& tok : inner.witness)
    v.wf_witness.push_back(parse_wf_letter(*ctx, tok));
  Word embedded = embedded_subword_witness(red.lang, inner.witness);
  for (const auto& tok : embedded)
    v.wf_witness_l.push_back(parse_wf_letter(*ctx, tok));
  return v;
}

bool membership_sigma1(const Dfa& l) {
  require_no_epsilon(l);
  Dfa closure = determinize_minimize(upward_closure(nfa_from_dfa(l)));
  return includes(l, closure);
}

bool membership_sigma1_plus(const Dfa& l) {
  require_no_epsilon(l);
  return sigma1_plus_separates(l, strip_epsilon(complement(l))).separable;
}

bool transfer_membership(const Dfa& l,
                         const std::function<bool(const Dfa&)>& base_decider) {
  require_no_epsilon(l);
  Reduction red = reduce(l, strip_epsilon(complement(l)));
  return base_decider(red.lang);
}

std::vector<Word> minimal_patterns(const Dfa& u) {
  if (!membership_sigma1(u))
    throw NotUpwardClosed("language is not upward closed");
  Dfa target = determinize_minimize(nfa_from_dfa(u));
  std::vector<Word> kept;
  auto closure_of_kept = [&]() {
    Nfa all;
    all.alphabet = target.alphabet;
    all.num_states = 0;
    for (const auto& p : kept) {
      int base = all.num_states;
      all.num_states += static_cast<int>(p.size()) + 1;
      all.initials.push_back(base);
      all.accepting.resize(all.num_states, 0);
      all.accepting[all.num_states - 1] = 1;
      for (size_t i = 0; i < p.size(); ++i)
        all.transitions.emplace_back(base + i, all.alphabet.require(p[i]),
                                     base + i + 1);
      for (int q = base; q < all.num_states; ++q)
        for (int a = 0; a < all.alphabet.size(); ++a)
          all.transitions.emplace_back(q, a, q);
    }
    return determinize_minimize(all);
  };
  if (is_empty_with_witness(target) == std::nullopt) return kept;
  // a subword-minimal accepted word never repeats a state, so its length is
  // bounded by the state count
  for (int len = 1; len <= target.num_states; ++len) {
    std::vector<std::pair<Word, int>> layer = {{Word{}, target.initial}};
    for (int step = 0; step < len; ++step) {
      std::vector<std::pair<Word, int>> next;
      for (auto& [w, q] : layer)
        for (int a = 0; a < target.alphabet.size(); ++a) {
          Word w2 = w;
          w2.push_back(target.alphabet.token(a));
          next.emplace_back(std::move(w2), target.next(q, a));
        }
      layer = std::move(next);
    }
    for (auto& [w, q] : layer) {
      if (!target.accepting[q]) continue;
      bool dominated = false;
      for (const auto& p : kept)
        if (is_scattered_subword(p, w)) {
          dominated = true;
          break;
        }
      if (!dominated) kept.push_back(w);
    }
    if (!kept.empty() && equivalent(closure_of_kept(), target)) return kept;
  }
  if (!equivalent(closure_of_kept(), target))
    throw Error("pattern basis search did not converge");
  return kept;
}

std::pair<Word, Word> witness_pairs(const SeparationVerdict& v, int k) {
  if (v.separable) throw IsSeparable("verdict carries no witness data");
  if (!v.ctx) throw Error("verdict carries no expansion context");
  int exponent = 1 << (k + 1);
  return {expand(*v.ctx, v.wf_witness_l, exponent),
          expand(*v.ctx, v.wf_witness, exponent)};
}

namespace {

using Profile = std::set<Word>;  // nonempty subwords; the empty word implicit

Profile profile_step(const Profile& p, const Symbol& a, int k) {
  Profile out = p;
  out.insert({a});
  for (const auto& v : p)
    if (static_cast<int>(v.size()) < k) {
      Word w = v;
      w.push_back(a);
      out.insert(std::move(w));
    }
  return out;
}

std::set<Profile> realized_profiles(const Dfa& d, int k) {
  std::set<std::pair<Profile, int>> seen;
  std::vector<std::pair<Profile, int>> frontier = {{Profile{}, d.initial}};
  seen.insert(frontier[0]);
  std::set<Profile> out;
  while (!frontier.empty()) {
    std::vector<std::pair<Profile, int>> next;
    for (auto& [p, q] : frontier) {
      if (d.accepting[q]) out.insert(p);
      for (int a = 0; a < d.alphabet.size(); ++a) {
        auto item = std::make_pair(profile_step(p, d.alphabet.token(a), k),
                                   d.next(q, a));
        if (seen.insert(item).second) next.push_back(std::move(item));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

bool bsigma1_profile_check(const Dfa& l, const Dfa& lp, int k, int max_k) {
  if (k > max_k) throw BoundExceeded("profile length bound exceeded");
  if (!(l.alphabet == lp.alphabet)) throw AlphabetMismatch("alphabet mismatch");
  std::set<Profile> a = realized_profiles(l, k);
  std::set<Profile> b = realized_profiles(lp, k);
  for (const auto& p : a)
    if (b.count(p)) return true;
  return false;
}

}  // namespace wfsep
