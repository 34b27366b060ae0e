#include "wfsep/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace wfsep {

Alphabet::Alphabet(std::vector<Symbol> tokens) : tokens_(std::move(tokens)) {
  for (int i = 0; i < static_cast<int>(tokens_.size()); ++i) {
    if (tokens_[i].empty()) throw MalformedInput("empty alphabet token");
    if (!index_.emplace(tokens_[i], i).second)
      throw MalformedInput("duplicate alphabet token: " + tokens_[i]);
  }
}

int Alphabet::index_of(const Symbol& tok) const {
  auto it = index_.find(tok);
  return it == index_.end() ? -1 : it->second;
}

int Alphabet::require(const Symbol& tok) const {
  int i = index_of(tok);
  if (i < 0) throw UnknownSymbol("unknown symbol: " + tok);
  return i;
}

int Dfa::run(int q, const Word& w) const {
  for (const auto& tok : w) q = next(q, alphabet.require(tok));
  return q;
}

// --- codec --------------------------------------------------------------

namespace {

std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

int parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw MalformedInput(std::string("bad ") + what + ": " + s);
  }
}

Nfa parse_automaton(const std::string& text) {
  Nfa n;
  bool saw_alphabet = false, saw_states = false, saw_initial = false,
       saw_accepting = false;
  std::vector<std::tuple<int, int, int>> trans;
  for (const auto& toks : tokenize_lines(text)) {
    const std::string& key = toks[0];
    if (key == "alphabet") {
      n.alphabet = Alphabet(std::vector<Symbol>(toks.begin() + 1, toks.end()));
      saw_alphabet = true;
    } else if (key == "states") {
      if (toks.size() != 2) throw MalformedInput("states wants one count");
      n.num_states = parse_int(toks[1], "state count");
      saw_states = true;
    } else if (key == "initial") {
      for (size_t i = 1; i < toks.size(); ++i)
        n.initials.push_back(parse_int(toks[i], "state"));
      saw_initial = true;
    } else if (key == "accepting") {
      for (size_t i = 1; i < toks.size(); ++i) {
        int q = parse_int(toks[i], "state");
        if (static_cast<size_t>(q) >= n.accepting.size())
          n.accepting.resize(q + 1, 0);
        n.accepting[q] = 1;
      }
      saw_accepting = true;
    } else if (key == "trans") {
      if (toks.size() != 4) throw MalformedInput("trans wants: from tok to");
      if (!saw_alphabet) throw MalformedInput("trans before alphabet");
      int from = parse_int(toks[1], "state");
      int sym = n.alphabet.require(toks[2]);
      int to = parse_int(toks[3], "state");
      trans.emplace_back(from, sym, to);
    } else {
      throw MalformedInput("unknown directive: " + key);
    }
  }
  if (!saw_alphabet) throw MalformedInput("missing alphabet section");
  if (!saw_states) throw MalformedInput("missing states section");
  if (!saw_initial) throw MalformedInput("missing initial section");
  if (!saw_accepting) throw MalformedInput("missing accepting section");
  n.accepting.resize(n.num_states, 0);
  if (static_cast<int>(n.accepting.size()) > n.num_states)
    throw MalformedInput("accepting state out of range");
  auto check = [&](int q) {
    if (q < 0 || q >= n.num_states)
      throw MalformedInput("state out of range: " + std::to_string(q));
  };
  for (int q : n.initials) check(q);
  for (auto& [f, s, t] : trans) {
    check(f);
    check(t);
  }
  n.transitions = std::move(trans);
  return n;
}

}  // namespace

Nfa parse_nfa(const std::string& text) { return parse_automaton(text); }

Dfa parse_dfa(const std::string& text) {
  Nfa n = parse_automaton(text);
  if (n.initials.size() != 1)
    throw MalformedInput("DFA wants exactly one initial state");
  Dfa d;
  d.alphabet = n.alphabet;
  d.num_states = n.num_states;
  d.initial = n.initials[0];
  d.accepting = n.accepting;
  d.trans.assign(static_cast<size_t>(d.num_states) * d.alphabet.size(), -1);
  for (auto& [f, s, t] : n.transitions) {
    int& slot = d.next_ref(f, s);
    if (slot != -1)
      throw MalformedInput("duplicate transition from state " +
                           std::to_string(f) + " on " + d.alphabet.token(s));
    slot = t;
  }
  for (int q = 0; q < d.num_states; ++q)
    for (int s = 0; s < d.alphabet.size(); ++s)
      if (d.next(q, s) == -1)
        throw MalformedInput("missing transition from state " +
                             std::to_string(q) + " on " + d.alphabet.token(s));
  return d;
}

Dfa canonicalize(const Dfa& d) {
  std::vector<int> renum(d.num_states, -1);
  std::vector<int> order;
  renum[d.initial] = 0;
  order.push_back(d.initial);
  for (size_t i = 0; i < order.size(); ++i)
    for (int s = 0; s < d.alphabet.size(); ++s) {
      int t = d.next(order[i], s);
      if (renum[t] < 0) {
        renum[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  Dfa out;
  out.alphabet = d.alphabet;
  out.num_states = static_cast<int>(order.size());
  out.initial = 0;
  out.accepting.assign(out.num_states, 0);
  out.trans.assign(static_cast<size_t>(out.num_states) * d.alphabet.size(), 0);
  for (int q = 0; q < out.num_states; ++q) {
    out.accepting[q] = d.accepting[order[q]];
    for (int s = 0; s < d.alphabet.size(); ++s)
      out.next_ref(q, s) = renum[d.next(order[q], s)];
  }
  return out;
}

std::string serialize_dfa(const Dfa& d) {
  Dfa c = canonicalize(d);
  std::ostringstream out;
  out << "alphabet";
  for (const auto& t : c.alphabet.tokens()) out << ' ' << t;
  out << "\nstates " << c.num_states << "\ninitial " << c.initial
      << "\naccepting";
  for (int q = 0; q < c.num_states; ++q)
    if (c.accepting[q]) out << ' ' << q;
  out << '\n';
  for (int q = 0; q < c.num_states; ++q)
    for (int s = 0; s < c.alphabet.size(); ++s)
      out << "trans " << q << ' ' << c.alphabet.token(s) << ' ' << c.next(q, s)
          << '\n';
  return out.str();
}

std::string serialize_nfa(const Nfa& n) {
  // BFS renumbering from the initial states, symbols in declaration order.
  std::vector<int> renum(n.num_states, -1);
  std::vector<int> order;
  for (int q : n.initials)
    if (renum[q] < 0) {
      renum[q] = static_cast<int>(order.size());
      order.push_back(q);
    }
  std::vector<std::vector<std::pair<int, int>>> post(n.num_states);
  for (auto& [f, s, t] : n.transitions) post[f].emplace_back(s, t);
  for (auto& p : post) std::sort(p.begin(), p.end());
  for (size_t i = 0; i < order.size(); ++i)
    for (auto& [s, t] : post[order[i]])
      if (renum[t] < 0) {
        renum[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
  std::ostringstream out;
  out << "alphabet";
  for (const auto& t : n.alphabet.tokens()) out << ' ' << t;
  out << "\nstates " << order.size() << "\ninitial";
  std::set<int> inits;
  for (int q : n.initials) inits.insert(renum[q]);
  for (int q : inits) out << ' ' << q;
  out << "\naccepting";
  for (size_t q = 0; q < order.size(); ++q)
    if (n.accepting[order[q]]) out << ' ' << q;
  out << '\n';
  std::set<std::tuple<int, int, int>> lines;
  for (auto& [f, s, t] : n.transitions)
    if (renum[f] >= 0 && renum[t] >= 0) lines.insert({renum[f], s, renum[t]});
  for (auto& [f, s, t] : lines)
    out << "trans " << f << ' ' << n.alphabet.token(s) << ' ' << t << '\n';
  return out.str();
}

// --- language algebra ---------------------------------------------------

Dfa complement(const Dfa& d) {
  Dfa out = d;
  for (auto& a : out.accepting) a = !a;
  return out;
}

namespace {

Dfa product(const Dfa& x, const Dfa& y, bool conj) {
  if (!(x.alphabet == y.alphabet)) throw AlphabetMismatch("alphabet mismatch");
  int na = x.alphabet.size();
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> states;
  auto intern = [&](int a, int b) {
    auto [it, fresh] = id.emplace(std::make_pair(a, b), states.size());
    if (fresh) states.emplace_back(a, b);
    return it->second;
  };
  Dfa out;
  out.alphabet = x.alphabet;
  out.initial = intern(x.initial, y.initial);
  for (size_t i = 0; i < states.size(); ++i) {
    auto [a, b] = states[i];
    for (int s = 0; s < na; ++s) {
      int t = intern(x.next(a, s), y.next(b, s));
      (void)t;
    }
  }
  out.num_states = static_cast<int>(states.size());
  out.accepting.assign(out.num_states, 0);
  out.trans.assign(static_cast<size_t>(out.num_states) * na, 0);
  for (int q = 0; q < out.num_states; ++q) {
    auto [a, b] = states[q];
    out.accepting[q] = conj ? (x.accepting[a] && y.accepting[b])
                            : (x.accepting[a] || y.accepting[b]);
    for (int s = 0; s < na; ++s)
      out.next_ref(q, s) = id.at({x.next(a, s), y.next(b, s)});
  }
  return out;
}

}  // namespace

Dfa intersect(const Dfa& x, const Dfa& y) { return product(x, y, true); }
Dfa unite(const Dfa& x, const Dfa& y) { return product(x, y, false); }

bool includes(const Dfa& x, const Dfa& y) {
  return !is_empty_with_witness(intersect(complement(x), y)).has_value();
}

bool equivalent(const Dfa& x, const Dfa& y) {
  return includes(x, y) && includes(y, x);
}

bool accepts(const Dfa& d, const Word& w) {
  return d.accepting[d.run(d.initial, w)];
}

bool accepts(const Nfa& n, const Word& w) {
  std::vector<std::vector<std::vector<int>>> post(
      n.num_states, std::vector<std::vector<int>>(n.alphabet.size()));
  for (auto& [f, s, t] : n.transitions) post[f][s].push_back(t);
  std::set<int> cur(n.initials.begin(), n.initials.end());
  for (const auto& tok : w) {
    int s = n.alphabet.require(tok);
    std::set<int> nxt;
    for (int q : cur) nxt.insert(post[q][s].begin(), post[q][s].end());
    cur = std::move(nxt);
  }
  for (int q : cur)
    if (n.accepting[q]) return true;
  return false;
}

std::vector<Word> enumerate_accepted(const Dfa& d, int max_len) {
  std::vector<Word> out;
  // frontier of (word, state), grown one letter at a time in lex order
  std::vector<std::pair<Word, int>> layer = {{Word{}, d.initial}};
  if (d.accepting[d.initial]) out.push_back({});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<Word, int>> next;
    next.reserve(layer.size() * d.alphabet.size());
    for (auto& [w, q] : layer)
      for (int s = 0; s < d.alphabet.size(); ++s) {
        Word w2 = w;
        w2.push_back(d.alphabet.token(s));
        int q2 = d.next(q, s);
        if (d.accepting[q2]) out.push_back(w2);
        next.emplace_back(std::move(w2), q2);
      }
    layer = std::move(next);
  }
  return out;
}

std::optional<Word> is_empty_with_witness(const Nfa& n) {
  int na = n.alphabet.size();
  std::vector<std::vector<std::vector<int>>> post(
      n.num_states, std::vector<std::vector<int>>(na));
  std::vector<std::vector<std::vector<int>>> pre(
      n.num_states, std::vector<std::vector<int>>(na));
  for (auto& [f, s, t] : n.transitions) {
    post[f][s].push_back(t);
    pre[t][s].push_back(f);
  }
  // distance from each state to an accepting state
  const int INF = 1 << 30;
  std::vector<int> dist_acc(n.num_states, INF);
  std::deque<int> queue;
  for (int q = 0; q < n.num_states; ++q)
    if (n.accepting[q]) {
      dist_acc[q] = 0;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (int s = 0; s < na; ++s)
      for (int p : pre[q][s])
        if (dist_acc[p] > dist_acc[q] + 1) {
          dist_acc[p] = dist_acc[q] + 1;
          queue.push_back(p);
        }
  }
  int best = INF;
  for (int q : n.initials) best = std::min(best, dist_acc[q]);
  if (best == INF) return std::nullopt;
  // greedy lex-least word of that length
  Word w;
  std::set<int> cur(n.initials.begin(), n.initials.end());
  for (int remaining = best; remaining > 0; --remaining) {
    for (int s = 0; s < na; ++s) {
      std::set<int> nxt;
      for (int q : cur) nxt.insert(post[q][s].begin(), post[q][s].end());
      int m = INF;
      for (int q : nxt) m = std::min(m, dist_acc[q]);
      if (m == remaining - 1) {
        w.push_back(n.alphabet.token(s));
        cur = std::move(nxt);
        break;
      }
    }
  }
  return w;
}

std::optional<Word> is_empty_with_witness(const Dfa& d) {
  return is_empty_with_witness(nfa_from_dfa(d));
}

Nfa nfa_from_dfa(const Dfa& d) {
  Nfa n;
  n.alphabet = d.alphabet;
  n.num_states = d.num_states;
  n.initials = {d.initial};
  n.accepting = d.accepting;
  for (int q = 0; q < d.num_states; ++q)
    for (int s = 0; s < d.alphabet.size(); ++s)
      n.transitions.emplace_back(q, s, d.next(q, s));
  return n;
}

Dfa determinize_minimize(const Nfa& n) {
  int na = n.alphabet.size();
  std::vector<std::vector<std::vector<int>>> post(
      n.num_states, std::vector<std::vector<int>>(na));
  for (auto& [f, s, t] : n.transitions) post[f][s].push_back(t);
  // subset construction; the empty subset acts as the sink
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> ss) {
    auto [it, fresh] = id.emplace(std::move(ss), subsets.size());
    if (fresh) subsets.push_back(it->first);
    return it->second;
  };
  std::set<int> init_set(n.initials.begin(), n.initials.end());
  int init = intern(std::vector<int>(init_set.begin(), init_set.end()));
  std::vector<int> dtrans;
  std::vector<char> dacc;
  for (size_t i = 0; i < subsets.size(); ++i) {
    std::vector<int> ss = subsets[i];
    bool acc = false;
    for (int q : ss) acc = acc || n.accepting[q];
    dacc.push_back(acc);
    for (int s = 0; s < na; ++s) {
      std::set<int> nxt;
      for (int q : ss) nxt.insert(post[q][s].begin(), post[q][s].end());
      dtrans.push_back(intern(std::vector<int>(nxt.begin(), nxt.end())));
    }
  }
  int nd = static_cast<int>(subsets.size());
  // Moore refinement
  std::vector<int> cls(nd);
  for (int q = 0; q < nd; ++q) cls[q] = dacc[q] ? 1 : 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<int> next_cls(nd);
    for (int q = 0; q < nd; ++q) {
      std::vector<int> sig;
      sig.reserve(na + 1);
      sig.push_back(cls[q]);
      for (int s = 0; s < na; ++s) sig.push_back(cls[dtrans[q * na + s]]);
      auto [it, fresh] = sig_id.emplace(std::move(sig), sig_id.size());
      next_cls[q] = it->second;
    }
    bool stable = true;
    for (int q = 0; q < nd && stable; ++q)
      for (int p = q + 1; p < nd && stable; ++p)
        if ((cls[q] == cls[p]) != (next_cls[q] == next_cls[p])) stable = false;
    cls = std::move(next_cls);
    if (stable) break;
  }
  int nc = *std::max_element(cls.begin(), cls.end()) + 1;
  Dfa out;
  out.alphabet = n.alphabet;
  out.num_states = nc;
  out.initial = cls[init];
  out.accepting.assign(nc, 0);
  out.trans.assign(static_cast<size_t>(nc) * na, 0);
  for (int q = 0; q < nd; ++q) {
    out.accepting[cls[q]] = dacc[q];
    for (int s = 0; s < na; ++s)
      out.next_ref(cls[q], s) = cls[dtrans[q * na + s]];
  }
  return canonicalize(out);
}

Nfa upward_closure(const Nfa& n) {
  Nfa out = n;
  std::set<std::tuple<int, int, int>> have(out.transitions.begin(),
                                           out.transitions.end());
  for (int q = 0; q < out.num_states; ++q)
    for (int s = 0; s < out.alphabet.size(); ++s)
      if (!have.count({q, s, q})) out.transitions.emplace_back(q, s, q);
  return out;
}

Dfa strip_epsilon(const Dfa& d) {
  if (!d.accepting[d.initial]) return d;
  // fresh initial state without acceptance, same outgoing behavior
  Dfa out = d;
  out.num_states += 1;
  out.accepting.push_back(0);
  for (int s = 0; s < d.alphabet.size(); ++s)
    out.trans.push_back(d.next(d.initial, s));
  out.initial = out.num_states - 1;
  return determinize_minimize(nfa_from_dfa(out));
}

// --- word helpers -------------------------------------------------------

std::string word_string(const Word& w) {
  if (w.empty()) return "-";
  bool single = true;
  for (const auto& t : w) single = single && t.size() == 1;
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i && !single) out += ',';
    out += w[i];
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  if (text.empty() || text == "-") return w;
  if (text.find(',') != std::string::npos) {
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
      if (!cur.empty()) w.push_back(cur);
  } else {
    for (char c : text) w.push_back(std::string(1, c));
  }
  return w;
}

bool is_scattered_subword(const Word& u, const Word& w) {
  size_t i = 0;
  for (size_t j = 0; j < w.size() && i < u.size(); ++j)
    if (w[j] == u[i]) ++i;
  return i == u.size();
}

}  // namespace wfsep
