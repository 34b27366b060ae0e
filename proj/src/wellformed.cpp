#include "wfsep/wellformed.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace wfsep {

WfContext make_context(RecognizingMorphism m) {
  WfContext ctx;
  ctx.idempotent_order = m.target.idempotents();
  ctx.window = m.target.size;
  ctx.locality = 2 * m.target.size;
  ctx.morphism = std::move(m);
  return ctx;
}

std::vector<WfLetter> wf_alphabet(const WfContext& ctx) {
  int n = ctx.s().size;
  const auto& idem = ctx.idempotent_order;
  std::vector<WfLetter> out;
  for (int s = 0; s < n; ++s) out.push_back(WfLetter::single(s));
  for (int s = 0; s < n; ++s)
    for (int e : idem) out.push_back(WfLetter::first(s, e));
  for (int e : idem)
    for (int s = 0; s < n; ++s)
      for (int f : idem) out.push_back(WfLetter::mid(e, s, f));
  for (int e : idem)
    for (int s = 0; s < n; ++s) out.push_back(WfLetter::last(e, s));
  return out;
}

std::string wf_letter_token(const WfLetter& l) {
  std::ostringstream out;
  switch (l.kind) {
    case WfLetter::Kind::Single:
      out << "single:" << l.s;
      break;
    case WfLetter::Kind::First:
      out << "first:" << l.s << ':' << l.right;
      break;
    case WfLetter::Kind::Mid:
      out << "mid:" << l.left << ':' << l.s << ':' << l.right;
      break;
    case WfLetter::Kind::Last:
      out << "last:" << l.left << ':' << l.s;
      break;
  }
  return out.str();
}

WfLetter parse_wf_letter(const WfContext& ctx, const std::string& token) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(token);
  while (std::getline(in, cur, ':')) parts.push_back(cur);
  auto elem = [&](const std::string& t) {
    int v;
    try {
      v = std::stoi(t);
    } catch (const std::exception&) {
      throw MalformedInput("bad element index: " + t);
    }
    if (v < 0 || v >= ctx.s().size)
      throw MalformedInput("element index out of range: " + t);
    return v;
  };
  auto idem = [&](const std::string& t) {
    int v = elem(t);
    if (!ctx.is_idempotent(v))
      throw MalformedInput("not an idempotent: " + t);
    return v;
  };
  if (parts.size() == 2 && parts[0] == "single")
    return WfLetter::single(elem(parts[1]));
  if (parts.size() == 3 && parts[0] == "first")
    return WfLetter::first(elem(parts[1]), idem(parts[2]));
  if (parts.size() == 4 && parts[0] == "mid")
    return WfLetter::mid(idem(parts[1]), elem(parts[2]), idem(parts[3]));
  if (parts.size() == 3 && parts[0] == "last")
    return WfLetter::last(idem(parts[1]), elem(parts[2]));
  throw MalformedInput("bad letter token: " + token);
}

WfWord parse_wf_word(const WfContext& ctx, const std::string& text) {
  WfWord w;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) w.push_back(parse_wf_letter(ctx, cur));
  if (w.empty()) throw MalformedInput("empty well-formed word");
  return w;
}

std::string wf_word_string(const WfWord& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += wf_letter_token(w[i]);
  }
  return out;
}

int beta_eval(const WfContext& ctx, const WfLetter& l) {
  const auto& s = ctx.s();
  switch (l.kind) {
    case WfLetter::Kind::Single:
      return l.s;
    case WfLetter::Kind::First:
      return s.mul(l.s, l.right);
    case WfLetter::Kind::Mid:
      return s.mul(s.mul(l.left, l.s), l.right);
    case WfLetter::Kind::Last:
      return s.mul(l.left, l.s);
  }
  return -1;
}

int beta_eval(const WfContext& ctx, const WfWord& w) {
  if (w.empty()) throw MalformedInput("beta of the empty word");
  int acc = beta_eval(ctx, w[0]);
  for (size_t i = 1; i < w.size(); ++i)
    acc = ctx.s().mul(acc, beta_eval(ctx, w[i]));
  return acc;
}

bool is_well_formed(const WfWord& w) {
  if (w.empty()) return false;
  if (w.size() == 1) return w[0].kind == WfLetter::Kind::Single;
  if (w.front().kind != WfLetter::Kind::First) return false;
  if (w.back().kind != WfLetter::Kind::Last) return false;
  for (size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i].kind != WfLetter::Kind::Mid) return false;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].right != w[i + 1].left) return false;
  return true;
}

Dfa wf_language_dfa(const WfContext& ctx, const std::vector<char>& f) {
  const auto& sg = ctx.s();
  int n = sg.size;
  const auto& idem = ctx.idempotent_order;
  int ne = static_cast<int>(idem.size());
  std::vector<int> idem_pos(n, -1);
  for (int i = 0; i < ne; ++i) idem_pos[idem[i]] = i;
  std::vector<WfLetter> letters = wf_alphabet(ctx);
  std::vector<Symbol> tokens;
  for (const auto& l : letters) tokens.push_back(wf_letter_token(l));

  // states: 0 = start, 1 = dead, 2 + ei*n + m = open chain expecting junction
  // idempotent idem[ei] with running product m, 2 + ne*n + m = complete word
  // with product m
  const int start = 0, dead = 1;
  auto open_state = [&](int e, int m) { return 2 + idem_pos[e] * n + m; };
  auto done_state = [&](int m) { return 2 + ne * n + m; };
  Dfa d;
  d.alphabet = Alphabet(tokens);
  d.num_states = 2 + ne * n + n;
  d.initial = start;
  d.accepting.assign(d.num_states, 0);
  for (int m = 0; m < n; ++m) d.accepting[done_state(m)] = f[m];
  d.trans.assign(static_cast<size_t>(d.num_states) * d.alphabet.size(), dead);
  for (int a = 0; a < static_cast<int>(letters.size()); ++a) {
    const WfLetter& l = letters[a];
    int b = beta_eval(ctx, l);
    if (l.kind == WfLetter::Kind::Single)
      d.next_ref(start, a) = done_state(b);
    else if (l.kind == WfLetter::Kind::First)
      d.next_ref(start, a) = open_state(l.right, b);
    else
      for (int m = 0; m < n; ++m) {
        int q = open_state(l.left, m);
        int prod = sg.mul(m, b);
        d.next_ref(q, a) = l.kind == WfLetter::Kind::Mid
                               ? open_state(l.right, prod)
                               : done_state(prod);
      }
  }
  return d;
}

std::optional<int> distinguished(const WfContext& ctx, const Word& w, int x) {
  const auto& m = ctx.morphism;
  int lo = std::max(1, x - ctx.window + 1);
  int img = m.letter_image[m.alphabet.require(w[lo - 1])];
  for (int i = lo + 1; i <= x; ++i)
    img = ctx.s().mul(img, m.letter_image[m.alphabet.require(w[i - 1])]);
  for (int e : ctx.idempotent_order)
    if (ctx.s().mul(img, e) == img) return e;
  return std::nullopt;
}

CanonicalResult canonical_wf(const WfContext& ctx, const Word& w) {
  if (w.empty()) throw MalformedInput("canonical encoding of the empty word");
  CanonicalResult r;
  int len = static_cast<int>(w.size());
  for (int x = 1; x < len; ++x)
    if (auto e = distinguished(ctx, w, x)) {
      r.positions.push_back(x);
      r.idempotents.push_back(*e);
    }
  r.positions.push_back(len);
  const auto& m = ctx.morphism;
  auto seg_image = [&](int from, int to) {  // 1-based inclusive
    int img = m.letter_image[m.alphabet.require(w[from - 1])];
    for (int i = from + 1; i <= to; ++i)
      img = ctx.s().mul(img, m.letter_image[m.alphabet.require(w[i - 1])]);
    return img;
  };
  int n = static_cast<int>(r.idempotents.size());
  if (n == 0) {
    r.word.push_back(WfLetter::single(seg_image(1, len)));
    return r;
  }
  r.word.push_back(
      WfLetter::first(seg_image(1, r.positions[0]), r.idempotents[0]));
  for (int i = 1; i < n; ++i)
    r.word.push_back(WfLetter::mid(
        r.idempotents[i - 1], seg_image(r.positions[i - 1] + 1, r.positions[i]),
        r.idempotents[i]));
  r.word.push_back(WfLetter::last(
      r.idempotents[n - 1], seg_image(r.positions[n - 1] + 1, len)));
  return r;
}

std::vector<Word> representatives(const WfContext& ctx) {
  return ctx.morphism.witness;
}

Word expand(const WfContext& ctx, const WfWord& u, int i) {
  if (!is_well_formed(u)) throw NotWellFormed("word is not well formed");
  std::vector<Word> reps = representatives(ctx);
  Word out;
  auto append = [&](const Word& w, int times) {
    for (int t = 0; t < times; ++t) out.insert(out.end(), w.begin(), w.end());
  };
  append(reps[u[0].s], 1);
  for (size_t j = 1; j < u.size(); ++j) {
    append(reps[u[j].left], i);
    append(reps[u[j].s], 1);
  }
  return out;
}

namespace {

struct SimState {
  std::vector<int> suffix;  // suffix images, oldest window first
  int pending = -1;         // idempotent at the current position, or -1
  int committed = -1;       // idempotent of the last committed position, or -1
  int segment = -1;         // running image of the open segment, -1 = empty
  int k_state = 0;
  bool started = false;

  auto tie() const {
    return std::tie(suffix, pending, committed, segment, k_state, started);
  }
  bool operator<(const SimState& o) const { return tie() < o.tie(); }
};

}  // namespace

Dfa preimage_dfa(const WfContext& ctx, const Dfa& k) {
  const auto& sg = ctx.s();
  const auto& m = ctx.morphism;
  std::vector<int> letter_sym;  // derived-alphabet letter -> K symbol index
  std::map<std::string, int> k_sym;
  for (int a = 0; a < k.alphabet.size(); ++a)
    k_sym[k.alphabet.token(a)] = a;
  auto k_index = [&](const WfLetter& l) {
    auto it = k_sym.find(wf_letter_token(l));
    if (it == k_sym.end())
      throw AlphabetMismatch("automaton alphabet does not cover: " +
                             wf_letter_token(l));
    return it->second;
  };

  auto least_absorbed = [&](int img) {
    for (int e : ctx.idempotent_order)
      if (sg.mul(img, e) == img) return e;
    return -1;
  };

  auto step = [&](const SimState& st, int a) {
    int sa = m.letter_image[a];
    SimState out = st;
    out.started = true;
    if (st.pending >= 0) {
      WfLetter emitted =
          st.committed < 0 ? WfLetter::first(st.segment, st.pending)
                           : WfLetter::mid(st.committed, st.segment, st.pending);
      out.k_state = k.next(st.k_state, k_index(emitted));
      out.committed = st.pending;
      out.segment = -1;
    }
    out.segment = out.segment < 0 ? sa : sg.mul(out.segment, sa);
    out.suffix.clear();
    for (int v : st.suffix) out.suffix.push_back(sg.mul(v, sa));
    out.suffix.push_back(sa);
    if (static_cast<int>(out.suffix.size()) > ctx.window)
      out.suffix.erase(out.suffix.begin());
    int e = least_absorbed(out.suffix.front());
    out.pending = e;
    return out;
  };
  auto is_accepting = [&](const SimState& st) {
    if (!st.started) return false;
    WfLetter final = st.committed < 0
                         ? WfLetter::single(st.segment)
                         : WfLetter::last(st.committed, st.segment);
    return k.accepting[k.next(st.k_state, k_index(final))] != 0;
  };

  std::map<SimState, int> id;
  std::vector<SimState> states;
  auto intern = [&](const SimState& st) {
    auto [it, fresh] = id.emplace(st, states.size());
    if (fresh) states.push_back(st);
    return it->second;
  };
  SimState init;
  init.k_state = k.initial;
  Dfa out;
  out.alphabet = m.alphabet;
  out.initial = intern(init);
  int na = m.alphabet.size();
  std::vector<int> trans;
  for (size_t q = 0; q < states.size(); ++q) {
    SimState cur = states[q];
    for (int a = 0; a < na; ++a) trans.push_back(intern(step(cur, a)));
  }
  out.num_states = static_cast<int>(states.size());
  out.trans = std::move(trans);
  out.accepting.resize(out.num_states);
  for (int q = 0; q < out.num_states; ++q)
    out.accepting[q] = is_accepting(states[q]);
  return out;
}

std::string serialize_context(const WfContext& ctx) {
  const RecognizingMorphism& m = ctx.morphism;
  std::ostringstream out;
  out << serialize_semigroup(m.target);
  out << "alphabet";
  for (const auto& tok : m.alphabet.tokens()) out << ' ' << tok;
  out << '\n';
  for (int a = 0; a < m.alphabet.size(); ++a)
    out << "letter " << m.alphabet.token(a) << ' ' << m.letter_image[a] << '\n';
  for (const auto& [name, f] : m.accepting_sets) {
    out << "accept " << name;
    for (int s = 0; s < m.target.size; ++s)
      if (f[s]) out << ' ' << s;
    out << '\n';
  }
  for (int s = 0; s < m.target.size; ++s) {
    out << "rep " << s;
    for (const auto& tok : m.witness[s]) out << ' ' << tok;
    out << '\n';
  }
  return out.str();
}

WfContext parse_context(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::ostringstream sg_text;
  RecognizingMorphism m;
  std::vector<std::pair<std::string, int>> letters;
  std::map<std::string, std::vector<int>> accepts;
  std::map<int, Word> reps;
  bool saw_alphabet = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "alphabet") {
      std::vector<Symbol> toks;
      for (Symbol t; ls >> t;) toks.push_back(t);
      if (toks.empty()) throw MalformedInput("empty alphabet");
      m.alphabet = Alphabet(std::move(toks));
      saw_alphabet = true;
    } else if (key == "letter") {
      std::string tok;
      int img;
      if (!(ls >> tok >> img)) throw MalformedInput("bad letter line");
      letters.emplace_back(tok, img);
    } else if (key == "accept") {
      std::string name;
      if (!(ls >> name)) throw MalformedInput("bad accept line");
      auto& set = accepts[name];
      for (int s; ls >> s;) set.push_back(s);
    } else if (key == "rep") {
      int s;
      if (!(ls >> s)) throw MalformedInput("bad rep line");
      Word w;
      for (Symbol t; ls >> t;) w.push_back(t);
      if (w.empty()) throw MalformedInput("empty rep word");
      reps[s] = std::move(w);
    } else {
      sg_text << line << '\n';
    }
  }
  m.target = parse_semigroup(sg_text.str());
  if (!saw_alphabet) throw MalformedInput("missing alphabet line");
  int n = m.target.size;
  m.letter_image.assign(m.alphabet.size(), -1);
  for (const auto& [tok, img] : letters) {
    if (img < 0 || img >= n) throw MalformedInput("letter image out of range");
    m.letter_image[m.alphabet.require(tok)] = img;
  }
  for (int a = 0; a < m.alphabet.size(); ++a)
    if (m.letter_image[a] < 0)
      throw MalformedInput("missing letter line for " + m.alphabet.token(a));
  for (const auto& [name, set] : accepts) {
    std::vector<char> f(n, 0);
    for (int s : set) {
      if (s < 0 || s >= n) throw MalformedInput("accept element out of range");
      f[s] = 1;
    }
    m.accepting_sets[name] = std::move(f);
  }
  m.witness.resize(n);
  for (int s = 0; s < n; ++s) {
    auto it = reps.find(s);
    if (it == reps.end())
      throw MalformedInput("missing rep for element " + std::to_string(s));
    m.witness[s] = it->second;
    if (m.image(m.witness[s]) != s)
      throw MalformedInput("rep word does not evaluate to its element");
  }
  return make_context(std::move(m));
}

}  // namespace wfsep
