#include "wfsep/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace wfsep {

namespace {

void require_ordered_monoid(const FiniteSemigroup& m) {
  if (!m.identity) throw MalformedInput("an ordered monoid needs an identity");
  if (!m.has_order()) throw MissingOrder("an ordered monoid needs an order");
  m.validate();
}

void require_ordered_semigroup(const FiniteSemigroup& t) {
  if (!t.has_order()) throw MissingOrder("an ordered semigroup needs an order");
  t.validate();
}

}  // namespace

ActionReport validate_action(const FiniteSemigroup& m,
                             const FiniteSemigroup& t, const ActionTable& act) {
  require_ordered_monoid(m);
  require_ordered_semigroup(t);
  ActionReport rep;
  auto fail = [&](const std::string& msg) {
    rep.valid = false;
    rep.violations.push_back(msg);
  };
  if (act.t_size != t.size || act.m_size != m.size ||
      static_cast<int>(act.table.size()) != (t.size + 1) * m.size) {
    fail("table has wrong shape");
    return rep;
  }
  for (int v : act.table)
    if (v < 0 || v >= m.size) {
      fail("table entry out of range");
      return rep;
    }
  int unit = act.unit();
  int one_m = *m.identity;
  auto mul_t1 = [&](int a, int b) {
    if (a == unit) return b;
    if (b == unit) return a;
    return t.mul(a, b);
  };
  for (int a = 0; a <= t.size && rep.valid; ++a)
    for (int b = 0; b <= t.size && rep.valid; ++b)
      for (int s = 0; s < m.size; ++s)
        if (act.apply(a, act.apply(b, s)) != act.apply(mul_t1(a, b), s)) {
          fail("composition axiom fails");
          break;
        }
  for (int s = 0; s < m.size; ++s)
    if (act.apply(unit, s) != s) {
      fail("unit action axiom fails");
      break;
    }
  for (int a = 0; a <= t.size && rep.valid; ++a)
    for (int s = 0; s < m.size; ++s)
      for (int sp = 0; sp < m.size; ++sp)
        if (m.le(s, sp) && !m.le(act.apply(a, s), act.apply(a, sp))) {
          fail("monotonicity in the monoid argument fails");
          break;
        }
  for (int a = 0; a <= t.size && rep.valid; ++a)
    for (int s = 0; s < m.size; ++s)
      for (int sp = 0; sp < m.size; ++sp)
        if (act.apply(a, m.mul(s, sp)) !=
            m.mul(act.apply(a, s), act.apply(a, sp))) {
          fail("distribution axiom fails");
          break;
        }
  for (int a = 0; a <= t.size; ++a)
    if (act.apply(a, one_m) != one_m) {
      fail("unit preservation axiom fails");
      break;
    }
  for (int a = 0; a < t.size && rep.valid; ++a)
    for (int b = 0; b < t.size; ++b)
      if (t.le(a, b))
        for (int s = 0; s < m.size; ++s)
          if (!m.le(act.apply(a, s), act.apply(b, s))) {
            fail("monotonicity in the semigroup argument fails");
            break;
          }
  return rep;
}

SemidirectProduct semidirect(const FiniteSemigroup& m, const FiniteSemigroup& t,
                             const ActionTable& act) {
  ActionReport rep = validate_action(m, t, act);
  if (!rep.valid) throw InvalidAction(rep.violations.front());
  SemidirectProduct sd;
  sd.m = m;
  sd.t = t;
  sd.act = act;
  int size = m.size * t.size;
  sd.product.size = size;
  sd.product.mul_table.assign(static_cast<size_t>(size) * size, 0);
  for (int s = 0; s < m.size; ++s)
    for (int a = 0; a < t.size; ++a)
      for (int sp = 0; sp < m.size; ++sp)
        for (int b = 0; b < t.size; ++b) {
          int x = sd.pair(s, a), y = sd.pair(sp, b);
          sd.product.mul_table[x * size + y] =
              sd.pair(m.mul(s, act.apply(a, sp)), t.mul(a, b));
        }
  sd.product.order.assign(static_cast<size_t>(size) * size, 0);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      sd.product.order[x * size + y] =
          m.le(sd.first(x), sd.first(y)) && t.le(sd.second(x), sd.second(y));
  sd.product.validate();
  return sd;
}

bool is_in_D(const FiniteSemigroup& t) {
  for (int e : t.idempotents())
    for (int s = 0; s < t.size; ++s)
      if (t.mul(s, e) != e) return false;
  return true;
}

FiniteSemigroup antichain_monoid(int n) {
  if (n < 1) throw MalformedInput("antichain size must be positive");
  FiniteSemigroup a;
  a.size = n + 2;
  a.identity = 0;
  int zero = n + 1;
  a.mul_table.assign(static_cast<size_t>(a.size) * a.size, zero);
  for (int i = 0; i < a.size; ++i) {
    a.mul_table[i] = i;           // 1 * i
    a.mul_table[i * a.size] = i;  // i * 1
  }
  a.order.assign(static_cast<size_t>(a.size) * a.size, 0);
  for (int i = 0; i < a.size; ++i) a.order[i * a.size + i] = 1;
  a.validate();
  return a;
}

int GammaMorphism::eval(const WfLetter& l) const {
  auto it = letter_value.find(wf_letter_token(l));
  if (it == letter_value.end())
    throw UnknownSymbol("letter outside the derived alphabet: " +
                        wf_letter_token(l));
  return it->second;
}

int GammaMorphism::eval(const WfWord& w) const {
  int acc = *monoid.identity;
  for (const auto& l : w) acc = monoid.mul(acc, eval(l));
  return acc;
}

GammaMorphism gamma_construction(const SemidirectProduct& sd,
                                 const std::vector<int>& delta_letter,
                                 const std::vector<char>& f,
                                 const WfContext& ctx,
                                 const FiniteSemigroup& n,
                                 const std::vector<int>& inject) {
  if (!is_in_D(sd.t))
    throw NotInD("the suffix component must satisfy s e = e");
  require_ordered_monoid(n);
  int psize = sd.product.size;
  if (static_cast<int>(f.size()) != psize)
    throw MalformedInput("accepting set has wrong size");
  for (int x = 0; x < psize; ++x)
    if (f[x])
      for (int y = 0; y < psize; ++y)
        if (sd.product.le(x, y) && !f[y])
          throw NotUpwardClosed("accepting set is not upward closed");
  if (static_cast<int>(inject.size()) != sd.t.size)
    throw MalformedInput("injection has wrong size");
  for (int a = 0; a < sd.t.size; ++a)
    for (int b = 0; b < sd.t.size; ++b)
      if (a != b && (inject[a] == inject[b] || n.le(inject[a], inject[b])))
        throw NotAntichain("injected elements must be pairwise incomparable");

  std::vector<Word> reps = representatives(ctx);
  auto delta = [&](const Word& w) {
    int acc = -1;
    for (const auto& tok : w) {
      int v = delta_letter[ctx.morphism.alphabet.require(tok)];
      acc = acc < 0 ? v : sd.product.mul(acc, v);
    }
    return acc;
  };
  int omega = sd.product.omega();
  int one_n = *n.identity;
  int nn = n.size;

  GammaMorphism g;
  // the host monoid is M x N with the componentwise order
  g.monoid.size = sd.m.size * nn;
  g.monoid.identity = *sd.m.identity * nn + one_n;
  g.monoid.mul_table.assign(static_cast<size_t>(g.monoid.size) * g.monoid.size,
                            0);
  g.monoid.order.assign(static_cast<size_t>(g.monoid.size) * g.monoid.size, 0);
  for (int x = 0; x < g.monoid.size; ++x)
    for (int y = 0; y < g.monoid.size; ++y) {
      g.monoid.mul_table[x * g.monoid.size + y] =
          sd.m.mul(x / nn, y / nn) * nn + n.mul(x % nn, y % nn);
      g.monoid.order[x * g.monoid.size + y] =
          sd.m.le(x / nn, y / nn) && n.le(x % nn, y % nn);
    }
  g.monoid.validate();

  for (const WfLetter& l : wf_alphabet(ctx)) {
    // normalized shape (e, s, f) with either frame possibly the unit of S
    int e = (l.kind == WfLetter::Kind::Mid || l.kind == WfLetter::Kind::Last)
                ? l.left
                : -1;
    int fr = (l.kind == WfLetter::Kind::Mid || l.kind == WfLetter::Kind::First)
                 ? l.right
                 : -1;
    Word expansion;
    auto append_pow = [&](const Word& w, int times) {
      for (int i = 0; i < times; ++i)
        expansion.insert(expansion.end(), w.begin(), w.end());
    };
    if (e >= 0) append_pow(reps[e], omega);
    append_pow(reps[l.s], 1);
    if (fr >= 0) append_pow(reps[fr], omega);
    int mt = delta(expansion);
    int m_comp, t_act;
    if (e >= 0) {
      int me_te = sd.product.power(delta(reps[e]), omega);
      t_act = sd.second(me_te);
    } else {
      t_act = sd.act.unit();
    }
    m_comp = sd.act.apply(t_act, sd.first(mt));
    int n_comp = fr >= 0 ? one_n : inject[sd.second(mt)];
    g.letter_value[wf_letter_token(l)] = m_comp * nn + n_comp;
  }

  g.accepting.assign(g.monoid.size, 0);
  for (int x = 0; x < psize; ++x)
    if (f[x])
      g.accepting[sd.first(x) * nn + inject[sd.second(x)]] = 1;
  return g;
}

Word DeltaEvaluator::rho(const Word& w) const {
  if (static_cast<int>(w.size()) <= suffix_window) return w;
  return Word(w.end() - suffix_window, w.end());
}

int DeltaEvaluator::lab(const Word& w) const {
  Word v = rho(w);
  int x = static_cast<int>(v.size());
  auto ex = distinguished(ctx, v, x);
  if (!ex) return *gamma.monoid.identity;
  int y = -1, ey = -1;
  for (int p = x - 1; p >= 1; --p)
    if (auto e = distinguished(ctx, v, p)) {
      y = p;
      ey = *e;
      break;
    }
  const auto& m = ctx.morphism;
  auto seg_image = [&](int from, int to) {
    int img = m.letter_image[m.alphabet.require(v[from - 1])];
    for (int i = from + 1; i <= to; ++i)
      img = ctx.s().mul(img, m.letter_image[m.alphabet.require(v[i - 1])]);
    return img;
  };
  WfLetter l = y < 0 ? WfLetter::first(seg_image(1, x), *ex)
                     : WfLetter::mid(ey, seg_image(y + 1, x), *ex);
  return gamma.eval(l);
}

std::pair<int, Word> DeltaEvaluator::evaluate(const Word& w) const {
  if (w.empty()) throw MalformedInput("evaluation of the empty word");
  // the label of a position is contributed by the window ending just before
  // it; the final position is accounted for separately via the end letter
  Word buffer;
  int sum = *gamma.monoid.identity;
  for (const auto& a : w) {
    if (!buffer.empty()) sum = gamma.monoid.mul(sum, lab(buffer));
    buffer.push_back(a);
    if (static_cast<int>(buffer.size()) > suffix_window)
      buffer.erase(buffer.begin());
  }
  return {sum, buffer};
}

int DeltaEvaluator::point(const Word& w, const Word& u) const {
  if (static_cast<int>(u.size()) > suffix_window)
    throw MalformedInput("probe point is longer than the suffix window");
  Word buffer = u;
  int sum = *gamma.monoid.identity;
  for (const auto& a : w) {
    if (!buffer.empty()) sum = gamma.monoid.mul(sum, lab(buffer));
    buffer.push_back(a);
    if (static_cast<int>(buffer.size()) > suffix_window)
      buffer.erase(buffer.begin());
  }
  return sum;
}

bool DeltaEvaluator::in_F(const Word& w) const {
  auto [f1, u] = evaluate(w);
  WfLetter end = canonical_wf(ctx, u).word.back();
  return gamma.accepting[gamma.monoid.mul(f1, gamma.eval(end))] != 0;
}

DeltaEvaluator delta_evaluator(GammaMorphism gamma, const WfContext& ctx) {
  require_ordered_monoid(gamma.monoid);
  for (int x = 0; x < gamma.monoid.size; ++x)
    if (gamma.accepting[x])
      for (int y = 0; y < gamma.monoid.size; ++y)
        if (gamma.monoid.le(x, y) && !gamma.accepting[y])
          throw NotUpwardClosed("accepting set is not upward closed");
  DeltaEvaluator ev;
  ev.ctx = ctx;
  ev.gamma = std::move(gamma);
  ev.suffix_window = ctx.locality;
  return ev;
}

GammaMorphism beta_gamma(const WfContext& ctx, const std::vector<char>& f) {
  int n = ctx.s().size;
  GammaMorphism g;
  // S with an adjoined unit, equality order
  g.monoid.size = n + 1;
  g.monoid.identity = n;
  g.monoid.mul_table.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y)
      g.monoid.mul_table[x * (n + 1) + y] =
          x == n ? y : (y == n ? x : ctx.s().mul(x, y));
  g.monoid.order.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
  for (int x = 0; x <= n; ++x) g.monoid.order[x * (n + 1) + x] = 1;
  g.accepting.assign(n + 1, 0);
  for (int s = 0; s < n; ++s) g.accepting[s] = f[s];
  for (const WfLetter& l : wf_alphabet(ctx))
    g.letter_value[wf_letter_token(l)] = beta_eval(ctx, l);
  return g;
}

ActionTable parse_action(const std::string& text, int t_size, int m_size) {
  ActionTable act;
  act.t_size = t_size;
  act.m_size = m_size;
  act.table.assign(static_cast<size_t>(t_size + 1) * m_size, -1);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key != "act") throw MalformedInput("unknown directive: " + key);
    int t, m, v;
    if (!(ls >> t >> m >> v) || t < 0 || t > t_size || m < 0 || m >= m_size ||
        v < 0 || v >= m_size)
      throw MalformedInput("bad act row: " + line);
    act.table[t * m_size + m] = v;
  }
  for (int v : act.table)
    if (v < 0) throw MalformedInput("incomplete action table");
  return act;
}

std::string serialize_action(const ActionTable& act) {
  std::ostringstream out;
  for (int t = 0; t <= act.t_size; ++t)
    for (int m = 0; m < act.m_size; ++m)
      out << "act " << t << ' ' << m << ' ' << act.apply(t, m) << '\n';
  return out.str();
}

}  // namespace wfsep
