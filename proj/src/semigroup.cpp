#include "wfsep/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wfsep {

int FiniteSemigroup::power(int s, int k) const {
  int acc = s;
  for (int i = 1; i < k; ++i) acc = mul(acc, s);
  return acc;
}

std::vector<int> FiniteSemigroup::idempotents() const {
  std::vector<int> out;
  for (int s = 0; s < size; ++s)
    if (is_idempotent(s)) out.push_back(s);
  return out;
}

int FiniteSemigroup::omega() const {
  // For each s find the least exponent i(s) entering the cycle and the cycle
  // period p(s); the answer is the least m >= max i(s) divisible by lcm p(s).
  long long l = 1;
  int max_index = 1;
  for (int s = 0; s < size; ++s) {
    std::vector<int> seen_at(size, -1);
    int cur = s, exp = 1;
    while (seen_at[cur] < 0) {
      seen_at[cur] = exp;
      cur = mul(cur, s);
      ++exp;
    }
    int index = seen_at[cur];
    int period = exp - seen_at[cur];
    max_index = std::max(max_index, index);
    l = std::lcm(l, static_cast<long long>(period));
  }
  long long m = ((max_index + l - 1) / l) * l;
  return static_cast<int>(m);
}

void FiniteSemigroup::validate() const {
  if (static_cast<int>(mul_table.size()) != size * size)
    throw MalformedInput("multiplication table has wrong shape");
  for (int v : mul_table)
    if (v < 0 || v >= size) throw MalformedInput("table entry out of range");
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw MalformedInput("multiplication is not associative");
  if (identity) {
    int e = *identity;
    for (int a = 0; a < size; ++a)
      if (mul(e, a) != a || mul(a, e) != a)
        throw MalformedInput("declared identity is not neutral");
  }
  if (has_order()) {
    for (int a = 0; a < size; ++a) {
      if (!le(a, a)) throw MalformedInput("order is not reflexive");
      for (int b = 0; b < size; ++b) {
        if (a != b && le(a, b) && le(b, a))
          throw MalformedInput("order is not antisymmetric");
        for (int c = 0; c < size; ++c)
          if (le(a, b) && le(b, c) && !le(a, c))
            throw MalformedInput("order is not transitive");
      }
    }
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b)
        if (le(a, b))
          for (int c = 0; c < size; ++c)
            for (int d = 0; d < size; ++d)
              if (le(c, d) && !le(mul(a, c), mul(b, d)))
                throw MalformedInput("order is not compatible with multiplication");
  }
}

int RecognizingMorphism::image(const Word& w) const {
  if (w.empty()) throw MalformedInput("morphism image of the empty word");
  int acc = letter_image[alphabet.require(w[0])];
  for (size_t i = 1; i < w.size(); ++i)
    acc = target.mul(acc, letter_image[alphabet.require(w[i])]);
  return acc;
}

bool RecognizingMorphism::in_set(const std::string& name, const Word& w) const {
  return accepting_sets.at(name)[image(w)] != 0;
}

namespace {

// Generic transformation-closure builder. `apply` composes a transformation
// with a letter; transformations are vectors of ints.
struct Closure {
  std::vector<std::vector<int>> elements;  // BFS discovery order
  std::map<std::vector<int>, int> id;
  std::vector<Word> witness;
  std::vector<int> letter_image;
  std::vector<int> mul_table;
};

Closure close_transformations(const Alphabet& alphabet,
                              const std::vector<std::vector<int>>& letter_tf) {
  Closure c;
  auto intern = [&](const std::vector<int>& tf, const Word& w) {
    auto [it, fresh] = c.id.emplace(tf, c.elements.size());
    if (fresh) {
      c.elements.push_back(tf);
      c.witness.push_back(w);
    }
    return it->second;
  };
  for (int a = 0; a < alphabet.size(); ++a)
    c.letter_image.push_back(intern(letter_tf[a], {alphabet.token(a)}));
  for (size_t i = 0; i < c.elements.size(); ++i)
    for (int a = 0; a < alphabet.size(); ++a) {
      std::vector<int> composed(c.elements[i].size());
      for (size_t q = 0; q < composed.size(); ++q)
        composed[q] = letter_tf[a][c.elements[i][q]];
      Word w = c.witness[i];
      w.push_back(alphabet.token(a));
      intern(composed, w);
    }
  int n = static_cast<int>(c.elements.size());
  c.mul_table.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> composed(c.elements[i].size());
      for (size_t q = 0; q < composed.size(); ++q)
        composed[q] = c.elements[j][c.elements[i][q]];
      c.mul_table[i * n + j] = c.id.at(composed);
    }
  return c;
}

}  // namespace

std::pair<FiniteSemigroup, RecognizingMorphism> transition_semigroup(
    const Dfa& d, const std::string& name) {
  if (d.accepting[d.initial])
    throw EpsilonAccepted("language must not contain the empty word");
  std::vector<std::vector<int>> letter_tf(d.alphabet.size());
  for (int a = 0; a < d.alphabet.size(); ++a) {
    letter_tf[a].resize(d.num_states);
    for (int q = 0; q < d.num_states; ++q) letter_tf[a][q] = d.next(q, a);
  }
  Closure c = close_transformations(d.alphabet, letter_tf);
  FiniteSemigroup s;
  s.size = static_cast<int>(c.elements.size());
  s.mul_table = std::move(c.mul_table);
  RecognizingMorphism m;
  m.target = s;
  m.alphabet = d.alphabet;
  m.letter_image = std::move(c.letter_image);
  m.witness = std::move(c.witness);
  std::vector<char> acc(s.size, 0);
  for (int i = 0; i < s.size; ++i)
    acc[i] = d.accepting[c.elements[i][d.initial]];
  m.accepting_sets[name] = std::move(acc);
  return {std::move(s), std::move(m)};
}

std::pair<FiniteSemigroup, RecognizingMorphism> product_recognizer(
    const Dfa& x, const Dfa& y) {
  if (!(x.alphabet == y.alphabet)) throw AlphabetMismatch("alphabet mismatch");
  if (x.accepting[x.initial] || y.accepting[y.initial])
    throw EpsilonAccepted("languages must not contain the empty word");
  // transformations act on the disjoint union of the two state sets
  int nx = x.num_states;
  int total = nx + y.num_states;
  std::vector<std::vector<int>> letter_tf(x.alphabet.size());
  for (int a = 0; a < x.alphabet.size(); ++a) {
    letter_tf[a].resize(total);
    for (int q = 0; q < nx; ++q) letter_tf[a][q] = x.next(q, a);
    for (int q = 0; q < y.num_states; ++q)
      letter_tf[a][nx + q] = nx + y.next(q, a);
  }
  Closure c = close_transformations(x.alphabet, letter_tf);
  FiniteSemigroup s;
  s.size = static_cast<int>(c.elements.size());
  s.mul_table = std::move(c.mul_table);
  RecognizingMorphism m;
  m.target = s;
  m.alphabet = x.alphabet;
  m.letter_image = std::move(c.letter_image);
  m.witness = std::move(c.witness);
  std::vector<char> fl(s.size, 0), flp(s.size, 0);
  for (int i = 0; i < s.size; ++i) {
    fl[i] = x.accepting[c.elements[i][x.initial]];
    flp[i] = y.accepting[c.elements[i][nx + y.initial] - nx];
  }
  m.accepting_sets["L"] = std::move(fl);
  m.accepting_sets["Lp"] = std::move(flp);
  return {std::move(s), std::move(m)};
}

std::pair<FiniteSemigroup, RecognizingMorphism> syntactic_ordered_semigroup(
    const Dfa& d) {
  Dfa min = determinize_minimize(nfa_from_dfa(d));
  auto [s, m] = transition_semigroup(min, "L");
  const auto& f = m.accepting_sets.at("L");
  int n = s.size;
  // contexts range over S with an adjoined unit (index n means "empty")
  auto ctx_mul = [&](int x, int mid, int y) {
    int acc = mid;
    if (x != n) acc = s.mul(x, acc);
    if (y != n) acc = s.mul(acc, y);
    return acc;
  };
  std::vector<char> order(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool leq = true;
      for (int x = 0; x <= n && leq; ++x)
        for (int y = 0; y <= n && leq; ++y)
          if (f[ctx_mul(x, a, y)] && !f[ctx_mul(x, b, y)]) leq = false;
      order[a * n + b] = leq;
    }
  s.order = order;
  s.validate();
  m.target = s;
  return {std::move(s), std::move(m)};
}

// --- identities --------------------------------------------------------

namespace {

size_t skip_factor(const std::string& t, size_t i) {
  if (t[i] == '(') {
    int depth = 0;
    while (i < t.size()) {
      if (t[i] == '(') ++depth;
      if (t[i] == ')') --depth;
      ++i;
      if (depth == 0) break;
    }
  } else {
    while (i < t.size() && (isalnum(static_cast<unsigned char>(t[i])) || t[i] == '_'))
      ++i;
  }
  return i;
}

}  // namespace

IdentityTerm parse_identity_term(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw MalformedInput("empty identity term");
  IdentityTerm term;
  size_t i = 0;
  while (i < t.size()) {
    if (t[i] == '.') {
      ++i;
      continue;
    }
    size_t end = skip_factor(t, i);
    if (end == i) throw MalformedInput("bad identity term: " + text);
    std::string body = t.substr(i, end - i);
    bool omega = false;
    if (end + 1 < t.size() && t[end] == '^' && t[end + 1] == 'w') {
      omega = true;
      end += 2;
    }
    IdentityTerm::Factor f;
    if (body.front() == '(') {
      auto inner = std::make_shared<IdentityTerm>(
          parse_identity_term(body.substr(1, body.size() - 2)));
      if (!omega) {
        for (auto& g : inner->factors) term.factors.push_back(g);
        i = end;
        continue;
      }
      f.omega_of = inner;
    } else if (omega) {
      IdentityTerm::Factor v;
      v.var = body;
      v.idempotent_var = (body == "e" || body == "f" || body == "g");
      auto inner = std::make_shared<IdentityTerm>();
      inner->factors.push_back(v);
      f.omega_of = inner;
    } else {
      f.var = body;
      f.idempotent_var = (body == "e" || body == "f" || body == "g");
    }
    term.factors.push_back(std::move(f));
    i = end;
  }
  if (term.factors.empty()) throw MalformedInput("empty identity term");
  return term;
}

IdentitySpec parse_identity(const std::string& text) {
  IdentitySpec spec;
  auto pos = text.find("<=");
  size_t oplen = 2;
  if (pos != std::string::npos) {
    spec.is_order = true;
  } else {
    pos = text.find('=');
    oplen = 1;
    if (pos == std::string::npos)
      throw MalformedInput("identity needs '=' or '<=': " + text);
  }
  spec.lhs = parse_identity_term(text.substr(0, pos));
  spec.rhs = parse_identity_term(text.substr(pos + oplen));
  return spec;
}

namespace {

void collect_vars(const IdentityTerm& t,
                  std::map<std::string, bool>& vars) {
  for (const auto& f : t.factors) {
    if (f.omega_of)
      collect_vars(*f.omega_of, vars);
    else
      vars[f.var] = vars[f.var] || f.idempotent_var;
  }
}

int eval_term(const FiniteSemigroup& s, const IdentityTerm& t,
              const std::map<std::string, int>& assign, int omega) {
  int acc = -1;
  for (const auto& f : t.factors) {
    int v = f.omega_of ? s.power(eval_term(s, *f.omega_of, assign, omega), omega)
                       : assign.at(f.var);
    acc = acc < 0 ? v : s.mul(acc, v);
  }
  return acc;
}

}  // namespace

IdentityResult check_identity(const FiniteSemigroup& s,
                              const IdentitySpec& spec) {
  if (spec.is_order && !s.has_order())
    throw MissingOrder("order identity on an unordered semigroup");
  std::map<std::string, bool> vars;
  collect_vars(spec.lhs, vars);
  collect_vars(spec.rhs, vars);
  std::vector<std::pair<std::string, bool>> vlist(vars.begin(), vars.end());
  std::vector<int> idem = s.idempotents();
  int omega = s.omega();
  std::map<std::string, int> assign;
  IdentityResult result;
  // odometer over assignments
  std::vector<int> pos(vlist.size(), 0);
  auto domain_size = [&](size_t i) {
    return vlist[i].second ? static_cast<int>(idem.size()) : s.size;
  };
  for (size_t i = 0; i < vlist.size(); ++i)
    if (domain_size(i) == 0) return result;  // vacuously true
  for (;;) {
    for (size_t i = 0; i < vlist.size(); ++i)
      assign[vlist[i].first] = vlist[i].second ? idem[pos[i]] : pos[i];
    int l = eval_term(s, spec.lhs, assign, omega);
    int r = eval_term(s, spec.rhs, assign, omega);
    bool ok = spec.is_order ? s.le(l, r) : l == r;
    if (!ok) {
      result.holds = false;
      result.counterexample = assign;
      return result;
    }
    size_t i = 0;
    while (i < vlist.size() && ++pos[i] == domain_size(i)) pos[i++] = 0;
    if (i == vlist.size()) break;
    if (vlist.empty()) break;
  }
  return result;
}

std::vector<IdentitySpec> identity_preset(const std::string& name) {
  if (name == "aperiodic") return {parse_identity("x^w.x = x^w")};
  if (name == "commutative") return {parse_identity("x.y = y.x")};
  if (name == "J")
    return {parse_identity("x^w.x = x^w"), parse_identity("(x.y)^w = (y.x)^w")};
  if (name == "DA") return {parse_identity("(x.y.z)^w.y.(x.y.z)^w = (x.y.z)^w")};
  if (name == "D") return {parse_identity("x.e = e")};
  throw MalformedInput("unknown identity preset: " + name);
}

IdentityResult check_preset(const FiniteSemigroup& s, const std::string& name) {
  for (const auto& spec : identity_preset(name)) {
    IdentityResult r = check_identity(s, spec);
    if (!r.holds) return r;
  }
  return {};
}

// --- codec ------------------------------------------------------------

FiniteSemigroup parse_semigroup(const std::string& text) {
  FiniteSemigroup s;
  std::vector<std::pair<int, int>> le_pairs;
  std::istringstream in(text);
  std::string line;
  bool saw_elements = false;
  std::vector<char> row_seen;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "elements") {
      if (!(ls >> s.size) || s.size <= 0)
        throw MalformedInput("bad elements count");
      s.mul_table.assign(s.size * s.size, -1);
      row_seen.assign(s.size, 0);
      saw_elements = true;
    } else if (key == "identity") {
      int e;
      if (!(ls >> e)) throw MalformedInput("bad identity line");
      s.identity = e;
    } else if (key == "mul") {
      if (!saw_elements) throw MalformedInput("mul before elements");
      int i;
      std::string colon;
      if (!(ls >> i >> colon) || colon != ":" || i < 0 || i >= s.size)
        throw MalformedInput("bad mul row");
      for (int j = 0; j < s.size; ++j)
        if (!(ls >> s.mul_table[i * s.size + j]))
          throw MalformedInput("short mul row");
      row_seen[i] = 1;
    } else if (key == "le") {
      int i, j;
      if (!(ls >> i >> j)) throw MalformedInput("bad le line");
      le_pairs.emplace_back(i, j);
    } else {
      throw MalformedInput("unknown directive: " + key);
    }
  }
  if (!saw_elements) throw MalformedInput("missing elements section");
  for (int i = 0; i < s.size; ++i)
    if (!row_seen[i])
      throw MalformedInput("missing mul row " + std::to_string(i));
  if (!le_pairs.empty()) {
    s.order.assign(s.size * s.size, 0);
    for (int i = 0; i < s.size; ++i) s.order[i * s.size + i] = 1;
    for (auto [i, j] : le_pairs) {
      if (i < 0 || i >= s.size || j < 0 || j >= s.size)
        throw MalformedInput("le element out of range");
      s.order[i * s.size + j] = 1;
    }
    for (int k = 0; k < s.size; ++k)
      for (int i = 0; i < s.size; ++i)
        for (int j = 0; j < s.size; ++j)
          if (s.le(i, k) && s.le(k, j)) s.order[i * s.size + j] = 1;
  }
  s.validate();
  return s;
}

std::string serialize_semigroup(const FiniteSemigroup& s) {
  std::ostringstream out;
  out << "elements " << s.size << '\n';
  if (s.identity) out << "identity " << *s.identity << '\n';
  for (int i = 0; i < s.size; ++i) {
    out << "mul " << i << " :";
    for (int j = 0; j < s.size; ++j) out << ' ' << s.mul(i, j);
    out << '\n';
  }
  if (s.has_order())
    for (int i = 0; i < s.size; ++i)
      for (int j = 0; j < s.size; ++j)
        if (i != j && s.le(i, j)) out << "le " << i << ' ' << j << '\n';
  return out.str();
}

}  // namespace wfsep
