#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "wfsep/errors.hpp"

namespace wfsep {

using Symbol = std::string;
using Word = std::vector<Symbol>;

/// Ordered alphabet of opaque tokens. Declaration order is significant:
/// it drives lexicographic tie-breaking and canonical serialization.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Symbol> tokens);

  int size() const { return static_cast<int>(tokens_.size()); }
  const Symbol& token(int i) const { return tokens_[i]; }
  const std::vector<Symbol>& tokens() const { return tokens_; }
  /// Index of a token, or -1 when absent.
  int index_of(const Symbol& tok) const;
  /// Index of a token; throws UnknownSymbol when absent.
  int require(const Symbol& tok) const;
  bool operator==(const Alphabet& o) const { return tokens_ == o.tokens_; }

 private:
  std::vector<Symbol> tokens_;
  std::unordered_map<Symbol, int> index_;
};

struct Nfa {
  Alphabet alphabet;
  int num_states = 0;
  std::vector<int> initials;
  std::vector<char> accepting;                         // per state
  std::vector<std::tuple<int, int, int>> transitions;  // (from, symbol, to)
};

/// Total deterministic automaton: exactly one transition per (state, symbol).
struct Dfa {
  Alphabet alphabet;
  int num_states = 0;
  int initial = 0;
  std::vector<char> accepting;  // per state
  std::vector<int> trans;       // num_states * |alphabet|

  int next(int q, int s) const { return trans[q * alphabet.size() + s]; }
  int& next_ref(int q, int s) { return trans[q * alphabet.size() + s]; }
  int run(int q, const Word& w) const;
};

// --- codec --------------------------------------------------------------

Dfa parse_dfa(const std::string& text);
Nfa parse_nfa(const std::string& text);
/// Canonical form: states renumbered by BFS from the initial state(s),
/// exploring symbols in declaration order; transitions sorted.
Dfa canonicalize(const Dfa& d);
std::string serialize_dfa(const Dfa& d);
std::string serialize_nfa(const Nfa& n);

// --- language algebra ---------------------------------------------------

Dfa complement(const Dfa& d);
Dfa intersect(const Dfa& x, const Dfa& y);
Dfa unite(const Dfa& x, const Dfa& y);
/// x superset of y?
bool includes(const Dfa& x, const Dfa& y);
bool equivalent(const Dfa& x, const Dfa& y);

bool accepts(const Dfa& d, const Word& w);
bool accepts(const Nfa& n, const Word& w);
/// All accepted words of length <= max_len, length-then-lex order.
std::vector<Word> enumerate_accepted(const Dfa& d, int max_len);

/// Shortest accepted word, lexicographically least by declaration order;
/// nullopt iff the language is empty. The empty word is a valid witness.
std::optional<Word> is_empty_with_witness(const Nfa& n);
std::optional<Word> is_empty_with_witness(const Dfa& d);

Nfa nfa_from_dfa(const Dfa& d);
Dfa determinize_minimize(const Nfa& n);

/// Scattered-subword upward closure: adds a self loop (q, a, q) for every
/// state and letter.
Nfa upward_closure(const Nfa& n);

/// Same language minus the empty word.
Dfa strip_epsilon(const Dfa& d);

// --- word helpers -------------------------------------------------------

std::string word_string(const Word& w);
/// Parses a CLI word: comma-separated tokens, or a concatenation of
/// single-character tokens when no comma is present. "-" denotes the
/// empty word.
Word parse_word(const std::string& text);
bool is_scattered_subword(const Word& u, const Word& w);

}  // namespace wfsep
