#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfsep/semigroup.hpp"

namespace wfsep {

/// Letter over the derived alphabet: a plain semigroup element, or an
/// element framed by one or two idempotents.
struct WfLetter {
  enum class Kind { Single, First, Mid, Last };
  Kind kind;
  int left = -1;   // idempotent (First: unused, stores -1)
  int s = -1;      // semigroup element
  int right = -1;  // idempotent (Last/Single: -1)

  static WfLetter single(int s) { return {Kind::Single, -1, s, -1}; }
  static WfLetter first(int s, int e) { return {Kind::First, -1, s, e}; }
  static WfLetter mid(int e, int s, int f) { return {Kind::Mid, e, s, f}; }
  static WfLetter last(int e, int s) { return {Kind::Last, e, s, -1}; }

  bool operator==(const WfLetter& o) const = default;
};

using WfWord = std::vector<WfLetter>;

/// Everything the reduction needs: the shared recognizing morphism, the
/// idempotent order, and window sizes derived from |S|.
struct WfContext {
  RecognizingMorphism morphism;
  std::vector<int> idempotent_order;  // E(S) in canonical element order
  int window = 0;                     // |S|
  int locality = 0;                   // 2|S|

  const FiniteSemigroup& s() const { return morphism.target; }
  bool is_idempotent(int e) const { return s().is_idempotent(e); }
};

WfContext make_context(RecognizingMorphism m);

/// All letters of the derived alphabet, in canonical order: Singles, Firsts,
/// Mids, Lasts, each block in nested element-index order.
std::vector<WfLetter> wf_alphabet(const WfContext& ctx);

/// Token form used in serialized automata over the derived alphabet:
/// single:<s>, first:<s>:<e>, mid:<e>:<s>:<f>, last:<e>:<s>.
std::string wf_letter_token(const WfLetter& l);
WfLetter parse_wf_letter(const WfContext& ctx, const std::string& token);
WfWord parse_wf_word(const WfContext& ctx, const std::string& text);
std::string wf_word_string(const WfWord& w);

int beta_eval(const WfContext& ctx, const WfLetter& l);
int beta_eval(const WfContext& ctx, const WfWord& w);

bool is_well_formed(const WfWord& w);

/// DFA over the derived alphabet accepting {w : well-formed and beta(w) in F}.
Dfa wf_language_dfa(const WfContext& ctx, const std::vector<char>& f);

/// Least idempotent e (by ctx order) with alpha(u_x) * e = alpha(u_x), where
/// u_x is the infix of the last min(x, |S|) letters ending at x (1-based).
std::optional<int> distinguished(const WfContext& ctx, const Word& w, int x);

struct CanonicalResult {
  WfWord word;
  std::vector<int> positions;    // distinguished positions, ascending, 1-based
  std::vector<int> idempotents;  // e_i for all but the last position
};

/// Canonical well-formed encoding of w: segments cut at distinguished
/// positions, the rightmost position always distinguished.
CanonicalResult canonical_wf(const WfContext& ctx, const Word& w);

/// Shortest-lex witness word per element (from the generation BFS).
std::vector<Word> representatives(const WfContext& ctx);

/// Expansion with idempotent blocks repeated i times; inverse of the
/// canonical encoding up to language membership.
Word expand(const WfContext& ctx, const WfWord& u, int i);

/// DFA over A accepting {w in A+ : canonical_wf(w) in K}.
Dfa preimage_dfa(const WfContext& ctx, const Dfa& k);

// --- codec ------------------------------------------------------------

/// Context file: the semigroup lines followed by `alphabet`, `letter`,
/// `accept <name> ...` and `rep <element> <word>` lines.
std::string serialize_context(const WfContext& ctx);
WfContext parse_context(const std::string& text);

}  // namespace wfsep
