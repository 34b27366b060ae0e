#pragma once

#include <map>
#include <string>
#include <vector>

#include "wfsep/wellformed.hpp"

namespace wfsep {

/// Action of an ordered semigroup T on an ordered monoid M, given as a table
/// over T with an adjoined unit (row index |T| is the unit).
struct ActionTable {
  int t_size = 0;
  int m_size = 0;
  std::vector<int> table;  // (t_size + 1) * m_size

  int unit() const { return t_size; }
  int apply(int t, int m) const { return table[t * m_size + m]; }
};

struct ActionReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Exhaustive check of the six action axioms: composition, unit action,
/// monotonicity in both arguments, distribution over the monoid operation,
/// and preservation of the monoid unit.
ActionReport validate_action(const FiniteSemigroup& m,
                             const FiniteSemigroup& t, const ActionTable& act);

struct SemidirectProduct {
  FiniteSemigroup m;  // ordered monoid
  FiniteSemigroup t;  // ordered semigroup
  ActionTable act;
  FiniteSemigroup product;  // on M x T, componentwise order

  int pair(int mm, int tt) const { return mm * t.size + tt; }
  int first(int p) const { return p / t.size; }
  int second(int p) const { return p % t.size; }
};

/// Semidirect product with (s,t)(s',t') = (s + t*s', tt') and the
/// componentwise order; the action is validated first.
SemidirectProduct semidirect(const FiniteSemigroup& m, const FiniteSemigroup& t,
                             const ActionTable& act);

/// s e = e for every s and idempotent e: languages recognized in this class
/// depend only on a bounded suffix.
bool is_in_D(const FiniteSemigroup& t);

/// Ordered monoid {1, t1..tn, 0} with ti tj = 0, 0 absorbing and the
/// equality order, so t1..tn form an antichain. Element 0 is the identity,
/// elements 1..n the antichain, element n+1 the zero.
FiniteSemigroup antichain_monoid(int n);

/// Morphism from the derived alphabet into an ordered monoid, with an
/// upward-closed accepting set.
struct GammaMorphism {
  FiniteSemigroup monoid;
  std::map<std::string, int> letter_value;  // keyed by letter token
  std::vector<char> accepting;

  int eval(const WfLetter& l) const;
  int eval(const WfWord& w) const;
};

/// Recasts a semidirect-product recognizer over A as a recognizer of the
/// derived languages: each derived letter is sent to the image of its
/// expansion, tagged in N by the T-component when the letter closes a word.
/// delta_letter maps alphabet indices to product elements; inject picks
/// pairwise-incomparable representatives of T inside N.
GammaMorphism gamma_construction(const SemidirectProduct& sd,
                                 const std::vector<int>& delta_letter,
                                 const std::vector<char>& f,
                                 const WfContext& ctx,
                                 const FiniteSemigroup& n,
                                 const std::vector<int>& inject);

/// The converse direction: turns a derived-alphabet recognizer gamma into an
/// evaluator for the semidirect-product recognizer over A whose first
/// component is a function space over the suffix semigroup T. The function
/// component is never materialized; it is probed pointwise.
struct DeltaEvaluator {
  WfContext ctx;
  GammaMorphism gamma;
  int suffix_window = 0;  // 2|S|

  /// Image in the gamma monoid contributed by the last position of w, or the
  /// monoid unit when that position is not distinguished.
  int lab(const Word& w) const;
  /// Suffix of length at most 2|S|.
  Word rho(const Word& w) const;
  /// (f(1_T), rho(w)) for (f, u) the image of w.
  std::pair<int, Word> evaluate(const Word& w) const;
  /// f(u) probed at an arbitrary point u of T with adjoined unit (empty word).
  int point(const Word& w, const Word& u) const;
  bool in_F(const Word& w) const;
};

DeltaEvaluator delta_evaluator(GammaMorphism gamma, const WfContext& ctx);

/// Identity morphism into S with adjoined unit and the equality order;
/// recognizes the derived languages directly. Useful as a reference gamma.
GammaMorphism beta_gamma(const WfContext& ctx, const std::vector<char>& f);

// --- codec ------------------------------------------------------------

ActionTable parse_action(const std::string& text, int t_size, int m_size);
std::string serialize_action(const ActionTable& act);

}  // namespace wfsep
