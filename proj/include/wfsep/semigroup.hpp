#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wfsep/automata.hpp"

namespace wfsep {

/// Finite semigroup given by its Cayley table. An optional identity index
/// marks a monoid; an optional order matrix makes it an ordered semigroup.
struct FiniteSemigroup {
  int size = 0;
  std::vector<int> mul_table;            // size * size
  std::optional<int> identity;
  std::vector<char> order;               // size * size, le(i,j); empty if none

  int mul(int i, int j) const { return mul_table[i * size + j]; }
  bool has_order() const { return !order.empty(); }
  bool le(int i, int j) const { return order[i * size + j] != 0; }

  int power(int s, int k) const;
  bool is_idempotent(int s) const { return mul(s, s) == s; }
  std::vector<int> idempotents() const;
  /// Least m >= 1 with s^m idempotent for every s.
  int omega() const;
  int omega_power(int s) const { return power(s, omega()); }

  /// Throws MalformedInput when the table is not associative, the identity
  /// is not neutral, or the order is not a compatible partial order.
  void validate() const;
};

/// Surjective morphism alpha: A+ -> S given by letter images, together with
/// named accepting subsets (one per tracked language) and a shortest witness
/// word per element.
struct RecognizingMorphism {
  FiniteSemigroup target;
  Alphabet alphabet;
  std::vector<int> letter_image;                  // per alphabet index
  std::map<std::string, std::vector<char>> accepting_sets;
  std::vector<Word> witness;                      // per element, shortest-lex

  int image(const Word& w) const;
  bool in_set(const std::string& name, const Word& w) const;
};

/// Transition semigroup of a total DFA; elements are the distinct state
/// transformations of nonempty words in BFS discovery order. The accepting
/// set is stored under `name`.
std::pair<FiniteSemigroup, RecognizingMorphism> transition_semigroup(
    const Dfa& d, const std::string& name = "L");

/// Transition semigroup of the product automaton of x and y, with accepting
/// sets "L" and "Lp".
std::pair<FiniteSemigroup, RecognizingMorphism> product_recognizer(
    const Dfa& x, const Dfa& y);

/// Syntactic ordered semigroup of the language of d: transition semigroup of
/// the minimal DFA with s <= t iff xsy in F implies xty in F for all
/// contexts x, y over S with adjoined unit.
std::pair<FiniteSemigroup, RecognizingMorphism> syntactic_ordered_semigroup(
    const Dfa& d);

// --- omega-term identities ------------------------------------------------

/// A term is a concatenation of factors; each factor is a variable or an
/// omega power of a term. Variables are element variables ("x","y",...) or
/// idempotent variables ("e","f",...) ranging over E(S) only.
struct IdentityTerm {
  struct Factor;
  std::vector<Factor> factors;
};
struct IdentityTerm::Factor {
  std::string var;        // set when this factor is a variable
  bool idempotent_var = false;
  std::shared_ptr<IdentityTerm> omega_of;  // set when this is (term)^omega
};

struct IdentitySpec {
  IdentityTerm lhs, rhs;
  bool is_order = false;  // lhs <= rhs instead of lhs = rhs
};

/// Parses terms like "x^w.x", "(x.y)^w", "e" where '.' concatenates, "^w" is
/// the omega power, letters e,f are idempotent variables, others element
/// variables.
IdentityTerm parse_identity_term(const std::string& text);
IdentitySpec parse_identity(const std::string& text);  // "lhs = rhs" or "lhs <= rhs"

struct IdentityResult {
  bool holds = true;
  std::map<std::string, int> counterexample;  // variable -> element
};

/// Exhaustive check over all assignments (idempotent variables range over
/// E(S)). Throws MissingOrder for <= specs on unordered semigroups.
IdentityResult check_identity(const FiniteSemigroup& s, const IdentitySpec& spec);

/// Shipped presets: aperiodic, commutative, J, DA, D. A preset may bundle
/// several identities; all must hold.
std::vector<IdentitySpec> identity_preset(const std::string& name);
IdentityResult check_preset(const FiniteSemigroup& s, const std::string& name);

// --- codec ------------------------------------------------------------

FiniteSemigroup parse_semigroup(const std::string& text);
std::string serialize_semigroup(const FiniteSemigroup& s);

}  // namespace wfsep
