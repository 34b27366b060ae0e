#pragma once

#include <string>
#include <vector>

#include "wfsep/algebra.hpp"
#include "wfsep/separation.hpp"

namespace wfsep {

struct SelftestOptions {
  int max_len = 8;
  int max_k = 3;
  unsigned seed = 0;
  bool inject_beta_fault = false;  // mutation-testing hook
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  int checks = 0;
  std::string detail;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt);

/// Sample languages shared by the self-test battery, the test suite and the
/// documentation. All are total DFAs over {a,b} unless the name says
/// otherwise.
namespace corpus {
Dfa contains_aa();
Dfa contains_b();
Dfa even_a();        // (aa)+ over {a}
Dfa odd_a();         // a(aa)* over {a}
Dfa starts_a();      // aA*
Dfa starts_b();      // bA*
Dfa up_ab();         // upward closure of {ab}
Dfa just_b();        // {b}
Dfa just_ab();       // {ab}
Dfa a_plus();        // a+ over {a,b}
Dfa ab_star();       // ab* over {a,b}
Dfa empty_lang();    // empty over {a,b}
}  // namespace corpus

/// Fixed semidirect-product recognizers used by the algebra verification
/// battery: a language pair, a recognizer of the first language inside a
/// semidirect product with a suffix component, and the data to recast it
/// over the derived alphabet.
struct AlgebraInstance {
  std::string name;
  SemidirectProduct sd;
  std::vector<int> delta_letter;  // per alphabet index of the language pair
  std::vector<char> f;            // upward-closed subset of the product
  Dfa l;
  Dfa lp;
  FiniteSemigroup n;
  std::vector<int> inject;
};

std::vector<AlgebraInstance> algebra_instances();

/// All well-formed words with at most max_letters letters.
std::vector<WfWord> enumerate_well_formed(const WfContext& ctx,
                                          int max_letters);

/// All words over the alphabet with length in [1, max_len].
std::vector<Word> enumerate_words(const Alphabet& alphabet, int max_len);

}  // namespace wfsep
