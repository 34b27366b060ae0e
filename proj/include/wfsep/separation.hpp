#pragma once

#include <functional>
#include <memory>
#include <string>

#include "wfsep/efgames.hpp"
#include "wfsep/wellformed.hpp"

namespace wfsep {

struct Reduction {
  WfContext ctx;
  Dfa lang;    // derived-alphabet language of L
  Dfa lang_p;  // derived-alphabet language of L'
};

/// Shared-morphism reduction: both languages recast over the derived
/// alphabet of their product recognizer.
Reduction reduce(const Dfa& l, const Dfa& lp);

struct SeparationVerdict {
  bool separable = false;
  std::string logic;
  Dfa separator;  // valid iff separable

  // inseparability data (valid iff !separable)
  Word witness;            // shortest word in the closure overlap
  WfWord wf_witness;       // derived-level witness in L'
  WfWord wf_witness_l;     // derived-level word of L embedded in wf_witness
  std::shared_ptr<const WfContext> ctx;  // set by the enriched pipeline
};

/// Sigma-1 separation over <: the canonical candidate is the subword upward
/// closure of L; separable iff that closure misses L'.
SeparationVerdict sigma1_separates(const Dfa& l, const Dfa& lp);

/// Sigma-1 separation over <,+1,min,max via the well-formed-word reduction;
/// separable verdicts carry an exactly verified separator over A.
SeparationVerdict sigma1_plus_separates(const Dfa& l, const Dfa& lp);

bool membership_sigma1(const Dfa& l);
bool membership_sigma1_plus(const Dfa& l);

/// Runs the base decider on the derived language of L (against its
/// complement within nonempty words). Correct only for fragments in which
/// well-formedness is definable; exposed for diagnostics.
bool transfer_membership(const Dfa& l,
                         const std::function<bool(const Dfa&)>& base_decider);

/// Shortest word of lang embedded in w as a scattered subword; throws when
/// none exists.
Word embedded_subword_witness(const Dfa& lang, const Word& w);

/// Subword-minimal basis of an upward-closed language.
std::vector<Word> minimal_patterns(const Dfa& u);

/// Concrete word pair witnessing rank-k inseparability, obtained by
/// expanding the derived-level witnesses with exponent 2^(k+1).
std::pair<Word, Word> witness_pairs(const SeparationVerdict& v, int k);

/// Bounded diagnostic: do L and L' share a reachable profile of scattered
/// subwords of length <= k?
bool bsigma1_profile_check(const Dfa& l, const Dfa& lp, int k,
                           int max_k = 3);

}  // namespace wfsep
