#pragma once

#include "wfsep/automata.hpp"

namespace wfsep {

struct GameLimits {
  int max_k = 4;
  int max_len = 16;
};

/// Two-pebble game with one pebble per word, both starting on the first
/// positions (equal labels required). Each round Spoiler moves one pebble;
/// Duplicator moves the other preserving the new label and the relation of
/// the new position to the old one (<, >, =, and both successor orientations
/// when enriched).
bool fo2_equiv(const Word& u, const Word& up, int k, bool enriched,
               const GameLimits& limits = {});

/// Alternation-bounded game: pebbles never move once placed; u starts
/// active; Spoiler may change words only while fewer than n-1 changes have
/// happened. Duplicator maintains a partial isomorphism on labels and <
/// (plus successor and the endpoint predicates when enriched).
bool sigma_preorder(const Word& u, const Word& up, int n, int k, bool enriched,
                    const GameLimits& limits = {});

bool bsigma_equiv(const Word& u, const Word& up, int n, int k, bool enriched,
                  const GameLimits& limits = {});

/// Independent oracle for the unenriched n=1 preorder: every scattered
/// subword of u of length <= k is a scattered subword of up.
bool subword_profile_preorder(const Word& u, const Word& up, int k,
                              const GameLimits& limits = {});

}  // namespace wfsep
