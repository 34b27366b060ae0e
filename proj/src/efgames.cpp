#include "wfsep/efgames.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace wfsep {

namespace {

void check_limits(const Word& u, const Word& up, int k,
                  const GameLimits& limits) {
  if (k > limits.max_k) throw BoundExceeded("rank exceeds the configured bound");
  if (static_cast<int>(u.size()) > limits.max_len ||
      static_cast<int>(up.size()) > limits.max_len)
    throw BoundExceeded("word length exceeds the configured bound");
  if (u.empty() || up.empty())
    throw MalformedInput("game words must be nonempty");
}

// relation of position y to position x: -1 below, 0 equal, 1 above;
// successor flags folded in when enriched
int move_signature(int x, int y, bool enriched) {
  int sig = y < x ? -1 : (y > x ? 1 : 0);
  if (enriched) {
    if (y == x + 1) sig = 2;
    if (x == y + 1) sig = -2;
  }
  return sig;
}

struct Fo2Game {
  const Word& u;
  const Word& up;
  bool enriched;
  std::map<std::tuple<int, int, int>, bool> memo;

  bool duplicator_wins(int x, int xp, int rounds) {
    if (rounds == 0) return true;
    auto key = std::make_tuple(x, xp, rounds);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool win = true;
    // Spoiler moves in u (side 0) or up (side 1)
    for (int side = 0; side < 2 && win; ++side) {
      const Word& sw = side == 0 ? u : up;
      const Word& dw = side == 0 ? up : u;
      int sx = side == 0 ? x : xp;
      int dx = side == 0 ? xp : x;
      for (int y = 0; y < static_cast<int>(sw.size()) && win; ++y) {
        int sig = move_signature(sx, y, enriched);
        bool answered = false;
        for (int yp = 0; yp < static_cast<int>(dw.size()) && !answered; ++yp) {
          if (dw[yp] != sw[y]) continue;
          if (move_signature(dx, yp, enriched) != sig) continue;
          int nx = side == 0 ? y : yp;
          int nxp = side == 0 ? yp : y;
          if (duplicator_wins(nx, nxp, rounds - 1)) answered = true;
        }
        if (!answered) win = false;
      }
    }
    memo[key] = win;
    return win;
  }
};

}  // namespace

bool fo2_equiv(const Word& u, const Word& up, int k, bool enriched,
               const GameLimits& limits) {
  check_limits(u, up, k, limits);
  if (u[0] != up[0]) return false;
  Fo2Game game{u, up, enriched, {}};
  return game.duplicator_wins(0, 0, k);
}

namespace {

struct SigmaGame {
  const Word& u;
  const Word& up;
  int n;
  bool enriched;
  // key: pairs sorted by u-position, alternations used, active side, rounds
  std::map<std::tuple<std::vector<std::pair<int, int>>, int, int, int>, bool>
      memo;

  bool pair_consistent(const std::vector<std::pair<int, int>>& pairs, int a,
                       int b) const {
    if (u[a] != up[b]) return false;
    if (enriched) {
      if ((a == 0) != (b == 0)) return false;
      if ((a + 1 == static_cast<int>(u.size())) !=
          (b + 1 == static_cast<int>(up.size())))
        return false;
    }
    for (auto [c, d] : pairs) {
      if ((a < c) != (b < d) || (a == c) != (b == d)) return false;
      if (enriched && ((a + 1 == c) != (b + 1 == d) || (c + 1 == a) != (d + 1 == b)))
        return false;
    }
    return true;
  }

  // answer-ordering heuristic: prefer answers whose capped distances to the
  // word ends and to the existing pebbles match the spoiler move; ordering
  // only, the search remains exhaustive
  std::vector<int> ordered_answers(
      const std::vector<std::pair<int, int>>& pairs, int spoiler_side, int p,
      int rounds) const {
    const Word& sw = spoiler_side == 0 ? u : up;
    const Word& dw = spoiler_side == 0 ? up : u;
    int cap = 1 << std::min(rounds + 1, 20);
    auto capped = [&](long long v) {
      return static_cast<int>(std::clamp(v, -static_cast<long long>(cap),
                                         static_cast<long long>(cap)));
    };
    auto profile = [&](const Word& w, int pos, bool spoiler) {
      std::vector<int> pr;
      pr.push_back(capped(pos));
      pr.push_back(capped(static_cast<int>(w.size()) - 1 - pos));
      for (auto [c, d] : pairs) {
        int peb = spoiler == (spoiler_side == 0) ? c : d;
        pr.push_back(capped(static_cast<long long>(pos) - peb));
      }
      return pr;
    };
    std::vector<int> sp = profile(sw, p, true);
    std::vector<std::pair<int, int>> scored;
    for (int q = 0; q < static_cast<int>(dw.size()); ++q) {
      std::vector<int> dp = profile(dw, q, false);
      int score = 0;
      for (size_t i = 0; i < sp.size(); ++i) score += sp[i] != dp[i];
      scored.emplace_back(score, q);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<int> out;
    for (auto& [s, q] : scored) out.push_back(q);
    return out;
  }

  // Duplicator answers the whole quantifier block at once; backtracking
  // search for a mutually consistent answer tuple whose continuation wins.
  bool assign_block(const std::vector<int>& block, size_t i,
                    std::vector<std::pair<int, int>>& pairs, int side, int c,
                    int rounds_left) {
    if (i == block.size())
      return c >= n - 1 ||
             duplicator_wins(pairs, c + 1, 1 - side, rounds_left);
    for (int q : ordered_answers(pairs, side, block[i], rounds_left + 1)) {
      int a = side == 0 ? block[i] : q;
      int b = side == 0 ? q : block[i];
      if (!pair_consistent(pairs, a, b)) continue;
      pairs.emplace_back(a, b);
      bool ok = assign_block(block, i + 1, pairs, side, c, rounds_left);
      pairs.pop_back();
      if (ok) return true;
    }
    return false;
  }

  bool duplicator_wins(std::vector<std::pair<int, int>> pairs, int c,
                       int active, int rounds) {
    if (rounds == 0) return true;
    std::sort(pairs.begin(), pairs.end());
    auto key = std::make_tuple(pairs, c, active, rounds);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const Word& sw = active == 0 ? u : up;
    std::vector<int> fresh;
    for (int p = 0; p < static_cast<int>(sw.size()); ++p) {
      bool pebbled = false;
      for (auto [a, b] : pairs)
        if ((active == 0 ? a : b) == p) pebbled = true;
      if (!pebbled) fresh.push_back(p);
    }
    // Spoiler picks any nonempty block of fresh positions in the active word
    std::vector<int> block;
    std::function<bool(int)> spoiler_wins = [&](int start) {
      if (!block.empty()) {
        auto trial = pairs;
        if (!assign_block(block, 0, trial, active, c,
                          rounds - static_cast<int>(block.size())))
          return true;
      }
      if (static_cast<int>(block.size()) == rounds) return false;
      for (int i = start; i < static_cast<int>(fresh.size()); ++i) {
        block.push_back(fresh[i]);
        bool won = spoiler_wins(i + 1);
        block.pop_back();
        if (won) return true;
      }
      return false;
    };
    bool win = !spoiler_wins(0);
    // Spoiler may also leave the block empty and switch immediately
    if (win && c < n - 1)
      win = duplicator_wins(pairs, c + 1, 1 - active, rounds);
    memo[key] = win;
    return win;
  }
};

}  // namespace

bool sigma_preorder(const Word& u, const Word& up, int n, int k, bool enriched,
                    const GameLimits& limits) {
  check_limits(u, up, k, limits);
  if (n < 1) throw MalformedInput("alternation bound must be at least 1");
  SigmaGame game{u, up, n, enriched, {}};
  return game.duplicator_wins({}, 0, 0, k);
}

bool bsigma_equiv(const Word& u, const Word& up, int n, int k, bool enriched,
                  const GameLimits& limits) {
  return sigma_preorder(u, up, n, k, enriched, limits) &&
         sigma_preorder(up, u, n, k, enriched, limits);
}

namespace {

void collect_subwords(const Word& w, size_t from, int k, Word& cur,
                      std::set<Word>& out) {
  if (!cur.empty()) out.insert(cur);
  if (static_cast<int>(cur.size()) == k) return;
  for (size_t i = from; i < w.size(); ++i) {
    cur.push_back(w[i]);
    collect_subwords(w, i + 1, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool subword_profile_preorder(const Word& u, const Word& up, int k,
                              const GameLimits& limits) {
  check_limits(u, up, k, limits);
  std::set<Word> subs;
  Word cur;
  collect_subwords(u, 0, k, cur, subs);
  for (const auto& s : subs)
    if (!is_scattered_subword(s, up)) return false;
  return true;
}

}  // namespace wfsep
