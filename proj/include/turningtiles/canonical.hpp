#pragma once

// Reduction of games to canonical form: remove dominated options and bypass
// reversible ones until neither rule applies, recursively. Equal games have
// structurally identical canonical forms, so the canonical handle doubles as
// a value certificate.

#include <cstddef>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "turningtiles/game.hpp"

namespace tt {
namespace detail {

// Drop options with a strictly better sibling ("worse" is Less for Left
// options, Greater for Right options). Equal-valued canonical siblings are
// identical and were already merged by interning, so only strict domination
// can occur here.
inline bool drop_dominated(std::vector<Game>& opts, Relation worse) {
  bool changed = false;
  for (std::size_t i = 0; i < opts.size();) {
    bool drop = false;
    for (std::size_t j = 0; j < opts.size() && !drop; ++j)
      drop = i != j && compare(opts[i], opts[j]) == worse;
    if (drop) {
      opts.erase(opts.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
    } else {
      ++i;
    }
  }
  return changed;
}

// Bypass at most one reversible Left option: if some gl has a Right option
// glr with glr <= g, the opponent would answer gl with glr at no cost, so gl
// may be replaced by glr's Left options without changing the value of g.
inline bool bypass_reversible_left(std::vector<Game>& lefts, Game g) {
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    for (Game glr : lefts[i].right_options()) {
      if (!leq(glr, g)) continue;
      const std::vector<Game> repl = glr.left_options();
      lefts.erase(lefts.begin() + static_cast<std::ptrdiff_t>(i));
      lefts.insert(lefts.end(), repl.begin(), repl.end());
      Arena::sort_unique(lefts);
      return true;
    }
  }
  return false;
}

inline bool bypass_reversible_right(std::vector<Game>& rights, Game g) {
  for (std::size_t i = 0; i < rights.size(); ++i) {
    for (Game grl : rights[i].left_options()) {
      if (!geq(grl, g)) continue;
      const std::vector<Game> repl = grl.right_options();
      rights.erase(rights.begin() + static_cast<std::ptrdiff_t>(i));
      rights.insert(rights.end(), repl.begin(), repl.end());
      Arena::sort_unique(rights);
      return true;
    }
  }
  return false;
}

}  // namespace detail

// The unique simplest game equal in value to g.
inline Game canonical_form(Game g) {
  static std::unordered_map<std::uint32_t, Game> cache;
  static std::mutex mu;
  detail::DepthGuard guard;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(g.id()); it != cache.end()) return it->second;
  }
  std::vector<Game> lefts, rights;
  lefts.reserve(g.left_options().size());
  rights.reserve(g.right_options().size());
  for (Game l : g.left_options()) lefts.push_back(canonical_form(l));
  for (Game r : g.right_options()) rights.push_back(canonical_form(r));
  detail::Arena::sort_unique(lefts);
  detail::Arena::sort_unique(rights);
  for (;;) {
    if (detail::drop_dominated(lefts, Relation::Less)) continue;
    if (detail::drop_dominated(rights, Relation::Greater)) continue;
    if (detail::bypass_reversible_left(lefts, g)) continue;
    if (detail::bypass_reversible_right(rights, g)) continue;
    break;
  }
  const Game result = make_game(std::move(lefts), std::move(rights));
  {
    std::lock_guard lock(mu);
    detail::memo_put(cache, g.id(), result);
    detail::memo_put(cache, result.id(), result);
  }
  return result;
}

}  // namespace tt
