#pragma once

// Interned partizan games and the exact algebra on them: construction,
// negation, disjunctive sum, outcome computation, and comparison.
//
// Every structurally distinct game is stored exactly once in a process-wide
// arena; a Game value is a 32-bit handle into it. Handle equality therefore
// decides structural identity, while game-value equality is
// compare(g, h) == Relation::Equal. Option sets are kept sorted by handle
// and deduplicated, so two games with equal option sets share a handle.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "turningtiles/core.hpp"

namespace tt {

class Game;
Game make_game(std::vector<Game> lefts, std::vector<Game> rights);

namespace detail {
class Arena;
}

class Game {
 public:
  constexpr Game() = default;  // the terminal game 0 = {|}

  constexpr std::uint32_t id() const { return id_; }
  const std::vector<Game>& left_options() const;
  const std::vector<Game>& right_options() const;

  // Structural identity, not value equality; use compare() for values.
  friend constexpr bool operator==(Game a, Game b) { return a.id_ == b.id_; }
  friend constexpr bool operator!=(Game a, Game b) { return a.id_ != b.id_; }

 private:
  friend class detail::Arena;
  explicit constexpr Game(std::uint32_t id) : id_(id) {}

  std::uint32_t id_ = 0;
};

inline Game zero() { return Game(); }

namespace detail {

class Arena {
 public:
  static Arena& instance() {
    static Arena arena;
    return arena;
  }

  Game intern(std::vector<Game> lefts, std::vector<Game> rights) {
    sort_unique(lefts);
    sort_unique(rights);
    const std::uint64_t h = hash_options(lefts, rights);
    std::unique_lock lock(mu_);
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      const Node& n = nodes_[it->second];
      if (n.lefts == lefts && n.rights == rights) return Game(it->second);
    }
    nodes_.push_back(Node{std::move(lefts), std::move(rights)});
    const auto id = static_cast<std::uint32_t>(nodes_.size() - 1);
    index_.emplace(h, id);
    return Game(id);
  }

  const std::vector<Game>& lefts(std::uint32_t id) const {
    std::shared_lock lock(mu_);
    return nodes_[id].lefts;  // deque elements never move; safe after unlock
  }

  const std::vector<Game>& rights(std::uint32_t id) const {
    std::shared_lock lock(mu_);
    return nodes_[id].rights;
  }

  static void sort_unique(std::vector<Game>& v) {
    std::sort(v.begin(), v.end(),
              [](Game a, Game b) { return a.id() < b.id(); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

 private:
  struct Node {
    std::vector<Game> lefts, rights;  // sorted by handle, deduplicated
  };

  Arena() { intern({}, {}); }  // handle 0 is the terminal game

  static std::uint64_t hash_options(const std::vector<Game>& lefts,
                                    const std::vector<Game>& rights) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (Game g : lefts) h = mix64(h ^ g.id());
    h = mix64(~h);  // separates {a|} from {|a}
    for (Game g : rights) h = mix64(h ^ g.id());
    return h;
  }

  mutable std::shared_mutex mu_;
  std::deque<Node> nodes_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
};

}  // namespace detail

inline const std::vector<Game>& Game::left_options() const {
  return detail::Arena::instance().lefts(id_);
}

inline const std::vector<Game>& Game::right_options() const {
  return detail::Arena::instance().rights(id_);
}

// The interned game with exactly the given option sets (duplicates removed);
// make_game({}, {}) is the terminal game 0.
inline Game make_game(std::vector<Game> lefts, std::vector<Game> rights) {
  return detail::Arena::instance().intern(std::move(lefts), std::move(rights));
}

// True iff g and h are the same interned structure.
inline bool identical(Game g, Game h) { return g == h; }

// -g: swap the roles of the players throughout the tree.
inline Game negate(Game g) {
  static std::unordered_map<std::uint32_t, Game> cache;
  static std::mutex mu;
  detail::DepthGuard guard;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(g.id()); it != cache.end()) return it->second;
  }
  std::vector<Game> lefts, rights;
  lefts.reserve(g.right_options().size());
  rights.reserve(g.left_options().size());
  for (Game r : g.right_options()) lefts.push_back(negate(r));
  for (Game l : g.left_options()) rights.push_back(negate(l));
  const Game result = make_game(std::move(lefts), std::move(rights));
  {
    std::lock_guard lock(mu);
    detail::memo_put(cache, g.id(), result);
    detail::memo_put(cache, result.id(), g);  // negation is an involution
  }
  return result;
}

// Disjunctive sum: a move in g + h is a move in exactly one summand.
inline Game add(Game g, Game h) {
  static std::unordered_map<std::uint64_t, Game> cache;
  static std::mutex mu;
  detail::DepthGuard guard;
  if (g == zero()) return h;
  if (h == zero()) return g;
  // the sum is commutative, so normalize the cache key
  const std::uint32_t a = std::min(g.id(), h.id());
  const std::uint32_t b = std::max(g.id(), h.id());
  const std::uint64_t key = (std::uint64_t(a) << 32) | b;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<Game> lefts, rights;
  for (Game gl : g.left_options()) lefts.push_back(add(gl, h));
  for (Game hl : h.left_options()) lefts.push_back(add(g, hl));
  for (Game gr : g.right_options()) rights.push_back(add(gr, h));
  for (Game hr : h.right_options()) rights.push_back(add(g, hr));
  const Game result = make_game(std::move(lefts), std::move(rights));
  {
    std::lock_guard lock(mu);
    detail::memo_put(cache, key, result);
  }
  return result;
}

namespace detail {

// Whether `p`, moving first in g, wins under normal play.
inline bool wins_moving_first(Game g, Player p) {
  static std::unordered_map<std::uint64_t, bool> cache;
  static std::mutex mu;
  DepthGuard guard;
  const std::uint64_t key =
      (std::uint64_t(g.id()) << 1) | (p == Player::Right ? 1 : 0);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto& options =
      p == Player::Left ? g.left_options() : g.right_options();
  bool wins = false;
  for (Game o : options) {
    if (!wins_moving_first(o, opponent(p))) {
      wins = true;
      break;
    }
  }
  {
    std::lock_guard lock(mu);
    memo_put(cache, key, wins);
  }
  return wins;
}

}  // namespace detail

// Exact normal-play outcome of g.
inline Outcome outcome(Game g) {
  const bool lf = detail::wins_moving_first(g, Player::Left);
  const bool rf = detail::wins_moving_first(g, Player::Right);
  if (lf && rf) return Outcome::N;
  if (lf) return Outcome::L;
  if (rf) return Outcome::R;
  return Outcome::P;
}

// Value comparison through the outcome of the difference g - h:
// P means equal, L greater, R less, N confused (incomparable).
inline Relation compare(Game g, Game h) {
  switch (outcome(add(g, negate(h)))) {
    case Outcome::P: return Relation::Equal;
    case Outcome::L: return Relation::Greater;
    case Outcome::R: return Relation::Less;
    case Outcome::N: return Relation::Confused;
  }
  return Relation::Confused;  // unreachable
}

inline bool leq(Game g, Game h) {
  const Relation r = compare(g, h);
  return r == Relation::Less || r == Relation::Equal;
}

inline bool geq(Game g, Game h) {
  const Relation r = compare(g, h);
  return r == Relation::Greater || r == Relation::Equal;
}

// Height of the game tree: 0 for the terminal game.
inline int birthday(Game g) {
  static std::unordered_map<std::uint32_t, int> cache;
  static std::mutex mu;
  detail::DepthGuard guard;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(g.id()); it != cache.end()) return it->second;
  }
  int b = 0;
  for (Game l : g.left_options()) b = std::max(b, birthday(l) + 1);
  for (Game r : g.right_options()) b = std::max(b, birthday(r) + 1);
  {
    std::lock_guard lock(mu);
    detail::memo_put(cache, g.id(), b);
  }
  return b;
}

}  // namespace tt

template <>
struct std::hash<tt::Game> {
  std::size_t operator()(tt::Game g) const noexcept { return g.id(); }
};
