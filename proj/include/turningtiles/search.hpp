#pragma once

// Exhaustive solvers for board positions: normal-play outcome, full game
// value extraction, and the hybrid board-versus-game difference search used
// to check a constructed board against its intended value.

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "turningtiles/board.hpp"
#include "turningtiles/core.hpp"
#include "turningtiles/game.hpp"

namespace tt {
namespace detail {

// A board being searched, with its position hash maintained incrementally
// under apply/undo so expanding an edge never rescans the grid.
class BoardState {
 public:
  explicit BoardState(const Board& b) : board_(b), hash_(board_hash(b)) {}

  const Board& board() const { return board_; }
  std::uint64_t hash() const { return hash_; }

  struct Undo {
    Cell from;
    Cell dest;
    std::vector<std::pair<Cell, TileState>> flipped;  // prior colors, origin first
  };

  // The move must be legal (taken from legal_moves); not re-validated here.
  Undo apply(const Move& m) {
    Undo u;
    u.from = m.from;
    u.flipped.reserve(static_cast<std::size_t>(m.dist));
    u.flipped.emplace_back(m.from, board_.at(m.from));
    hash_ ^= zkey(m.from.row, m.from.col, kPieceKey);
    Cell c = m.from;
    for (int step = 1; step <= m.dist; ++step) {
      c.row += row_step(m.dir);
      c.col += col_step(m.dir);
      const TileState t = board_.at(c);
      hash_ ^= zkey(c.row, c.col, static_cast<int>(t));
      if (step < m.dist) {
        u.flipped.emplace_back(c, t);
        board_.set(c, TileState::Black);
      }
    }
    hash_ ^= zkey(c.row, c.col, kPieceKey);  // destination keeps its color
    board_.set(m.from, TileState::Black);
    board_.move_piece(m.from, c);
    u.dest = c;
    return u;
  }

  void undo(const Undo& u) {
    board_.move_piece(u.dest, u.from);
    hash_ ^= zkey(u.dest.row, u.dest.col, kPieceKey);
    hash_ ^= zkey(u.dest.row, u.dest.col, static_cast<int>(board_.at(u.dest)));
    for (std::size_t i = u.flipped.size(); i-- > 0;) {
      const auto& [cell, prior] = u.flipped[i];
      board_.set(cell, prior);
      if (cell != u.from) hash_ ^= zkey(cell.row, cell.col, static_cast<int>(prior));
    }
    hash_ ^= zkey(u.from.row, u.from.col, kPieceKey);
  }

 private:
  Board board_;
  std::uint64_t hash_;
};

// Mutex-guarded hash-keyed cache shared by every search, so repeated
// queries over the same positions get cheaper across calls.
template <class V>
class LockedMap {
 public:
  std::optional<V> find(std::uint64_t key) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = map_.find(key); it != map_.end()) return it->second;
    return std::nullopt;
  }
  void put(std::uint64_t key, const V& value) {
    std::lock_guard<std::mutex> lock(mu_);
    memo_put(map_, key, value);
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::uint64_t, V> map_;
};

inline constexpr std::uint64_t kTurnSalt[2] = {mix64(0x6c65667421ull),
                                               mix64(0x7269676874ull)};

inline LockedMap<bool>& board_wins_memo() {
  static LockedMap<bool> memo;
  return memo;
}

inline LockedMap<Game>& board_game_memo() {
  static LockedMap<Game> memo;
  return memo;
}

// True iff `p`, moving first, wins the board under normal play.
inline bool board_wins(BoardState& st, Player p, BudgetMeter& meter) {
  const std::uint64_t key =
      st.hash() ^ kTurnSalt[p == Player::Right ? 1 : 0];
  if (const auto hit = board_wins_memo().find(key)) return *hit;
  meter.tick();
  DepthGuard guard;
  bool win = false;
  for (const Move& m : legal_moves(st.board(), p)) {
    const BoardState::Undo u = st.apply(m);
    const bool opponent_wins = board_wins(st, opponent(p), meter);
    st.undo(u);
    if (!opponent_wins) {
      win = true;
      break;
    }
  }
  board_wins_memo().put(key, win);
  return win;
}

inline Game board_game_rec(BoardState& st, BudgetMeter& meter) {
  if (const auto hit = board_game_memo().find(st.hash())) return *hit;
  meter.tick();
  DepthGuard guard;
  std::vector<Game> lefts, rights;
  for (const Move& m : legal_moves(st.board(), Player::Left)) {
    const BoardState::Undo u = st.apply(m);
    lefts.push_back(board_game_rec(st, meter));
    st.undo(u);
  }
  for (const Move& m : legal_moves(st.board(), Player::Right)) {
    const BoardState::Undo u = st.apply(m);
    rights.push_back(board_game_rec(st, meter));
    st.undo(u);
  }
  const Game g = make_game(std::move(lefts), std::move(rights));
  board_game_memo().put(st.hash(), g);
  return g;
}

}  // namespace detail

// Exact normal-play outcome of a board position.
inline Outcome outcome_board(const Board& b, const SearchLimits& limits = {},
                             SearchStats* stats = nullptr) {
  detail::BudgetMeter meter(limits, stats);
  detail::BoardState st(b);
  const bool left_first = detail::board_wins(st, Player::Left, meter);
  const bool right_first = detail::board_wins(st, Player::Right, meter);
  if (left_first) return right_first ? Outcome::N : Outcome::L;
  return right_first ? Outcome::R : Outcome::P;
}

// The game value of a board: options are the values of its successors.
// Independent components are solved separately and summed; a component
// without a piece has no moves at all and contributes zero.
inline Game board_to_game(const Board& b, const SearchLimits& limits = {},
                          SearchStats* stats = nullptr) {
  detail::BudgetMeter meter(limits, stats);
  const std::vector<Board> parts = components(b);
  if (parts.size() <= 1) {
    detail::BoardState st(b);
    return detail::board_game_rec(st, meter);
  }
  Game sum = zero();
  for (const Board& part : parts) {
    detail::BoardState st(part);
    sum = add(sum, detail::board_game_rec(st, meter));
  }
  return sum;
}

namespace detail {

// Alternating search over (board position, game position) pairs for the
// outcome of board + h. Memoized per call; h lives in the global arena, so
// its ids are stable key material.
struct DifferenceSearch {
  BoardState st;
  BudgetMeter& meter;
  std::unordered_map<std::uint64_t, bool> memo;

  bool wins(Game h, Player p) {
    const std::uint64_t key =
        st.hash() ^ mix64((static_cast<std::uint64_t>(h.id()) << 1) |
                          (p == Player::Right ? 1 : 0));
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    meter.tick();
    DepthGuard guard;
    const Player q = opponent(p);
    bool win = false;
    for (const Move& m : legal_moves(st.board(), p)) {
      const BoardState::Undo u = st.apply(m);
      const bool opponent_wins = wins(h, q);
      st.undo(u);
      if (!opponent_wins) {
        win = true;
        break;
      }
    }
    if (!win) {
      const auto& opts = p == Player::Left ? h.left_options() : h.right_options();
      for (const Game hp : opts) {
        if (!wins(hp, q)) {
          win = true;
          break;
        }
      }
    }
    memo_put(memo, key, win);
    return win;
  }
};

}  // namespace detail

// Outcome of the sum of a board and the negation of g, searched directly
// over (board, game) pairs without materializing the board's value. Equals
// outcome(add(board_to_game(b), negate(g))); P means the board equals g.
inline Outcome difference_outcome(const Board& b, Game g,
                                  const SearchLimits& limits = {},
                                  SearchStats* stats = nullptr) {
  detail::BudgetMeter meter(limits, stats);
  detail::DifferenceSearch search{detail::BoardState(b), meter, {}};
  const Game h = negate(g);
  const bool left_first = search.wins(h, Player::Left);
  const bool right_first = search.wins(h, Player::Right);
  if (left_first) return right_first ? Outcome::N : Outcome::L;
  return right_first ? Outcome::R : Outcome::P;
}

}  // namespace tt
