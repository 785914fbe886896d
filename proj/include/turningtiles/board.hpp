#pragma once

// The playing field: a rectangular grid of tiles, each blank or showing
// Black, Blue, or Red, plus a set of shared neutral pieces. A move slides
// one piece in a straight line; every cell the piece enters must show the
// mover's own color and be unoccupied. The origin and all strictly
// intermediate cells flip to Black; the destination keeps its color.
//
// Text form, one row per line ('%' starts a comment line):
//   .  blank (no tile)        #  Black tile
//   b  Blue tile              r  Red tile
//   B  piece on Blue          R  piece on Red        X  piece on Black

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turningtiles/core.hpp"

namespace tt {

enum class TileState : unsigned char { Absent, Black, Blue, Red };

// The tile color a player may slide onto.
constexpr TileState player_color(Player p) {
  return p == Player::Left ? TileState::Blue : TileState::Red;
}

struct Cell {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Dir : unsigned char { North, East, South, West };

constexpr int row_step(Dir d) {
  return d == Dir::North ? -1 : d == Dir::South ? 1 : 0;
}
constexpr int col_step(Dir d) {
  return d == Dir::East ? 1 : d == Dir::West ? -1 : 0;
}

inline constexpr Dir all_dirs[4] = {Dir::North, Dir::East, Dir::South, Dir::West};

struct Move {
  Cell from;
  Dir dir = Dir::North;
  int dist = 0;
  friend constexpr bool operator==(const Move&, const Move&) = default;
};

class Board {
 public:
  Board(int width, int height) : width_(width), height_(height) {
    if (width <= 0 || height <= 0)
      throw std::invalid_argument("board dimensions must be positive");
    grid_.assign(static_cast<std::size_t>(width) * height, TileState::Absent);
  }

  int width() const { return width_; }
  int height() const { return height_; }

  bool in_bounds(Cell c) const {
    return c.row >= 0 && c.row < height_ && c.col >= 0 && c.col < width_;
  }

  TileState at(Cell c) const {
    check(c);
    return grid_[index(c)];
  }

  void set(Cell c, TileState t) {
    check(c);
    grid_[index(c)] = t;
  }

  // Pieces, always sorted in row-major order.
  const std::vector<Cell>& pieces() const { return pieces_; }

  bool occupied(Cell c) const {
    return std::binary_search(pieces_.begin(), pieces_.end(), c);
  }

  void add_piece(Cell c) {
    check(c);
    if (at(c) == TileState::Absent)
      throw std::invalid_argument("piece placed on a blank cell");
    const auto it = std::lower_bound(pieces_.begin(), pieces_.end(), c);
    if (it != pieces_.end() && *it == c)
      throw std::invalid_argument("cell already occupied");
    pieces_.insert(it, c);
  }

  void move_piece(Cell from, Cell to) {
    const auto it = std::lower_bound(pieces_.begin(), pieces_.end(), from);
    if (it == pieces_.end() || *it != from)
      throw std::invalid_argument("no piece on the source cell");
    pieces_.erase(it);
    pieces_.insert(std::lower_bound(pieces_.begin(), pieces_.end(), to), to);
  }

 private:
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.row) * width_ + c.col;
  }
  void check(Cell c) const {
    if (!in_bounds(c)) throw std::out_of_range("cell outside the board");
  }

  int width_;
  int height_;
  std::vector<TileState> grid_;
  std::vector<Cell> pieces_;
};

// Count of Blue and Red tiles (Black and blank cells are dead).
inline long colored_tiles(const Board& b) {
  long n = 0;
  for (int r = 0; r < b.height(); ++r)
    for (int c = 0; c < b.width(); ++c) {
      const TileState t = b.at({r, c});
      if (t == TileState::Blue || t == TileState::Red) ++n;
    }
  return n;
}

// ------------------------------------------------------------------- text

inline Board parse_board(std::string_view text) {
  struct Row {
    std::string_view chars;
    std::size_t offset;  // byte offset of the row start, for diagnostics
  };
  std::vector<Row> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(pos, end - pos);
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (!line.starts_with('%')) rows.push_back({line, pos});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  while (!rows.empty() && rows.back().chars.empty()) rows.pop_back();
  if (rows.empty()) throw ParseError("board has no rows", 0);

  const std::size_t width = rows.front().chars.size();
  for (const Row& row : rows) {
    if (row.chars.size() != width)
      throw ParseError("rows must all have the same length", row.offset);
  }
  if (width == 0) throw ParseError("board rows are empty", rows.front().offset);

  Board b(static_cast<int>(width), static_cast<int>(rows.size()));
  std::vector<Cell> pieces;
  for (int r = 0; r < b.height(); ++r) {
    for (int c = 0; c < b.width(); ++c) {
      const char ch = rows[r].chars[c];
      const Cell cell{r, c};
      switch (ch) {
        case '.': break;
        case '#': b.set(cell, TileState::Black); break;
        case 'b': b.set(cell, TileState::Blue); break;
        case 'r': b.set(cell, TileState::Red); break;
        case 'B': b.set(cell, TileState::Blue); pieces.push_back(cell); break;
        case 'R': b.set(cell, TileState::Red); pieces.push_back(cell); break;
        case 'X': b.set(cell, TileState::Black); pieces.push_back(cell); break;
        default:
          throw ParseError(std::string("unexpected character '") + ch + "'",
                           rows[r].offset + c);
      }
    }
  }
  for (Cell cell : pieces) b.add_piece(cell);
  return b;
}

inline std::string render_board(const Board& b) {
  std::string out;
  out.reserve(static_cast<std::size_t>(b.height()) * (b.width() + 1));
  for (int r = 0; r < b.height(); ++r) {
    for (int c = 0; c < b.width(); ++c) {
      const Cell cell{r, c};
      const TileState t = b.at(cell);
      char ch = '.';
      if (b.occupied(cell))
        ch = t == TileState::Blue ? 'B' : t == TileState::Red ? 'R' : 'X';
      else if (t == TileState::Black)
        ch = '#';
      else if (t == TileState::Blue)
        ch = 'b';
      else if (t == TileState::Red)
        ch = 'r';
      out += ch;
    }
    out += '\n';
  }
  return out;
}

// ------------------------------------------------------------------ moves

// All moves for `p`, ordered by piece (row-major), then direction
// (N, E, S, W), then sliding distance.
inline std::vector<Move> legal_moves(const Board& b, Player p) {
  const TileState color = player_color(p);
  std::vector<Move> out;
  for (const Cell from : b.pieces()) {
    for (const Dir d : all_dirs) {
      Cell c = from;
      for (int dist = 1;; ++dist) {
        c.row += row_step(d);
        c.col += col_step(d);
        if (!b.in_bounds(c) || b.at(c) != color || b.occupied(c)) break;
        out.push_back({from, d, dist});
      }
    }
  }
  return out;
}

// Play one move, validating it fully. The mover is implied by the color of
// the entered cells; the origin and all strictly intermediate cells flip to
// Black while the destination keeps its color.
inline Board apply_move(const Board& b, const Move& m) {
  if (m.dist < 1) throw MoveError("slide distance must be at least 1");
  if (!b.in_bounds(m.from) || !b.occupied(m.from))
    throw MoveError("no piece on the origin cell");
  const Cell first{m.from.row + row_step(m.dir), m.from.col + col_step(m.dir)};
  if (!b.in_bounds(first)) throw MoveError("move slides off the board");
  const TileState color = b.at(first);
  if (color != TileState::Blue && color != TileState::Red)
    throw MoveError("move enters a cell that shows neither player's color");
  Board next = b;
  Cell c = m.from;
  for (int step = 1; step <= m.dist; ++step) {
    c.row += row_step(m.dir);
    c.col += col_step(m.dir);
    if (!next.in_bounds(c)) throw MoveError("move slides off the board");
    if (next.at(c) != color)
      throw MoveError("move enters a cell that does not show the mover's color");
    if (next.occupied(c)) throw MoveError("move enters an occupied cell");
    if (step < m.dist) next.set(c, TileState::Black);
  }
  next.set(m.from, TileState::Black);
  next.move_piece(m.from, c);
  return next;
}

// ------------------------------------------------------- sum decomposition

// Split into independent subpositions: connected components (4-adjacency)
// of the live cells — Blue or Red tiles plus every occupied cell. Black and
// blank cells never take part in any future move, so they carry no edges.
// Components are cropped to their bounding boxes, in row-major discovery
// order; piece-free components have no moves at all and sum to zero.
inline std::vector<Board> components(const Board& b) {
  const auto live = [&](Cell c) {
    const TileState t = b.at(c);
    return t == TileState::Blue || t == TileState::Red || b.occupied(c);
  };
  std::vector<char> seen(static_cast<std::size_t>(b.width()) * b.height(), 0);
  const auto idx = [&](Cell c) {
    return static_cast<std::size_t>(c.row) * b.width() + c.col;
  };
  std::vector<Board> out;
  for (int r = 0; r < b.height(); ++r) {
    for (int c = 0; c < b.width(); ++c) {
      const Cell start{r, c};
      if (seen[idx(start)] || !live(start)) continue;
      std::vector<Cell> member;
      std::vector<Cell> queue{start};
      seen[idx(start)] = 1;
      while (!queue.empty()) {
        const Cell cur = queue.back();
        queue.pop_back();
        member.push_back(cur);
        for (const Dir d : all_dirs) {
          const Cell n{cur.row + row_step(d), cur.col + col_step(d)};
          if (!b.in_bounds(n) || seen[idx(n)] || !live(n)) continue;
          seen[idx(n)] = 1;
          queue.push_back(n);
        }
      }
      Cell lo = member.front(), hi = member.front();
      for (const Cell m : member) {
        lo.row = std::min(lo.row, m.row);
        lo.col = std::min(lo.col, m.col);
        hi.row = std::max(hi.row, m.row);
        hi.col = std::max(hi.col, m.col);
      }
      Board comp(hi.col - lo.col + 1, hi.row - lo.row + 1);
      for (const Cell m : member) {
        const Cell t{m.row - lo.row, m.col - lo.col};
        comp.set(t, b.at(m));
        if (b.occupied(m)) comp.add_piece(t);
      }
      out.push_back(std::move(comp));
    }
  }
  return out;
}

// ---------------------------------------------------------------- hashing

namespace detail {

// Stable per-cell key for incremental position hashing. `what` is the tile
// state for an unoccupied colored cell, or 4 for a piece.
constexpr std::uint64_t zkey(int row, int col, int what) {
  const std::uint64_t cell =
      (static_cast<std::uint64_t>(static_cast<std::uint32_t>(row)) << 32) |
      static_cast<std::uint32_t>(col);
  return mix64(mix64(cell) ^ (0x5bf03635u + static_cast<std::uint64_t>(what)));
}

inline constexpr int kPieceKey = 4;

}  // namespace detail

// Deterministic position hash, identical across runs. Cells that can never
// influence another move — blank cells, bare Black tiles, and the color
// underneath a piece (which flips to Black the moment the piece leaves) —
// are deliberately excluded, so play-equivalent positions share memo
// entries.
inline std::uint64_t board_hash(const Board& b) {
  std::uint64_t h = 0;
  for (int r = 0; r < b.height(); ++r)
    for (int c = 0; c < b.width(); ++c) {
      const TileState t = b.at({r, c});
      if ((t == TileState::Blue || t == TileState::Red) && !b.occupied({r, c}))
        h ^= detail::zkey(r, c, static_cast<int>(t));
    }
  for (const Cell p : b.pieces()) h ^= detail::zkey(p.row, p.col, detail::kPieceKey);
  return h;
}

}  // namespace tt
