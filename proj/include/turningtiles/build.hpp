#pragma once

// The universality compiler: lay out, for any finite game value, a board
// with a single piece whose play value equals it, then verify the equality
// with the difference search.
//
// Geometry, per side of the root (east encodes Left options, west the
// mirror with colors swapped; x grows east, y grows south):
//
//   - A proponent-colored selection ray runs along y = 0 from the root to
//     the last designated stop; stop j is the first connection point of
//     option j.
//   - Above each stop a proponent-colored threat strip of length
//     penalty_len compels the opponent to answer the arrival at a stop by
//     pushing the piece one cell south onto the opponent-colored band at
//     y = 1 (the second connection point). The band is solid from x = 1 to
//     one past the last stop, so a piece parked anywhere on the ray can be
//     hauled off and dumped down the far flank below the band's east end.
//   - From the second point the proponent descends the landing column to
//     the third connection point at y = D, the root of the recursively
//     built option sub-board. Both sides of the landing are flanked by
//     opponent-colored punishment columns: stopping short is answered by a
//     one-cell yank into a flank, a dead end worth penalty_len free moves
//     to the opponent. The root-side flank is one row shorter than the
//     far-side one so that its foot never sits directly above the
//     sub-board's near ray, which would offer an escape back out.
//
// Stops are spaced so that the recursive bounding boxes, including their
// strips, stay at least box_margin blank cells apart. Tiles split into a
// penalty class (threat strips, flanks, landings — lengths scaling with
// penalty_len) and a core (ray, band, thirds, recursively); core counts do
// not depend on penalty_len, so a first pass with a placeholder length
// determines the exact core, and penalty_len = core + 1 makes every
// punishment strictly outweigh all play elsewhere.

#include <chrono>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turningtiles/board.hpp"
#include "turningtiles/canonical.hpp"
#include "turningtiles/core.hpp"
#include "turningtiles/game.hpp"
#include "turningtiles/notation.hpp"
#include "turningtiles/search.hpp"

namespace tt {

struct GadgetParams {
  std::optional<int> penalty_len_override;
  int stop_spacing = 2;   // minimum gap between designated stops
  int box_margin = 2;     // blank padding between sub-gadget bounding boxes
};

struct BuildReport {
  Board board{1, 1};
  long colored_tiles = 0;
  int penalty_len = 0;
  bool verified = false;
  std::uint64_t search_nodes = 0;
  double elapsed_seconds = 0.0;
  std::string error;  // non-empty when verification stopped early
};

// Length that makes a punishment strip strictly outweigh every alternative
// line of play among the core tiles.
inline int penalty_length(long core_colored) {
  if (core_colored < 0)
    throw std::invalid_argument("core tile count must be non-negative");
  return static_cast<int>(core_colored) + 1;
}

namespace detail {

// Sparse layout under construction, in gadget-local coordinates keyed
// (x, y); the root sits at (0, 0) and is never painted by the lanes.
struct Sketch {
  std::map<std::pair<int, int>, TileState> cells;
  long core = 0;
  bool empty = true;
  int xmin = 0, xmax = 0, ymin = 0, ymax = 0;

  void paint(int x, int y, TileState t, bool is_core) {
    if (!cells.emplace(std::make_pair(x, y), t).second)
      throw LayoutError("layout collision at (" + std::to_string(x) + ", " +
                        std::to_string(y) + ")");
    if (is_core) ++core;
    if (empty) {
      xmin = xmax = x;
      ymin = ymax = y;
      empty = false;
    } else {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }

  void merge(const Sketch& sub, int dx, int dy) {
    for (const auto& [xy, t] : sub.cells) paint(xy.first + dx, xy.second + dy, t, false);
    core += sub.core;
  }
};

inline Sketch lay_gadget(Game g, int penalty, int spacing, int margin);

// Options in a stable order independent of arena handle assignment.
inline std::vector<Game> ordered_options(const std::vector<Game>& opts) {
  std::vector<std::pair<std::pair<int, std::string>, Game>> keyed;
  keyed.reserve(opts.size());
  for (const Game g : opts)
    keyed.emplace_back(std::make_pair(birthday(g), format_canonical(g)), g);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Game> out;
  out.reserve(keyed.size());
  for (const auto& [key, g] : keyed) out.push_back(g);
  return out;
}

// One side's selection machinery plus its option sub-boards; s = +1 lays
// east (Left options), s = -1 west with the two colors swapped.
inline void lay_side(Sketch& sk, const std::vector<Game>& options, int s,
                     int penalty, int spacing, int margin) {
  if (options.empty()) return;
  const int depth = penalty + 2 + margin;  // y of the third connection points
  const TileState mine = s > 0 ? TileState::Blue : TileState::Red;
  const TileState theirs = s > 0 ? TileState::Red : TileState::Blue;

  std::vector<Sketch> subs;
  subs.reserve(options.size());
  for (const Game opt : options)
    subs.push_back(lay_gadget(opt, penalty, spacing, margin));

  // Designated stops: at least `spacing` apart, far enough out that each
  // sub-board (toward = its extent back toward the root) clears the root
  // column, and past the previous boxes (frontier) by the margin.
  std::vector<int> stops(subs.size());
  int frontier = 0;
  for (std::size_t j = 0; j < subs.size(); ++j) {
    const Sketch& sub = subs[j];
    const int toward = std::max(s > 0 ? -sub.xmin : sub.xmax, 1);
    const int away = std::max(s > 0 ? sub.xmax : -sub.xmin, 1);
    if (j == 0)
      stops[j] = std::max({spacing + 1, 3, 2 + toward});
    else
      stops[j] = std::max(stops[j - 1] + spacing + 1,
                          frontier + 1 + margin + toward);
    frontier = std::max({frontier, stops[j] + 1, stops[j] + away});
  }
  const int last = stops.back();

  for (int x = 1; x <= last; ++x) sk.paint(s * x, 0, mine, true);      // ray
  for (int x = 1; x <= last + 1; ++x) sk.paint(s * x, 1, theirs, true);  // band

  for (std::size_t j = 0; j < stops.size(); ++j) {
    const int x = stops[j];
    for (int y = 1; y <= penalty; ++y) sk.paint(s * x, -y, mine, false);
    for (int y = 2; y <= depth - 2; ++y) sk.paint(s * (x - 1), y, theirs, false);
    for (int y = 2; y <= depth - 1; ++y) sk.paint(s * (x + 1), y, theirs, false);
    for (int y = 2; y <= depth - 1; ++y) sk.paint(s * x, y, mine, false);
    sk.paint(s * x, depth, mine, true);  // third connection point
    sk.merge(subs[j], s * x, depth);
  }
}

inline Sketch lay_gadget(Game g, int penalty, int spacing, int margin) {
  DepthGuard guard;
  Sketch sk;
  lay_side(sk, ordered_options(g.left_options()), +1, penalty, spacing, margin);
  lay_side(sk, ordered_options(g.right_options()), -1, penalty, spacing, margin);
  return sk;
}

struct BuildResult {
  Board board;
  int penalty_len;
  long core;
};

inline BuildResult build_with_report(Game g, const GadgetParams& params,
                                     const SearchLimits& limits) {
  if (params.stop_spacing < 1) throw Error("stop_spacing must be positive");
  if (params.box_margin < 0) throw Error("box_margin must be non-negative");
  const int margin = std::max(params.box_margin, 1);
  const Game c = canonical_form(g);

  // Pass 1: placeholder strip length. Stop positions depend only on the
  // sub-board widths, which penalty_len never affects, so the core count
  // is exact.
  const long core = lay_gadget(c, 1, params.stop_spacing, margin).core;
  int penalty = penalty_length(core);
  if (params.penalty_len_override) {
    if (*params.penalty_len_override < penalty)
      throw Error("penalty_len_override must be at least " +
                  std::to_string(penalty) + " for this game");
    penalty = *params.penalty_len_override;
  }
  const Sketch sk = lay_gadget(c, penalty, params.stop_spacing, margin);

  const int xlo = std::min(sk.empty ? 0 : sk.xmin, 0);
  const int xhi = std::max(sk.empty ? 0 : sk.xmax, 0);
  const int ylo = std::min(sk.empty ? 0 : sk.ymin, 0);
  const int yhi = std::max(sk.empty ? 0 : sk.ymax, 0);
  const std::uint64_t area = static_cast<std::uint64_t>(xhi - xlo + 1) *
                             static_cast<std::uint64_t>(yhi - ylo + 1);
  if (area > limits.node_budget)
    throw NodeBudgetError("laid-out board of " + std::to_string(area) +
                              " cells exceeds the size budget",
                          area);

  Board b(xhi - xlo + 1, yhi - ylo + 1);
  for (const auto& [xy, t] : sk.cells)
    b.set({xy.second - ylo, xy.first - xlo}, t);
  const Cell root{-ylo, -xlo};
  if (b.at(root) != TileState::Absent)
    throw LayoutError("root cell was painted by a lane");
  b.set(root, TileState::Black);
  b.add_piece(root);
  return {std::move(b), penalty, core};
}

}  // namespace detail

// Compile a game into a single-piece board of equal value. Deterministic:
// the same value and parameters give a bit-identical board.
inline Board build_board(Game g, const GadgetParams& params = {},
                         const SearchLimits& limits = {}) {
  return detail::build_with_report(g, params, limits).board;
}

// Build and then check, via the difference search, that the board's value
// equals g. A budget failure during the check leaves a partial report with
// `error` set; build failures propagate.
inline BuildReport verify_build(Game g, const GadgetParams& params = {},
                                const SearchLimits& limits = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  detail::BuildResult built = detail::build_with_report(g, params, limits);
  BuildReport rep;
  rep.board = std::move(built.board);
  rep.penalty_len = built.penalty_len;
  rep.colored_tiles = colored_tiles(rep.board);
  SearchStats stats;
  try {
    rep.verified =
        difference_outcome(rep.board, canonical_form(g), limits, &stats) ==
        Outcome::P;
  } catch (const BudgetError& e) {
    rep.error = e.what();
  }
  rep.search_nodes = stats.nodes;
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

// Line-oriented key:value block; the board itself is emitted separately in
// the board text format.
inline std::string serialize(const BuildReport& rep) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", rep.elapsed_seconds);
  std::string out;
  out += "verified: " + std::string(rep.verified ? "true" : "false") + "\n";
  out += "colored_tiles: " + std::to_string(rep.colored_tiles) + "\n";
  out += "penalty_len: " + std::to_string(rep.penalty_len) + "\n";
  out += "width: " + std::to_string(rep.board.width()) + "\n";
  out += "height: " + std::to_string(rep.board.height()) + "\n";
  out += "search_nodes: " + std::to_string(rep.search_nodes) + "\n";
  out += "elapsed_seconds: " + std::string(elapsed) + "\n";
  if (!rep.error.empty()) out += "error: " + rep.error + "\n";
  return out;
}

}  // namespace tt
