#pragma once

// Core vocabulary shared by the whole library: players, outcome classes,
// comparison relations, error types, and search budgets.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tt {

// ----------------------------------------------------------------- players

enum class Player : unsigned char { Left, Right };

constexpr Player opponent(Player p) {
  return p == Player::Left ? Player::Right : Player::Left;
}

// ---------------------------------------------------------------- outcomes

// Normal-play outcome classes: L (Left wins no matter who starts), R (Right
// wins), N (the next player to move wins), P (the previous player wins, i.e.
// the player to move loses).
enum class Outcome : unsigned char { L, N, P, R };

constexpr char outcome_char(Outcome o) {
  switch (o) {
    case Outcome::L: return 'L';
    case Outcome::N: return 'N';
    case Outcome::P: return 'P';
    case Outcome::R: return 'R';
  }
  return '?';
}

// Partial order on outcomes from Left's point of view: L > P > R and
// L > N > R, while P and N are incomparable.
constexpr bool outcome_leq(Outcome a, Outcome b) {
  if (a == b) return true;
  if (b == Outcome::L) return true;
  if (a == Outcome::R) return true;
  return false;
}

constexpr bool outcome_comparable(Outcome a, Outcome b) {
  return outcome_leq(a, b) || outcome_leq(b, a);
}

// --------------------------------------------------------------- relations

// Result of comparing two game values.
enum class Relation : unsigned char { Less, Equal, Greater, Confused };

constexpr const char* relation_text(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
    case Relation::Confused: return "||";
  }
  return "?";
}

// ------------------------------------------------------------------ errors

// Base class for every error reported by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (game expression or board description).
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position(position) {}
  std::size_t position;  // byte offset into the offending text
};

// A move that violates the movement rule.
struct MoveError : Error {
  using Error::Error;
};

// Base for all resource-limit errors; the CLI maps these to exit code 3.
struct BudgetError : Error {
  using Error::Error;
};

struct NodeBudgetError : BudgetError {
  NodeBudgetError(const std::string& what, std::uint64_t nodes)
      : BudgetError(what), nodes(nodes) {}
  std::uint64_t nodes;
};

struct TimeBudgetError : BudgetError {
  using BudgetError::BudgetError;
};

struct DepthLimitError : BudgetError {
  using BudgetError::BudgetError;
};

// Internal failure while laying out a compiled board; indicates a bug, not
// bad input.
struct LayoutError : Error {
  using Error::Error;
};

// ----------------------------------------------------------------- budgets

// Limits for the exhaustive board searches. Nodes are counted per top-level
// query; the clock starts when the query starts.
struct SearchLimits {
  std::uint64_t node_budget = 10'000'000;
  double time_budget_seconds = 120.0;
};

// Filled in by searches that accept an optional stats out-parameter.
struct SearchStats {
  std::uint64_t nodes = 0;
};

namespace detail {

// Counts expanded states and enforces SearchLimits. The wall clock is
// consulted once every kClockStride expansions to keep the hot path cheap.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchLimits& limits, SearchStats* stats = nullptr)
      : limits_(limits),
        stats_(stats),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(limits.time_budget_seconds))) {}

  ~BudgetMeter() {
    if (stats_) stats_->nodes = nodes_;
  }

  BudgetMeter(const BudgetMeter&) = delete;
  BudgetMeter& operator=(const BudgetMeter&) = delete;

  void tick() {
    ++nodes_;
    if (nodes_ > limits_.node_budget)
      throw NodeBudgetError(
          "node budget of " + std::to_string(limits_.node_budget) + " exhausted",
          nodes_);
    if (nodes_ % kClockStride == 0 && std::chrono::steady_clock::now() > deadline_)
      throw TimeBudgetError("time budget exhausted after " +
                            std::to_string(nodes_) + " nodes");
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::uint64_t kClockStride = 4096;

  SearchLimits limits_;
  SearchStats* stats_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point deadline_;
};

inline std::atomic<std::size_t>& depth_limit_ref() {
  static std::atomic<std::size_t> limit{100'000};
  return limit;
}

inline std::atomic<std::size_t>& memo_cap_ref() {
  static std::atomic<std::size_t> cap{SIZE_MAX};
  return cap;
}

// RAII guard incrementing a per-thread recursion depth counter; exceeding
// the configured limit raises DepthLimitError instead of overflowing the
// native stack.
class DepthGuard {
 public:
  DepthGuard() {
    if (++depth() > depth_limit_ref().load(std::memory_order_relaxed)) {
      --depth();
      throw DepthLimitError("recursion depth limit exceeded");
    }
  }
  ~DepthGuard() { --depth(); }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

 private:
  static std::size_t& depth() {
    thread_local std::size_t d = 0;
    return d;
  }
};

// Insert into a memo map unless the configured entry cap has been reached.
template <class Map, class Key, class Value>
void memo_put(Map& map, const Key& key, const Value& value) {
  if (map.size() < memo_cap_ref().load(std::memory_order_relaxed))
    map.emplace(key, value);
}

// 64-bit finalizer (splitmix64); the basis of all stable structural hashing.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace detail

// Maximum recursion depth for all recursive algorithms (default 1e5).
inline void set_depth_limit(std::size_t limit) { detail::depth_limit_ref() = limit; }
inline std::size_t depth_limit() { return detail::depth_limit_ref(); }

// Cap on entries per memoization cache (default: unbounded).
inline void set_memo_entry_cap(std::size_t cap) { detail::memo_cap_ref() = cap; }
inline std::size_t memo_entry_cap() { return detail::memo_cap_ref(); }

}  // namespace tt
