#pragma once

// Constructors for the standard named game values: numbers, nimbers, ups
// and downs, switches, and the tiny/miny pairs. Each constructor returns
// the canonical structural form of its value.

#include <stdexcept>
#include <vector>

#include "turningtiles/dyadic.hpp"
#include "turningtiles/game.hpp"

namespace tt {

// Simplest-form game for a dyadic number: 0 = {|}, n = {n-1|}, -n = {|-n+1},
// and m/2^k = {(m-1)/2^k | (m+1)/2^k} with both options simpler.
inline Game number(const DyadicRational& value) {
  detail::DepthGuard guard;
  if (value.is_integer()) {
    const long long n = value.numerator();
    if (n == 0) return zero();
    if (n > 0) return make_game({number(DyadicRational(n - 1))}, {});
    return make_game({}, {number(DyadicRational(n + 1))});
  }
  return make_game(
      {number(DyadicRational(value.numerator() - 1, value.exponent()))},
      {number(DyadicRational(value.numerator() + 1, value.exponent()))});
}

// Nimber *n = {0, *, ..., *(n-1) | same}; star(0) is 0 and star(1) is *.
inline Game star(int n = 1) {
  if (n < 0) throw std::invalid_argument("star: index must be non-negative");
  detail::DepthGuard guard;
  std::vector<Game> opts;
  opts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) opts.push_back(star(k));
  std::vector<Game> rights = opts;
  return make_game(std::move(opts), std::move(rights));
}

// n-fold up: ^ = {0|*}, ^* = {0,*|0}, and for n >= 2 the canonical forms
// ^n = {0|^(n-1)*} and ^n* = {0|^(n-1)} of the n-term sums.
inline Game up(int n = 1, bool with_star = false) {
  if (n < 1) throw std::invalid_argument("up: multiple must be positive");
  detail::DepthGuard guard;
  if (n == 1) {
    if (with_star) return make_game({zero(), star()}, {zero()});
    return make_game({zero()}, {star()});
  }
  return make_game({zero()}, {up(n - 1, !with_star)});
}

inline Game down(int n = 1, bool with_star = false) { return negate(up(n, with_star)); }

// The switch {a|b}; hot when a > b.
inline Game switch_game(Game a, Game b) { return make_game({a}, {b}); }

// tiny(d) = {0 | {0 | -d}} for d > 0: a positive infinitesimal smaller than
// every positive number.
inline Game tiny(const DyadicRational& d) {
  if (!(DyadicRational(0) < d))
    throw std::invalid_argument("tiny: argument must be positive");
  return make_game({zero()}, {make_game({zero()}, {number(-d)})});
}

inline Game miny(const DyadicRational& d) { return negate(tiny(d)); }

}  // namespace tt
