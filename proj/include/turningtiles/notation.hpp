#pragma once

// Textual game expressions: a small LL(1) language covering braces, dyadic
// numbers, nimbers, ups/downs, and tiny/miny, plus sums and differences.
//
//   expr   := term (("+" | "-") term)*
//   term   := ["-"] atom
//   atom   := braces | number | "*" [int] | "^" [int] ["*"] | "v" [int] ["*"]
//           | "tiny(" number ")" | "miny(" number ")"
//   braces := "{" list "|" list "}"
//   list   := [expr ("," expr)*]
//   number := int ["/" int]          (denominator a positive power of two)
//
// The language is whitespace-insensitive. format() prints the canonical
// form of a game using the same shorthand the parser accepts, so
// parse(format(g)) is always equal to g (and identical for canonical g).

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turningtiles/canonical.hpp"
#include "turningtiles/dyadic.hpp"
#include "turningtiles/game.hpp"
#include "turningtiles/named.hpp"

namespace tt {
namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Game run() {
    const Game g = parse_expr();
    if (peek() != '\0') fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  // Next significant character without consuming it; '\0' at end of input.
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Game parse_expr() {
    DepthGuard guard;
    Game acc = parse_term();
    for (;;) {
      if (eat('+'))
        acc = add(acc, parse_term());
      else if (eat('-'))
        acc = add(acc, negate(parse_term()));
      else
        return acc;
    }
  }

  Game parse_term() {
    if (eat('-')) return negate(parse_atom());
    return parse_atom();
  }

  Game parse_atom() {
    DepthGuard guard;
    const char c = peek();
    if (c == '{') return parse_braces();
    if (c == '*') {
      ++pos_;
      return star(opt_count(1));
    }
    if (c == '^' || c == 'v') {
      ++pos_;
      const int n = opt_count(1);
      if (n < 1) fail("repetition count must be positive");
      const bool with_star = eat('*');
      return c == '^' ? up(n, with_star) : down(n, with_star);
    }
    if (c == 't' || c == 'm') return parse_tiny_miny();
    if (std::isdigit(static_cast<unsigned char>(c))) return number(parse_number());
    fail("expected an expression");
  }

  Game parse_braces() {
    expect('{');
    std::vector<Game> lefts = parse_list();
    expect('|');
    std::vector<Game> rights = parse_list();
    expect('}');
    return make_game(std::move(lefts), std::move(rights));
  }

  std::vector<Game> parse_list() {
    std::vector<Game> out;
    if (peek() == '|' || peek() == '}') return out;
    out.push_back(parse_expr());
    while (eat(',')) out.push_back(parse_expr());
    return out;
  }

  Game parse_tiny_miny() {
    bool is_tiny = false;
    if (match_word("tiny"))
      is_tiny = true;
    else if (!match_word("miny"))
      fail("expected an expression");
    expect('(');
    const DyadicRational d = parse_number_signed();
    expect(')');
    if (!(DyadicRational(0) < d)) fail("tiny/miny take a positive number");
    return is_tiny ? tiny(d) : miny(d);
  }

  bool match_word(std::string_view word) {
    skip_ws();
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }

  // Optional digit run immediately after a prefix operator; `missing` when
  // the next character is not a digit ("-" binds as subtraction instead).
  int opt_count(int missing) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return missing;
    const long long v = parse_digits();
    if (v > 1'000'000) fail("count out of range");
    return static_cast<int>(v);
  }

  // Unsigned digit run; signs are handled by the grammar, not the scanner.
  long long parse_digits() {
    skip_ws();
    if (peek() == '-') fail("expected an unsigned integer");
    long long value = 0;
    const auto* begin = text_.data() + pos_;
    const auto* end = text_.data() + text_.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(res.ptr - begin);
    return value;
  }

  long long parse_int() {
    const bool neg = eat('-');
    const long long v = parse_digits();
    return neg ? -v : v;
  }

  DyadicRational parse_number_signed() {
    const bool neg = eat('-');
    const DyadicRational d = parse_number();
    return neg ? -d : d;
  }

  DyadicRational parse_number() {
    const long long num = parse_int();
    if (eat('/')) {
      const long long den = parse_digits();
      if (den <= 0 || (den & (den - 1)) != 0)
        fail("denominator must be a positive power of two");
      return DyadicRational::from_fraction(num, den);
    }
    return DyadicRational(num);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Elaborate a textual game expression; throws ParseError on bad input.
inline Game parse(std::string_view text) { return detail::ExprParser(text).run(); }

namespace detail {

// Recognize a canonical game as a number; verified structurally at the end,
// so a false positive is impossible.
inline std::optional<DyadicRational> as_number(Game c) {
  DepthGuard guard;
  const auto& L = c.left_options();
  const auto& R = c.right_options();
  std::optional<DyadicRational> value;
  if (L.empty() && R.empty()) {
    value = DyadicRational(0);
  } else if (R.empty() && L.size() == 1) {
    if (auto a = as_number(L[0]); a && a->is_integer() && a->numerator() >= 0)
      value = DyadicRational(a->numerator() + 1);
  } else if (L.empty() && R.size() == 1) {
    if (auto b = as_number(R[0]); b && b->is_integer() && b->numerator() <= 0)
      value = DyadicRational(b->numerator() - 1);
  } else if (L.size() == 1 && R.size() == 1) {
    const auto a = as_number(L[0]);
    const auto b = as_number(R[0]);
    if (a && b && *a < *b) value = simplest_between(*a, *b);
  }
  if (value && number(*value) == c) return value;
  return std::nullopt;
}

// Recognize a canonical game as the nimber *n (n >= 1).
inline std::optional<int> as_star(Game c) {
  const auto& L = c.left_options();
  if (L.empty() || L != c.right_options()) return std::nullopt;
  const int n = static_cast<int>(L.size());
  if (star(n) == c) return n;
  return std::nullopt;
}

inline std::string format_canonical(Game c);

// Children of a brace print, ordered by (birthday, text) so that output is
// independent of arena handle assignment.
inline std::string format_list(const std::vector<Game>& opts) {
  std::vector<std::string> texts(opts.size());
  for (std::size_t i = 0; i < opts.size(); ++i)
    texts[i] = format_canonical(opts[i]);
  std::vector<std::size_t> order(opts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int ba = birthday(opts[a]), bb = birthday(opts[b]);
    if (ba != bb) return ba < bb;
    return texts[a] < texts[b];
  });
  std::string out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k) out += ",";
    out += texts[order[k]];
  }
  return out;
}

inline std::string format_canonical(Game c) {
  DepthGuard guard;
  if (const auto d = as_number(c)) return d->to_string();
  if (const auto n = as_star(c))
    return *n == 1 ? "*" : "*" + std::to_string(*n);
  // bounded probe for the up/down family
  const int bd = birthday(c);
  for (int n = 1; n <= bd; ++n) {
    for (const bool ws : {false, true}) {
      std::string suffix = (n > 1 ? std::to_string(n) : "");
      if (ws) suffix += "*";
      if (up(n, ws) == c) return "^" + suffix;
      if (down(n, ws) == c) return "v" + suffix;
    }
  }
  // tiny(d) = {0|{0|-d}} and its negative
  const auto& L = c.left_options();
  const auto& R = c.right_options();
  if (L.size() == 1 && R.size() == 1) {
    if (L[0] == zero()) {
      const Game t = R[0];
      if (t.left_options().size() == 1 && t.left_options()[0] == zero() &&
          t.right_options().size() == 1) {
        if (const auto d = as_number(t.right_options()[0]);
            d && d->numerator() < 0)
          return "tiny(" + (-*d).to_string() + ")";
      }
    }
    if (R[0] == zero()) {
      const Game t = L[0];
      if (t.right_options().size() == 1 && t.right_options()[0] == zero() &&
          t.left_options().size() == 1) {
        if (const auto d = as_number(t.left_options()[0]);
            d && d->numerator() > 0)
          return "miny(" + d->to_string() + ")";
      }
    }
  }
  return "{" + format_list(L) + "|" + format_list(R) + "}";
}

}  // namespace detail

// Print the canonical form of g, using named shorthand where one applies.
inline std::string format(Game g) {
  return detail::format_canonical(canonical_form(g));
}

}  // namespace tt
