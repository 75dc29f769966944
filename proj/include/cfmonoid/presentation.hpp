// The finite complete rewriting system of the congruence-free monoid M built
// from a finite semigroup S and a coloring f:
//
//   A        s_i s_j   -> s_{pi(i,j)}          1 <= i, j <= n
//   B        x_i s_j y_k -> 1 if f(i,j,k) = 1, z otherwise
//   C        x_i y_j   -> z                    1 <= i, j <= n+1
//   Z_left   z a       -> z                    every letter a != z
//   Z_right  a z       -> z                    every letter a, including z

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cfmonoid/coloring.hpp"
#include "cfmonoid/semigroup.hpp"
#include "cfmonoid/word.hpp"

namespace cfmonoid {

enum class Family : std::uint8_t { A = 0, B, C, ZLeft, ZRight };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);

struct Rule {
  Word lhs;
  Word rhs;
  Family family;

  friend bool operator==(Rule const&, Rule const&) = default;
};

/// Per-family rule counts for order n.
struct RuleCounts {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t z_left = 0;
  std::size_t z_right = 0;

  std::size_t total() const noexcept { return a + b + c + z_left + z_right; }
  friend bool operator==(RuleCounts const&, RuleCounts const&) = default;
};

/// n^2, (n+1)n(n+1), (n+1)^2, 3n+2, 3n+3.
RuleCounts expected_rule_counts(std::size_t n);

class AssociativityError : public std::runtime_error {
 public:
  explicit AssociativityError(Triple t);
  Triple const& triple() const noexcept { return triple_; }

 private:
  Triple triple_;
};

class ColoringError : public std::runtime_error {
 public:
  explicit ColoringError(ConditionReport report);
  ConditionReport const& report() const noexcept { return report_; }

 private:
  ConditionReport report_;
};

class Presentation {
 public:
  /// Takes an arbitrary rule list; only requires every letter to be valid
  /// for order n and every rule to be strictly length-reducing. Throws
  /// std::invalid_argument otherwise.
  Presentation(CayleyTable table, Coloring coloring, std::vector<Rule> rules);

  std::size_t order() const noexcept { return table_.order(); }
  CayleyTable const& table() const noexcept { return table_; }
  Coloring const& coloring() const noexcept { return coloring_; }
  std::vector<Rule> const& rules() const noexcept { return rules_; }
  std::size_t max_lhs_length() const noexcept { return max_lhs_; }

  RuleCounts counts() const;

  /// Index of the rule whose left-hand side equals `factor`, if any. When
  /// several rules share a left-hand side the first one wins.
  std::optional<std::size_t> find_rule(std::span<Letter const> factor) const;

 private:
  struct SpanHash {
    using is_transparent = void;
    std::size_t operator()(std::span<Letter const> s) const noexcept;
    std::size_t operator()(Word const& w) const noexcept {
      return (*this)(std::span<Letter const>(w));
    }
  };
  struct SpanEqual {
    using is_transparent = void;
    bool operator()(std::span<Letter const> a,
                    std::span<Letter const> b) const noexcept;
  };

  CayleyTable table_;
  Coloring coloring_;
  std::vector<Rule> rules_;
  std::size_t max_lhs_ = 0;
  std::unordered_map<Word, std::size_t, SpanHash, SpanEqual> by_lhs_;
};

/// Validates the inputs and emits all rule families in a fixed order
/// (family, then lexicographic indices). Throws AssociativityError,
/// ColoringError, or std::invalid_argument on an order mismatch.
Presentation generate_presentation(CayleyTable const& table,
                                   Coloring const& coloring);

namespace detail {
/// generate_presentation without input validation. Test hook for feeding
/// non-associative tables to the completeness checker.
Presentation generate_presentation_unchecked(CayleyTable const& table,
                                             Coloring const& coloring);
}  // namespace detail

/// JSON with keys, in order: n, cayley, coloring, rules. "coloring" is
/// indexed [j][i][k] (slice, x-row, y-column); each rule is
/// {"family", "lhs", "rhs"} with token lists in word syntax.
std::string serialize_presentation(Presentation const& p);

/// Inverse of serialize_presentation. Rules are taken verbatim, so a
/// hand-edited file can be checked for completeness. Throws
/// std::invalid_argument on malformed input.
Presentation parse_presentation(std::string_view json_text);

}  // namespace cfmonoid
