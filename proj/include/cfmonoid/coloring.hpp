// Two-colorings f(i, j, k) of the (x, s, y) box and the six conditions that
// make the resulting monoid congruence-free.
//
// Index ranges: i (x-index) and k (y-index) run over 1..n+1, j (s-index) over
// 1..n. All interfaces are 1-based.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cfmonoid {

class Coloring {
 public:
  /// All-zero coloring for a semigroup of order n >= 1.
  explicit Coloring(std::size_t n);

  std::size_t order() const noexcept { return n_; }

  bool at(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, bool value);

  friend bool operator==(Coloring const&, Coloring const&) = default;

 private:
  std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

/// The shift construction: in slice j the first column (k = 1) has j leading
/// ones, and column k + 1 is column k rotated down by one place.
Coloring build_coloring(std::size_t n);

/// Closed form of build_coloring: 1 iff ((i - k) mod (n + 1)) < j, with the
/// residue taken in 0..n. Throws std::out_of_range on bad indices.
bool coloring_entry(std::size_t n, std::size_t i, std::size_t j,
                    std::size_t k);

enum class Condition : std::uint8_t { C1 = 0, C2, C3, C4, C5, C6 };

inline constexpr std::array<Condition, 6> all_conditions = {
    Condition::C1, Condition::C2, Condition::C3,
    Condition::C4, Condition::C5, Condition::C6};

std::string_view to_string(Condition c);

/// Outcome for a single condition. For C1..C4 the violating tuple is the pair
/// (a, b) with no suitable k; for C5/C6 it is the two pairs (a, b), (c, d)
/// that cannot be told apart.
struct ConditionResult {
  Condition condition;
  bool passed = true;
  std::optional<std::array<std::size_t, 4>> violation;
};

struct ConditionReport {
  std::array<ConditionResult, 6> results;

  bool all_passed() const noexcept;
  ConditionResult const& operator[](Condition c) const {
    return results[static_cast<std::size_t>(c)];
  }
  /// One line per condition, e.g. "C5 FAIL (1,1) vs (2,1)".
  std::string describe() const;
};

/// Exhaustively checks C1..C6. Violations are the lexicographically first.
ConditionReport check_conditions(Coloring const& c);

/// Text export: for each j a header line "slice j" followed by n+1 rows of
/// n+1 space-separated bits, row i holding f(i, j, 1..n+1).
std::string format_coloring(Coloring const& c);

/// Inverse of format_coloring. Blank lines and '#' comment lines are skipped;
/// n is taken from the row width. Throws ParseError.
Coloring parse_coloring(std::istream& in);
Coloring parse_coloring(std::string_view text);

}  // namespace cfmonoid
