// Letters and words over the alphabet {s_1..s_n, x_1..x_{n+1}, y_1..y_{n+1}, z}.
//
// The empty word is the identity 1 of the monoid and the letter z its zero.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cfmonoid {

enum class Role : std::uint8_t { S = 0, X, Y, Z };

struct Letter {
  Role role = Role::Z;
  std::uint32_t index = 0;  // 0 for z

  static constexpr Letter s(std::uint32_t i) { return {Role::S, i}; }
  static constexpr Letter x(std::uint32_t i) { return {Role::X, i}; }
  static constexpr Letter y(std::uint32_t i) { return {Role::Y, i}; }
  static constexpr Letter z() { return {Role::Z, 0}; }

  constexpr bool is_s() const noexcept { return role == Role::S; }
  constexpr bool is_x() const noexcept { return role == Role::X; }
  constexpr bool is_y() const noexcept { return role == Role::Y; }
  constexpr bool is_z() const noexcept { return role == Role::Z; }

  /// True iff the index is legal for this role in a presentation of order n.
  bool valid_for(std::size_t n) const noexcept;

  /// Dense code, unique per letter; used for hashing and rule lookup.
  constexpr std::uint32_t code() const noexcept {
    return (static_cast<std::uint32_t>(role) << 28) | index;
  }

  friend constexpr auto operator<=>(Letter const&, Letter const&) = default;
};

using Word = std::vector<Letter>;

/// Letters of a presentation of order n, in the canonical order
/// s_1..s_n, x_1..x_{n+1}, y_1..y_{n+1}, optionally followed by z.
std::vector<Letter> alphabet(std::size_t n, bool with_zero);

bool contains_role(Word const& w, Role role);
bool is_zero(Word const& w);
Word concat(Word a, Word const& b);
Word concat(Word const& a, Word const& b, Word const& c);

/// Word syntax: whitespace-separated tokens s<i>, x<i>, y<i>, or 0; the token
/// 1 is allowed only as the whole word and denotes the empty word. Throws
/// std::invalid_argument for unknown tokens or indices out of range for n.
Word parse_word(std::string_view text, std::size_t n);

/// Inverse of parse_word: "1" for the empty word, "0" for z.
std::string format_word(Word const& w);
std::string format_letter(Letter l);

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept;
};

}  // namespace cfmonoid
