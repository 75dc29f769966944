// Executable congruence-freeness: unit contexts (0-simplicity made
// constructive), collapse traces taking a pair (u, v) to (1, 0), and an
// independent trace checker.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfmonoid/presentation.hpp"
#include "cfmonoid/word.hpp"

namespace cfmonoid {

/// True iff w is z alone, or w has no z and no factor s s, x y or x s y. This
/// is the shape of a normal form of a generated presentation; it does not
/// consult any rule list.
bool has_normal_shape(Word const& w);

/// Splits a nonzero normal form as w = P Q where P has no x and Q is empty or
/// starts with x and has no y. Throws std::invalid_argument if w is z or not
/// of normal shape.
std::pair<Word, Word> decompose(Word const& w);

/// Words (a, b) with normal_form(a w b) = 1. Throws std::invalid_argument if
/// w is z or not a normal form, and std::runtime_error if the coloring lacks
/// a required entry.
std::pair<Word, Word> unit_context(Word const& w, Presentation const& p);

enum class MoveKind : std::uint8_t { Generator, MultiplyLeft, MultiplyRight,
                                     Rewrite };
enum class Side : std::uint8_t { Left, Right, Both };

struct Move {
  MoveKind kind = MoveKind::Generator;
  Word context;           // MultiplyLeft / MultiplyRight
  Side side = Side::Both;  // Rewrite

  friend bool operator==(Move const&, Move const&) = default;
};

struct WitnessStep {
  Word left;
  Word right;
  Move move;
  std::string note;  // proof case that produced the step

  friend bool operator==(WitnessStep const&, WitnessStep const&) = default;
};

struct WitnessTrace {
  std::vector<WitnessStep> steps;

  friend bool operator==(WitnessTrace const&, WitnessTrace const&) = default;
};

/// Builds a trace from the generator pair (u, v) to (1, 0) or (0, 1). Throws
/// std::invalid_argument if u == v or either is not a normal form.
WitnessTrace collapse(Word const& u, Word const& v, Presentation const& p);

struct TraceVerdict {
  bool accepted = false;
  std::optional<std::size_t> bad_step;
  std::string reason;
};

/// Checks a trace using only normal_form and literal concatenation.
TraceVerdict verify_trace(WitnessTrace const& t, Presentation const& p);

/// One line per step: number, TAB, move, TAB, left, TAB, right, TAB, note.
/// Moves are "GEN", "MUL_LEFT <word>", "MUL_RIGHT <word>" and
/// "REWRITE left|right|both".
std::string format_trace(WitnessTrace const& t);

/// Inverse of format_trace; the note field is optional. Throws ParseError.
WitnessTrace parse_trace(std::string_view text, std::size_t n);

}  // namespace cfmonoid
