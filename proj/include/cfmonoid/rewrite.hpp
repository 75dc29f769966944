// Rewriting with a Presentation: normal forms, critical pairs, and the local
// confluence check that certifies the system complete.
//
// Every rule is length-reducing, so rewriting terminates and local confluence
// implies confluence.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfmonoid/presentation.hpp"
#include "cfmonoid/word.hpp"

namespace cfmonoid {

/// Leftmost match first, shortest left-hand side on ties.
Word normal_form(Word const& w, Presentation const& p);

/// True iff no rule left-hand side occurs as a factor of w.
bool is_normal_form(Word const& w, Presentation const& p);

/// Every word reachable from w by exactly one rule application, in order of
/// position and then rule index. Empty iff w is irreducible.
std::vector<Word> one_step_reducts(Word const& w, Presentation const& p);

struct CriticalPair {
  Word overlap;
  Word left_reduct;   // first rule applied at position 0
  Word right_reduct;  // second rule applied at `position`
  std::size_t first_rule = 0;
  std::size_t second_rule = 0;
  std::size_t position = 0;
  bool containment = false;  // second lhs is a factor of the first
  bool joinable = false;
  Word left_normal;
  Word right_normal;
};

/// All overlaps of rule left-hand sides: proper suffix/prefix overlaps of
/// every ordered pair (including a rule with itself) and every occurrence of
/// one lhs inside a different rule's lhs. Deterministic order: first rule,
/// second rule, position. `joinable` is left false.
std::vector<CriticalPair> critical_pairs(Presentation const& p);

struct ConfluenceReport {
  std::vector<CriticalPair> pairs;  // all pairs, with `joinable` filled in
  std::size_t non_joinable = 0;

  bool confluent() const noexcept { return non_joinable == 0; }
  /// First pair that fails to join, if any.
  CriticalPair const* first_failure() const noexcept;
};

ConfluenceReport check_local_confluence(Presentation const& p);

/// Human-readable one-line description of a critical pair.
std::string describe(CriticalPair const& cp, Presentation const& p);

/// Nonzero normal forms of length <= maxlen in length-lexicographic order
/// (letters ordered s, x, y by index). Includes the empty word; never z.
std::vector<Word> enumerate_normal_forms(Presentation const& p,
                                         std::size_t maxlen);

}  // namespace cfmonoid
