// Finite semigroups given by their Cayley tables.
//
// All indices exposed by this header are 1-based: element s_i is index i and
// the product s_i s_j is s_{at(i, j)}.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfmonoid {

/// Error raised by any of the text parsers; carries the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t line)
      : std::runtime_error(what + " at line " + std::to_string(line)),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A triple (i, j, k) with (s_i s_j) s_k != s_i (s_j s_k).
struct Triple {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  friend bool operator==(Triple const&, Triple const&) = default;
};

class CayleyTable {
 public:
  /// Builds a table from row-major entries; throws std::invalid_argument if
  /// the shape is wrong or an entry lies outside 1..n. Associativity is not
  /// checked.
  CayleyTable(std::size_t n, std::vector<std::size_t> entries);

  std::size_t order() const noexcept { return n_; }

  /// The index of s_i s_j.
  std::size_t at(std::size_t i, std::size_t j) const;

  std::vector<std::size_t> const& entries() const noexcept { return entries_; }

  friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> entries_;
};

/// Parses the Cayley file format: optional '#' comment lines, a line with n,
/// then n rows of n whitespace-separated entries in 1..n.
CayleyTable parse_cayley(std::istream& in);
CayleyTable parse_cayley(std::string_view text);

/// Inverse of parse_cayley (no comments, single spaces, trailing newline).
std::string format_cayley(CayleyTable const& t);

/// Result of an exhaustive associativity check. When the table is not
/// associative, `witness` holds the first failing triple, enumerated with i
/// varying fastest and k slowest.
struct AssociativityReport {
  bool associative = true;
  std::optional<Triple> witness;
};

AssociativityReport is_associative(CayleyTable const& t);

/// Names accepted by builtin(), in a fixed order.
std::vector<std::string> const& builtin_names();

/// One of: trivial, z2, z3, leftzero2, rightzero2, semilattice2, t2.
/// Throws std::invalid_argument for anything else.
CayleyTable builtin(std::string_view name);

}  // namespace cfmonoid
