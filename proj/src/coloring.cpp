#include "cfmonoid/coloring.hpp"

#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cfmonoid/semigroup.hpp"

namespace cfmonoid {

Coloring::Coloring(std::size_t n) : n_(n) {
  if (n_ == 0) {
    throw std::invalid_argument("coloring order must be positive");
  }
  bits_.assign((n_ + 1) * n_ * (n_ + 1), 0);
}

std::size_t Coloring::offset(std::size_t i, std::size_t j,
                             std::size_t k) const {
  if (i < 1 || i > n_ + 1 || j < 1 || j > n_ || k < 1 || k > n_ + 1) {
    throw std::out_of_range("coloring index out of range");
  }
  return ((i - 1) * n_ + (j - 1)) * (n_ + 1) + (k - 1);
}

bool Coloring::at(std::size_t i, std::size_t j, std::size_t k) const {
  return bits_[offset(i, j, k)] != 0;
}

void Coloring::set(std::size_t i, std::size_t j, std::size_t k, bool value) {
  bits_[offset(i, j, k)] = value ? 1 : 0;
}

Coloring build_coloring(std::size_t n) {
  Coloring c(n);
  auto const m = n + 1;
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<bool> column(m, false);
    for (std::size_t i = 0; i < j; ++i) {
      column[i] = true;
    }
    for (std::size_t k = 1; k <= m; ++k) {
      for (std::size_t i = 1; i <= m; ++i) {
        c.set(i, j, k, column[i - 1]);
      }
      // sigma: (x_1, ..., x_m) -> (x_m, x_1, ..., x_{m-1})
      std::vector<bool> shifted(m);
      shifted[0] = column[m - 1];
      for (std::size_t i = 1; i < m; ++i) {
        shifted[i] = column[i - 1];
      }
      column = std::move(shifted);
    }
  }
  return c;
}

bool coloring_entry(std::size_t n, std::size_t i, std::size_t j,
                    std::size_t k) {
  if (n == 0 || i < 1 || i > n + 1 || j < 1 || j > n || k < 1 || k > n + 1) {
    throw std::out_of_range("coloring index out of range");
  }
  auto const m = n + 1;
  auto const residue = (i + m - k) % m;
  return residue < j;
}

std::string_view to_string(Condition c) {
  static constexpr std::array<std::string_view, 6> names = {
      "C1", "C2", "C3", "C4", "C5", "C6"};
  return names[static_cast<std::size_t>(c)];
}

bool ConditionReport::all_passed() const noexcept {
  for (auto const& r : results) {
    if (!r.passed) {
      return false;
    }
  }
  return true;
}

std::string ConditionReport::describe() const {
  std::string out;
  for (auto const& r : results) {
    out += to_string(r.condition);
    if (r.passed) {
      out += " pass\n";
      continue;
    }
    auto const& v = *r.violation;
    out += " FAIL (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")";
    if (r.condition == Condition::C5 || r.condition == Condition::C6) {
      out += " vs (" + std::to_string(v[2]) + "," + std::to_string(v[3]) + ")";
    }
    out += '\n';
  }
  return out;
}

namespace {

// The two ways of reading f as a family of (n+1)-tuples: rows fix (x, s) and
// vary y; columns fix (s, y) and vary x.
std::vector<bool> row_tuple(Coloring const& c, std::size_t i, std::size_t j) {
  std::vector<bool> out;
  for (std::size_t k = 1; k <= c.order() + 1; ++k) {
    out.push_back(c.at(i, j, k));
  }
  return out;
}

std::vector<bool> column_tuple(Coloring const& c, std::size_t j,
                               std::size_t k) {
  std::vector<bool> out;
  for (std::size_t i = 1; i <= c.order() + 1; ++i) {
    out.push_back(c.at(i, j, k));
  }
  return out;
}

template <typename TupleFn>
ConditionResult check_contains(Condition cond, std::size_t first_range,
                               std::size_t second_range, bool wanted,
                               TupleFn tuple) {
  ConditionResult r{cond, true, std::nullopt};
  for (std::size_t a = 1; a <= first_range; ++a) {
    for (std::size_t b = 1; b <= second_range; ++b) {
      bool found = false;
      for (bool bit : tuple(a, b)) {
        found = found || bit == wanted;
      }
      if (!found) {
        r.passed = false;
        r.violation = std::array<std::size_t, 4>{a, b, 0, 0};
        return r;
      }
    }
  }
  return r;
}

template <typename TupleFn>
ConditionResult check_distinct(Condition cond, std::size_t first_range,
                               std::size_t second_range, TupleFn tuple) {
  ConditionResult r{cond, true, std::nullopt};
  for (std::size_t a = 1; a <= first_range; ++a) {
    for (std::size_t b = 1; b <= second_range; ++b) {
      auto const lhs = tuple(a, b);
      for (std::size_t c = a; c <= first_range; ++c) {
        for (std::size_t d = (c == a ? b + 1 : 1); d <= second_range; ++d) {
          if (lhs == tuple(c, d)) {
            r.passed = false;
            r.violation = std::array<std::size_t, 4>{a, b, c, d};
            return r;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace

ConditionReport check_conditions(Coloring const& c) {
  auto const n = c.order();
  auto rows = [&](std::size_t i, std::size_t j) { return row_tuple(c, i, j); };
  auto cols = [&](std::size_t j, std::size_t k) {
    return column_tuple(c, j, k);
  };
  return ConditionReport{{
      check_contains(Condition::C1, n + 1, n, true, rows),
      check_contains(Condition::C2, n, n + 1, true, cols),
      check_contains(Condition::C3, n + 1, n, false, rows),
      check_contains(Condition::C4, n, n + 1, false, cols),
      check_distinct(Condition::C5, n + 1, n, rows),
      check_distinct(Condition::C6, n, n + 1, cols),
  }};
}

std::string format_coloring(Coloring const& c) {
  auto const n = c.order();
  std::string out;
  for (std::size_t j = 1; j <= n; ++j) {
    out += "slice " + std::to_string(j) + "\n";
    for (std::size_t i = 1; i <= n + 1; ++i) {
      for (std::size_t k = 1; k <= n + 1; ++k) {
        if (k > 1) {
          out += ' ';
        }
        out += c.at(i, j, k) ? '1' : '0';
      }
      out += '\n';
    }
  }
  return out;
}

Coloring parse_coloring(std::istream& in) {
  // slice index -> rows, each row a vector of bits
  std::map<std::size_t, std::vector<std::vector<bool>>> slices;
  std::optional<std::size_t> current;
  std::optional<std::size_t> width;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.find_first_not_of(" \t") == std::string::npos ||
        line.front() == '#') {
      continue;
    }
    std::istringstream tokens(line);
    std::string first;
    tokens >> first;
    if (first == "slice") {
      std::size_t j = 0;
      std::string rest;
      if (!(tokens >> j) || (tokens >> rest) || j == 0) {
        throw ParseError("malformed slice header", line_no);
      }
      if (slices.contains(j)) {
        throw ParseError("duplicate slice " + std::to_string(j), line_no);
      }
      slices[j];
      current = j;
      continue;
    }
    if (!current) {
      throw ParseError("row before first slice header", line_no);
    }
    std::vector<bool> row;
    tokens.clear();
    tokens.str(line);
    std::string bit;
    while (tokens >> bit) {
      if (bit != "0" && bit != "1") {
        throw ParseError("expected bit 0 or 1, got '" + bit + "'", line_no);
      }
      row.push_back(bit == "1");
    }
    if (!width) {
      width = row.size();
      if (*width < 2) {
        throw ParseError("rows must have at least 2 bits", line_no);
      }
    } else if (row.size() != *width) {
      throw ParseError("row has " + std::to_string(row.size()) +
                           " bits (expected " + std::to_string(*width) + ")",
                       line_no);
    }
    auto& rows = slices[*current];
    if (rows.size() == *width) {
      throw ParseError("too many rows in slice " + std::to_string(*current),
                       line_no);
    }
    rows.push_back(std::move(row));
  }

  if (!width) {
    throw ParseError("no coloring rows found", line_no);
  }
  auto const n = *width - 1;
  if (slices.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " slices, found " +
                         std::to_string(slices.size()),
                     line_no);
  }
  Coloring c(n);
  for (auto const& [j, rows] : slices) {
    if (j > n) {
      throw ParseError("slice index " + std::to_string(j) + " out of range",
                       line_no);
    }
    if (rows.size() != n + 1) {
      throw ParseError("slice " + std::to_string(j) + " has " +
                           std::to_string(rows.size()) + " rows (expected " +
                           std::to_string(n + 1) + ")",
                       line_no);
    }
    for (std::size_t i = 1; i <= n + 1; ++i) {
      for (std::size_t k = 1; k <= n + 1; ++k) {
        c.set(i, j, k, rows[i - 1][k - 1]);
      }
    }
  }
  return c;
}

Coloring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_coloring(in);
}

}  // namespace cfmonoid
