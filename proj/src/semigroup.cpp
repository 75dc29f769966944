#include "cfmonoid/semigroup.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <sstream>

namespace cfmonoid {

CayleyTable::CayleyTable(std::size_t n, std::vector<std::size_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) {
    throw std::invalid_argument("semigroup order must be positive");
  }
  if (entries_.size() != n_ * n_) {
    throw std::invalid_argument("expected " + std::to_string(n_ * n_) +
                                " table entries, got " +
                                std::to_string(entries_.size()));
  }
  for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
    if (entries_[idx] < 1 || entries_[idx] > n_) {
      throw std::invalid_argument(
          "entry " + std::to_string(entries_[idx]) + " out of range at row " +
          std::to_string(idx / n_ + 1));
    }
  }
}

std::size_t CayleyTable::at(std::size_t i, std::size_t j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("Cayley table index out of range");
  }
  return entries_[(i - 1) * n_ + (j - 1)];
}

namespace {

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

std::vector<std::size_t> parse_integers(std::string_view line,
                                        std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() &&
           (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
      ++pos;
    }
    if (pos == line.size()) {
      break;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r') {
      ++end;
    }
    std::string_view token = line.substr(pos, end - pos);
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("malformed integer '" + std::string(token) + "'",
                       line_no);
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

CayleyTable parse_cayley(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<std::size_t> entries;
  std::size_t rows = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '#') {
      continue;
    }
    if (!n) {
      if (is_blank(line)) {
        continue;
      }
      auto values = parse_integers(line, line_no);
      if (values.size() != 1 || values[0] == 0) {
        throw ParseError("expected a positive order n", line_no);
      }
      n = values[0];
      entries.reserve(*n * *n);
      continue;
    }
    if (is_blank(line)) {
      if (rows == *n) {
        continue;
      }
      throw ParseError("empty row " + std::to_string(rows + 1), line_no);
    }
    if (rows == *n) {
      throw ParseError("too many rows (expected " + std::to_string(*n) + ")",
                       line_no);
    }
    auto values = parse_integers(line, line_no);
    ++rows;
    if (values.size() != *n) {
      throw ParseError("row " + std::to_string(rows) + " has " +
                           std::to_string(values.size()) +
                           " entries (expected " + std::to_string(*n) + ")",
                       line_no);
    }
    for (auto v : values) {
      if (v < 1 || v > *n) {
        throw ParseError("entry " + std::to_string(v) +
                             " out of range at row " + std::to_string(rows),
                         line_no);
      }
      entries.push_back(v);
    }
  }
  if (!n) {
    throw ParseError("missing order line", line_no);
  }
  if (rows != *n) {
    throw ParseError("expected " + std::to_string(*n) + " rows, found " +
                         std::to_string(rows),
                     line_no);
  }
  return CayleyTable(*n, std::move(entries));
}

CayleyTable parse_cayley(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cayley(in);
}

std::string format_cayley(CayleyTable const& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (std::size_t i = 1; i <= t.order(); ++i) {
    for (std::size_t j = 1; j <= t.order(); ++j) {
      if (j > 1) {
        out += ' ';
      }
      out += std::to_string(t.at(i, j));
    }
    out += '\n';
  }
  return out;
}

AssociativityReport is_associative(CayleyTable const& t) {
  auto const n = t.order();
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 1; i <= n; ++i) {
        if (t.at(t.at(i, j), k) != t.at(i, t.at(j, k))) {
          return {false, Triple{i, j, k}};
        }
      }
    }
  }
  return {};
}

std::vector<std::string> const& builtin_names() {
  static std::vector<std::string> const names = {
      "trivial", "z2", "z3", "leftzero2", "rightzero2", "semilattice2", "t2"};
  return names;
}

namespace {

// Full transformation monoid on {1,2}. A map g is stored as (g(1), g(2)) and
// elements are numbered id=1, swap=2, const1=3, const2=4. The product s_a s_b
// is "apply a, then b".
CayleyTable make_t2() {
  using Map = std::array<std::size_t, 2>;
  std::array<Map, 4> const maps = {
      Map{1, 2}, Map{2, 1}, Map{1, 1}, Map{2, 2}};
  auto index_of = [&](Map const& m) {
    for (std::size_t e = 0; e < maps.size(); ++e) {
      if (maps[e] == m) {
        return e + 1;
      }
    }
    throw std::logic_error("t2: composition left the monoid");
  };
  std::vector<std::size_t> entries;
  for (auto const& a : maps) {
    for (auto const& b : maps) {
      entries.push_back(index_of(Map{b[a[0] - 1], b[a[1] - 1]}));
    }
  }
  return CayleyTable(4, std::move(entries));
}

}  // namespace

CayleyTable builtin(std::string_view name) {
  if (name == "trivial") {
    return CayleyTable(1, {1});
  }
  if (name == "z2") {
    return CayleyTable(2, {1, 2, 2, 1});
  }
  if (name == "z3") {
    return CayleyTable(3, {1, 2, 3, 2, 3, 1, 3, 1, 2});
  }
  if (name == "leftzero2") {
    return CayleyTable(2, {1, 1, 2, 2});
  }
  if (name == "rightzero2") {
    return CayleyTable(2, {1, 2, 1, 2});
  }
  if (name == "semilattice2") {
    // {1, 0} under multiplication: s_1 is the identity, s_2 the zero.
    return CayleyTable(2, {1, 2, 2, 2});
  }
  if (name == "t2") {
    return make_t2();
  }
  throw std::invalid_argument("unknown builtin semigroup '" +
                              std::string(name) + "'");
}

}  // namespace cfmonoid
