#include "cfmonoid/presentation.hpp"

#include <algorithm>

#include "json.hpp"

namespace cfmonoid {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Family f) {
  switch (f) {
    case Family::A:
      return "A";
    case Family::B:
      return "B";
    case Family::C:
      return "C";
    case Family::ZLeft:
      return "Z_left";
    case Family::ZRight:
      return "Z_right";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  for (auto f : {Family::A, Family::B, Family::C, Family::ZLeft,
                 Family::ZRight}) {
    if (to_string(f) == s) {
      return f;
    }
  }
  throw std::invalid_argument("unknown rule family '" + std::string(s) + "'");
}

RuleCounts expected_rule_counts(std::size_t n) {
  auto const letters = n + 2 * (n + 1);
  return {n * n, (n + 1) * n * (n + 1), (n + 1) * (n + 1), letters,
          letters + 1};
}

AssociativityError::AssociativityError(Triple t)
    : std::runtime_error("table is not associative at (i,j,k) = (" +
                         std::to_string(t.i) + "," + std::to_string(t.j) +
                         "," + std::to_string(t.k) + ")"),
      triple_(t) {}

ColoringError::ColoringError(ConditionReport report)
    : std::runtime_error("coloring violates the required conditions:\n" +
                         report.describe()),
      report_(std::move(report)) {}

std::size_t Presentation::SpanHash::operator()(
    std::span<Letter const> s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto l : s) {
    h ^= l.code();
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool Presentation::SpanEqual::operator()(
    std::span<Letter const> a, std::span<Letter const> b) const noexcept {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

Presentation::Presentation(CayleyTable table, Coloring coloring,
                           std::vector<Rule> rules)
    : table_(std::move(table)),
      coloring_(std::move(coloring)),
      rules_(std::move(rules)) {
  auto const n = table_.order();
  if (coloring_.order() != n) {
    throw std::invalid_argument("coloring order " +
                                std::to_string(coloring_.order()) +
                                " does not match table order " +
                                std::to_string(n));
  }
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    auto const& rule = rules_[r];
    if (rule.rhs.size() >= rule.lhs.size()) {
      throw std::invalid_argument("rule " + std::to_string(r) + " (" +
                                  format_word(rule.lhs) + " -> " +
                                  format_word(rule.rhs) +
                                  ") is not length-reducing");
    }
    for (auto const* side : {&rule.lhs, &rule.rhs}) {
      for (auto l : *side) {
        if (!l.valid_for(n)) {
          throw std::invalid_argument("rule " + std::to_string(r) +
                                      " has a letter out of range");
        }
      }
    }
    max_lhs_ = std::max(max_lhs_, rule.lhs.size());
    by_lhs_.try_emplace(rule.lhs, r);
  }
}

RuleCounts Presentation::counts() const {
  RuleCounts c;
  for (auto const& r : rules_) {
    switch (r.family) {
      case Family::A:
        ++c.a;
        break;
      case Family::B:
        ++c.b;
        break;
      case Family::C:
        ++c.c;
        break;
      case Family::ZLeft:
        ++c.z_left;
        break;
      case Family::ZRight:
        ++c.z_right;
        break;
    }
  }
  return c;
}

std::optional<std::size_t> Presentation::find_rule(
    std::span<Letter const> factor) const {
  auto it = by_lhs_.find(factor);
  if (it == by_lhs_.end()) {
    return std::nullopt;
  }
  return it->second;
}

namespace detail {

Presentation generate_presentation_unchecked(CayleyTable const& table,
                                             Coloring const& coloring) {
  auto const n = static_cast<std::uint32_t>(table.order());
  if (coloring.order() != n) {
    throw std::invalid_argument("order mismatch: table has n=" +
                                std::to_string(n) + ", coloring has n=" +
                                std::to_string(coloring.order()));
  }
  auto const z = Letter::z();
  std::vector<Rule> rules;
  auto const counts = expected_rule_counts(n);
  rules.reserve(counts.total());

  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      auto const product = static_cast<std::uint32_t>(table.at(i, j));
      rules.push_back(
          {{Letter::s(i), Letter::s(j)}, {Letter::s(product)}, Family::A});
    }
  }
  for (std::uint32_t i = 1; i <= n + 1; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      for (std::uint32_t k = 1; k <= n + 1; ++k) {
        Word rhs;
        if (!coloring.at(i, j, k)) {
          rhs.push_back(z);
        }
        rules.push_back({{Letter::x(i), Letter::s(j), Letter::y(k)},
                         std::move(rhs),
                         Family::B});
      }
    }
  }
  for (std::uint32_t i = 1; i <= n + 1; ++i) {
    for (std::uint32_t j = 1; j <= n + 1; ++j) {
      rules.push_back({{Letter::x(i), Letter::y(j)}, {z}, Family::C});
    }
  }
  for (auto a : alphabet(n, false)) {
    rules.push_back({{z, a}, {z}, Family::ZLeft});
  }
  for (auto a : alphabet(n, true)) {
    rules.push_back({{a, z}, {z}, Family::ZRight});
  }
  return Presentation(table, coloring, std::move(rules));
}

}  // namespace detail

Presentation generate_presentation(CayleyTable const& table,
                                   Coloring const& coloring) {
  if (table.order() != coloring.order()) {
    throw std::invalid_argument("order mismatch: table has n=" +
                                std::to_string(table.order()) +
                                ", coloring has n=" +
                                std::to_string(coloring.order()));
  }
  if (auto assoc = is_associative(table); !assoc.associative) {
    throw AssociativityError(*assoc.witness);
  }
  if (auto report = check_conditions(coloring); !report.all_passed()) {
    throw ColoringError(std::move(report));
  }
  return detail::generate_presentation_unchecked(table, coloring);
}

namespace {

ordered_json tokens_of(Word const& w) {
  auto out = ordered_json::array();
  for (auto l : w) {
    out.push_back(format_letter(l));
  }
  return out;
}

Word word_of(ordered_json const& tokens, std::size_t n) {
  if (!tokens.is_array()) {
    throw std::invalid_argument("rule side must be a token list");
  }
  if (tokens.empty()) {
    return {};
  }
  std::string text;
  for (auto const& t : tokens) {
    auto tok = t.get<std::string>();
    if (tok == "1") {
      throw std::invalid_argument("token '1' is not allowed in rule lists");
    }
    text += tok + ' ';
  }
  return parse_word(text, n);
}

}  // namespace

std::string serialize_presentation(Presentation const& p) {
  auto const n = p.order();
  ordered_json doc;
  doc["n"] = n;

  auto cayley = ordered_json::array();
  for (std::size_t i = 1; i <= n; ++i) {
    auto row = ordered_json::array();
    for (std::size_t j = 1; j <= n; ++j) {
      row.push_back(p.table().at(i, j));
    }
    cayley.push_back(std::move(row));
  }
  doc["cayley"] = std::move(cayley);

  auto coloring = ordered_json::array();
  for (std::size_t j = 1; j <= n; ++j) {
    auto slice = ordered_json::array();
    for (std::size_t i = 1; i <= n + 1; ++i) {
      auto row = ordered_json::array();
      for (std::size_t k = 1; k <= n + 1; ++k) {
        row.push_back(p.coloring().at(i, j, k) ? 1 : 0);
      }
      slice.push_back(std::move(row));
    }
    coloring.push_back(std::move(slice));
  }
  doc["coloring"] = std::move(coloring);

  auto rules = ordered_json::array();
  for (auto const& r : p.rules()) {
    ordered_json rule;
    rule["family"] = std::string(to_string(r.family));
    rule["lhs"] = tokens_of(r.lhs);
    rule["rhs"] = tokens_of(r.rhs);
    rules.push_back(std::move(rule));
  }
  doc["rules"] = std::move(rules);
  return doc.dump(2) + "\n";
}

Presentation parse_presentation(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (nlohmann::json::parse_error const& e) {
    throw std::invalid_argument(std::string("malformed presentation JSON: ") +
                                e.what());
  }
  try {
    auto const n = doc.at("n").get<std::size_t>();
    auto const& cayley = doc.at("cayley");
    if (!cayley.is_array() || cayley.size() != n) {
      throw std::invalid_argument("cayley must have n rows");
    }
    std::vector<std::size_t> entries;
    for (auto const& row : cayley) {
      if (!row.is_array() || row.size() != n) {
        throw std::invalid_argument("cayley rows must have n entries");
      }
      for (auto const& e : row) {
        entries.push_back(e.get<std::size_t>());
      }
    }
    CayleyTable table(n, std::move(entries));

    auto const& slices = doc.at("coloring");
    if (!slices.is_array() || slices.size() != n) {
      throw std::invalid_argument("coloring must have n slices");
    }
    Coloring coloring(n);
    for (std::size_t j = 1; j <= n; ++j) {
      auto const& slice = slices[j - 1];
      if (!slice.is_array() || slice.size() != n + 1) {
        throw std::invalid_argument("coloring slices must have n+1 rows");
      }
      for (std::size_t i = 1; i <= n + 1; ++i) {
        auto const& row = slice[i - 1];
        if (!row.is_array() || row.size() != n + 1) {
          throw std::invalid_argument("coloring rows must have n+1 bits");
        }
        for (std::size_t k = 1; k <= n + 1; ++k) {
          auto const bit = row[k - 1].get<int>();
          if (bit != 0 && bit != 1) {
            throw std::invalid_argument("coloring bits must be 0 or 1");
          }
          coloring.set(i, j, k, bit == 1);
        }
      }
    }

    std::vector<Rule> rules;
    for (auto const& r : doc.at("rules")) {
      rules.push_back({word_of(r.at("lhs"), n), word_of(r.at("rhs"), n),
                       family_from_string(r.at("family").get<std::string>())});
    }
    return Presentation(std::move(table), std::move(coloring),
                        std::move(rules));
  } catch (nlohmann::json::exception const& e) {
    throw std::invalid_argument(std::string("malformed presentation: ") +
                                e.what());
  }
}

}  // namespace cfmonoid
