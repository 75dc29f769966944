#include "cfmonoid/coloring.hpp"

#include <set>

#include "cfmonoid/semigroup.hpp"
#include "doctest.h"

using namespace cfmonoid;

TEST_CASE("third slice of the n=8 construction") {
  auto const c = build_coloring(8);
  CHECK(c.at(1, 3, 1));
  CHECK(!c.at(1, 3, 2));
  CHECK(c.at(1, 3, 8));
  CHECK(c.at(1, 3, 9));
  CHECK(!c.at(4, 3, 1));
  CHECK(c.at(9, 3, 9));
  // displayed rows 2 and 3 start "1 1"; row 4 starts "0 1 1"
  CHECK(c.at(2, 3, 1));
  CHECK(c.at(2, 3, 2));
  CHECK(c.at(3, 3, 3));
  CHECK(c.at(4, 3, 2));
  CHECK(c.at(4, 3, 3));
  CHECK(c.at(4, 3, 4));
  CHECK(!c.at(4, 3, 5));
}

TEST_CASE("n=1 construction") {
  auto const c = build_coloring(1);
  CHECK(c.at(1, 1, 1));
  CHECK(c.at(2, 1, 2));
  CHECK(!c.at(1, 1, 2));
  CHECK(!c.at(2, 1, 1));
}

TEST_CASE("coloring_entry") {
  CHECK(coloring_entry(8, 1, 3, 1));
  CHECK(!coloring_entry(8, 4, 3, 1));
  CHECK(coloring_entry(5, 3, 2, 3));
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t i = 1; i <= n + 1; ++i) {
      CHECK(coloring_entry(n, i, n, i));
    }
  }
  CHECK_THROWS_AS(coloring_entry(2, 0, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(coloring_entry(2, 4, 1, 1), std::out_of_range);
  CHECK_THROWS_AS(coloring_entry(2, 1, 3, 1), std::out_of_range);
  CHECK_THROWS_AS(coloring_entry(2, 1, 1, 4), std::out_of_range);
}

TEST_CASE("construction agrees with the closed form") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const c = build_coloring(n);
    for (std::size_t i = 1; i <= n + 1; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t k = 1; k <= n + 1; ++k) {
          CHECK(c.at(i, j, k) == coloring_entry(n, i, j, k));
        }
      }
    }
  }
}

TEST_CASE("every slice column has exactly j ones") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const c = build_coloring(n);
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n + 1; ++k) {
        std::size_t ones = 0;
        for (std::size_t i = 1; i <= n + 1; ++i) {
          ones += c.at(i, j, k) ? 1 : 0;
        }
        CHECK(ones == j);
      }
    }
  }
}

TEST_CASE("check_conditions on the construction") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    auto const r = check_conditions(build_coloring(n));
    CHECK(r.all_passed());
  }
}

TEST_CASE("row and column tuples are injective (C5/C6 restated)") {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const c = build_coloring(n);
    std::set<std::vector<bool>> rows;
    std::set<std::vector<bool>> cols;
    for (std::size_t i = 1; i <= n + 1; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        std::vector<bool> t;
        for (std::size_t k = 1; k <= n + 1; ++k) {
          t.push_back(c.at(i, j, k));
        }
        rows.insert(t);
      }
    }
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n + 1; ++k) {
        std::vector<bool> t;
        for (std::size_t i = 1; i <= n + 1; ++i) {
          t.push_back(c.at(i, j, k));
        }
        cols.insert(t);
      }
    }
    CHECK(rows.size() == (n + 1) * n);
    CHECK(cols.size() == n * (n + 1));
  }
}

TEST_CASE("check_conditions on constant colorings") {
  Coloring ones(2);
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 2; ++j) {
      for (std::size_t k = 1; k <= 3; ++k) {
        ones.set(i, j, k, true);
      }
    }
  }
  auto const r1 = check_conditions(ones);
  CHECK(r1[Condition::C1].passed);
  CHECK(r1[Condition::C2].passed);
  CHECK(!r1[Condition::C3].passed);
  CHECK(!r1[Condition::C4].passed);
  CHECK(!r1[Condition::C5].passed);
  CHECK(!r1[Condition::C6].passed);
  CHECK(r1[Condition::C3].violation == std::array<std::size_t, 4>{1, 1, 0, 0});
  CHECK(r1[Condition::C5].violation == std::array<std::size_t, 4>{1, 1, 1, 2});
  CHECK(!r1.all_passed());

  auto const r0 = check_conditions(Coloring(2));
  CHECK(!r0[Condition::C1].passed);
  CHECK(!r0[Condition::C2].passed);
  CHECK(r0[Condition::C3].passed);
  CHECK(r0[Condition::C4].passed);
  CHECK(r0.describe().starts_with("C1 FAIL (1,1)\nC2 FAIL (1,1)\nC3 pass\n"));
}

TEST_CASE("a single flipped bit is caught") {
  // f(1,1,.) and f(2,1,.) differ only at k=1,2 for n=1; make them equal.
  auto c = build_coloring(1);
  c.set(2, 1, 1, true);
  c.set(2, 1, 2, false);
  auto const r = check_conditions(c);
  CHECK(!r[Condition::C5].passed);
  CHECK(r[Condition::C5].violation == std::array<std::size_t, 4>{1, 1, 2, 1});
}

TEST_CASE("coloring text format") {
  auto const c = build_coloring(2);
  auto const text = format_coloring(c);
  CHECK(text ==
        "slice 1\n1 0 0\n0 1 0\n0 0 1\n"
        "slice 2\n1 0 1\n1 1 0\n0 1 1\n");
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const b = build_coloring(n);
    CHECK(parse_coloring(format_coloring(b)) == b);
  }
  CHECK(parse_coloring("# comment\nslice 2\n1 0 1\n1 1 0\n0 1 1\n\nslice 1\n"
                       "1 0 0\n0 1 0\n0 0 1\n") == c);
  CHECK_THROWS_AS(parse_coloring("slice 1\n1 0\n0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("1 0\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("slice 1\n1 0\n0 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("slice 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("slice 1\n1 0 0\n0 1 0\n0 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring(""), ParseError);
}
