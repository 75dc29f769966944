// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cfmonoid/coloring.hpp"
#include "cfmonoid/presentation.hpp"
#include "cfmonoid/rewrite.hpp"
#include "cfmonoid/semigroup.hpp"
#include "cfmonoid/witness.hpp"
#include "oracles.hpp"

using namespace cfmonoid;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0 for no limit
  std::function<Outcome()> body;
};

Presentation make(std::string_view name) {
  auto const t = builtin(name);
  return generate_presentation(t, build_coloring(t.order()));
}

std::vector<std::string> small_builtins() {
  std::vector<std::string> out;
  for (auto const& name : builtin_names()) {
    if (builtin(name).order() <= 2) {
      out.push_back(name);
    }
  }
  return out;
}

Outcome coloring_conditions() {
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const r = check_conditions(build_coloring(n));
    if (!r.all_passed()) {
      return {false, "n=" + std::to_string(n) + "\n" + r.describe()};
    }
  }
  return {true, "C1..C6 hold for n = 1..8"};
}

Outcome third_slice() {
  auto const c = build_coloring(8);
  for (std::size_t i = 1; i <= 9; ++i) {
    for (std::size_t k = 1; k <= 9; ++k) {
      auto const r = (i + 9 - k) % 9;
      bool const want = r <= 2;
      if (c.at(i, 3, k) != want) {
        return {false, "entry (" + std::to_string(i) + "," +
                           std::to_string(k) + ") differs"};
      }
    }
  }
  struct Spot {
    std::size_t i, k;
    bool bit;
  };
  for (auto [i, k, bit] : {Spot{1, 1, true}, Spot{1, 2, false},
                           Spot{1, 8, true}, Spot{1, 9, true},
                           Spot{4, 1, false}, Spot{9, 9, true}}) {
    if (c.at(i, 3, k) != bit) {
      return {false, "corner (" + std::to_string(i) + "," +
                         std::to_string(k) + ") differs"};
    }
  }
  return {true, "81 entries and 6 corners match"};
}

Outcome oracle_equivalence() {
  std::size_t cells = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const c = build_coloring(n);
    for (std::size_t i = 1; i <= n + 1; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t k = 1; k <= n + 1; ++k) {
          ++cells;
          if (c.at(i, j, k) != coloring_entry(n, i, j, k)) {
            return {false, "mismatch at n=" + std::to_string(n)};
          }
        }
      }
    }
  }
  return {true, std::to_string(cells) + " cells agree"};
}

Outcome completeness() {
  std::size_t pairs = 0;
  for (auto const& name : builtin_names()) {
    auto const report = check_local_confluence(make(name));
    pairs += report.pairs.size();
    if (!report.confluent()) {
      return {false, name + " has a non-joinable critical pair"};
    }
  }
  CayleyTable const bad(2, {2, 1, 1, 1});
  auto const witness = *is_associative(bad).witness;
  auto const p =
      detail::generate_presentation_unchecked(bad, build_coloring(2));
  auto const report = check_local_confluence(p);
  Word const overlap{Letter::s(static_cast<std::uint32_t>(witness.i)),
                     Letter::s(static_cast<std::uint32_t>(witness.j)),
                     Letter::s(static_cast<std::uint32_t>(witness.k))};
  for (auto const& cp : report.pairs) {
    if (!cp.joinable && cp.overlap == overlap &&
        p.rules()[cp.first_rule].family == Family::A &&
        p.rules()[cp.second_rule].family == Family::A) {
      return {true, std::to_string(pairs) +
                        " pairs joinable over 7 builtins; bad table fails at " +
                        format_word(overlap)};
    }
  }
  return {false, "no non-joinable A-A pair at " + format_word(overlap)};
}

Outcome embedding() {
  for (auto const& name : builtin_names()) {
    auto const p = make(name);
    auto const n = static_cast<std::uint32_t>(p.order());
    std::vector<Word> images;
    for (std::uint32_t i = 1; i <= n; ++i) {
      Word const si{Letter::s(i)};
      if (normal_form(si, p) != si) {
        return {false, name + ": s" + std::to_string(i) + " not normal"};
      }
      images.push_back(si);
      for (std::uint32_t j = 1; j <= n; ++j) {
        Word const want{
            Letter::s(static_cast<std::uint32_t>(p.table().at(i, j)))};
        if (normal_form({Letter::s(i), Letter::s(j)}, p) != want) {
          return {false, name + ": s" + std::to_string(i) + " s" +
                             std::to_string(j)};
        }
      }
    }
    for (std::size_t a = 0; a < images.size(); ++a) {
      for (std::size_t b = a + 1; b < images.size(); ++b) {
        if (images[a] == images[b]) {
          return {false, name + ": images coincide"};
        }
      }
    }
  }
  return {true, "all 7 builtins embed"};
}

Outcome brute_confluence() {
  std::size_t words = 0;
  for (auto const& name : small_builtins()) {
    auto const r = oracle::brute_force_confluence(make(name), 6);
    words += r.words;
    if (r.failures != 0) {
      return {false, name + ": " + std::to_string(r.failures) +
                         " words, first " + format_word(*r.first_failure)};
    }
  }
  return {true, std::to_string(words) + " words over " +
                    std::to_string(small_builtins().size()) +
                    " presentations"};
}

Outcome collapse_sweep() {
  auto const p = make("leftzero2");
  auto words = enumerate_normal_forms(p, 3);
  words.push_back(Word{Letter::z()});
  std::size_t traces = 0;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      auto const t = collapse(words[a], words[b], p);
      auto const v = verify_trace(t, p);
      auto const& last = t.steps.back();
      bool const terminal = (last.left.empty() && is_zero(last.right)) ||
                            (is_zero(last.left) && last.right.empty());
      if (!v.accepted || !terminal) {
        return {false, format_word(words[a]) + " / " + format_word(words[b]) +
                           ": " + v.reason};
      }
      ++traces;
    }
  }
  return {true, std::to_string(traces) + " traces accepted"};
}

Outcome unit_contexts() {
  std::size_t checked = 0;
  std::size_t bfs = 0;
  for (auto const& name : small_builtins()) {
    auto const p = make(name);
    for (auto const& w : enumerate_normal_forms(p, 5)) {
      auto const [a, b] = unit_context(w, p);
      if (!normal_form(concat(a, w, b), p).empty()) {
        return {false, name + ": " + format_word(w)};
      }
      ++checked;
      if (w.size() <= 2) {
        auto const found = oracle::bfs_unit_context(w, p, 6);
        if (!found ||
            !normal_form(concat(found->first, w, found->second), p).empty() ||
            a.size() + b.size() < found->first.size() + found->second.size()) {
          return {false, name + ": search disagrees on " + format_word(w)};
        }
        ++bfs;
      }
    }
  }
  return {true, std::to_string(checked) + " forms cancelled, " +
                    std::to_string(bfs) + " cross-checked by search"};
}

Outcome census() {
  auto const p = make("trivial");
  auto const one = enumerate_normal_forms(p, 1);
  auto const two = enumerate_normal_forms(p, 2);
  if (one.size() != 6 || two.size() != 26) {
    return {false, std::to_string(one.size()) + " / " +
                       std::to_string(two.size())};
  }
  if (one != oracle::filtered_normal_forms(p, 1) ||
      two != oracle::filtered_normal_forms(p, 2)) {
    return {false, "differs from the factor filter"};
  }
  return {true, "6 and 26 words"};
}

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "coloring conditions C1..C6, n = 1..8", 1.0, coloring_conditions},
      {2, "third slice of the n = 8 coloring", 0, third_slice},
      {3, "construction equals closed form, n <= 8", 0, oracle_equivalence},
      {4, "completeness of all builtins; bad table caught", 5.0,
       completeness},
      {5, "embedding of S into M", 0, embedding},
      {6, "brute-force confluence, n <= 2, |w| <= 6", 60.0, brute_confluence},
      {7, "collapse sweep on leftzero2, |w| <= 3", 60.0, collapse_sweep},
      {8, "unit contexts, n <= 2, |w| <= 5", 60.0, unit_contexts},
      {9, "normal-form census for n = 1", 0, census},
  };

  int failures = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.passed = false;
      o.detail += " (over time limit " + std::to_string(c.time_limit_s) + " s)";
    }
    failures += o.passed ? 0 : 1;
    std::printf("[%s] %d. %s (%.3f s): %s\n", o.passed ? "PASS" : "FAIL",
                c.id, c.title.c_str(), secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
