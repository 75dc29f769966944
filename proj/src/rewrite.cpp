#include "cfmonoid/rewrite.hpp"

#include <algorithm>
#include <span>

namespace cfmonoid {

namespace {

struct Match {
  std::size_t position;
  std::size_t rule;
};

// Leftmost match starting at or after `from`, shortest lhs first.
std::optional<Match> find_match(Word const& w, Presentation const& p,
                                std::size_t from) {
  std::span<Letter const> const view(w);
  for (std::size_t pos = from; pos < w.size(); ++pos) {
    auto const longest = std::min(p.max_lhs_length(), w.size() - pos);
    for (std::size_t len = 1; len <= longest; ++len) {
      if (auto r = p.find_rule(view.subspan(pos, len))) {
        return Match{pos, *r};
      }
    }
  }
  return std::nullopt;
}

Word apply_at(Word const& w, std::size_t pos, Rule const& rule) {
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), rule.rhs.begin(), rule.rhs.end());
  out.insert(out.end(),
             w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()),
             w.end());
  return out;
}

}  // namespace

Word normal_form(Word const& w, Presentation const& p) {
  Word current = w;
  std::size_t from = 0;
  while (auto m = find_match(current, p, from)) {
    current = apply_at(current, m->position, p.rules()[m->rule]);
    // No match starts before m->position, so after the replacement any new
    // match must overlap it.
    auto const back = p.max_lhs_length() - 1;
    from = m->position > back ? m->position - back : 0;
  }
  return current;
}

bool is_normal_form(Word const& w, Presentation const& p) {
  return !find_match(w, p, 0).has_value();
}

std::vector<Word> one_step_reducts(Word const& w, Presentation const& p) {
  std::vector<Word> out;
  std::span<Letter const> const view(w);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    auto const longest = std::min(p.max_lhs_length(), w.size() - pos);
    for (std::size_t len = 1; len <= longest; ++len) {
      if (auto r = p.find_rule(view.subspan(pos, len))) {
        out.push_back(apply_at(w, pos, p.rules()[*r]));
      }
    }
  }
  return out;
}

std::vector<CriticalPair> critical_pairs(Presentation const& p) {
  std::vector<CriticalPair> out;
  auto const& rules = p.rules();
  for (std::size_t a = 0; a < rules.size(); ++a) {
    auto const& l1 = rules[a].lhs;
    for (std::size_t b = 0; b < rules.size(); ++b) {
      auto const& l2 = rules[b].lhs;
      // Containment: l2 sits inside l1 at position pos.
      if (a != b && l2.size() <= l1.size()) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (!std::equal(l2.begin(), l2.end(),
                          l1.begin() + static_cast<std::ptrdiff_t>(pos))) {
            continue;
          }
          CriticalPair cp;
          cp.overlap = l1;
          cp.left_reduct = rules[a].rhs;
          cp.right_reduct = apply_at(l1, pos, rules[b]);
          cp.first_rule = a;
          cp.second_rule = b;
          cp.position = pos;
          cp.containment = true;
          out.push_back(std::move(cp));
        }
      }
      // Proper overlap: a suffix of l1 of length ov equals a prefix of l2.
      auto const max_ov = std::min(l1.size(), l2.size());
      for (std::size_t ov = 1; ov < max_ov; ++ov) {
        auto const pos = l1.size() - ov;
        if (!std::equal(l1.begin() + static_cast<std::ptrdiff_t>(pos),
                        l1.end(), l2.begin())) {
          continue;
        }
        Word overlap = l1;
        overlap.insert(overlap.end(),
                       l2.begin() + static_cast<std::ptrdiff_t>(ov), l2.end());
        CriticalPair cp;
        cp.left_reduct = apply_at(overlap, 0, rules[a]);
        cp.right_reduct = apply_at(overlap, pos, rules[b]);
        cp.overlap = std::move(overlap);
        cp.first_rule = a;
        cp.second_rule = b;
        cp.position = pos;
        out.push_back(std::move(cp));
      }
    }
  }
  return out;
}

CriticalPair const* ConfluenceReport::first_failure() const noexcept {
  for (auto const& cp : pairs) {
    if (!cp.joinable) {
      return &cp;
    }
  }
  return nullptr;
}

ConfluenceReport check_local_confluence(Presentation const& p) {
  ConfluenceReport report;
  report.pairs = critical_pairs(p);
  for (auto& cp : report.pairs) {
    cp.left_normal = normal_form(cp.left_reduct, p);
    cp.right_normal = normal_form(cp.right_reduct, p);
    cp.joinable = cp.left_normal == cp.right_normal;
    if (!cp.joinable) {
      ++report.non_joinable;
    }
  }
  return report;
}

std::string describe(CriticalPair const& cp, Presentation const& p) {
  auto const& r1 = p.rules()[cp.first_rule];
  auto const& r2 = p.rules()[cp.second_rule];
  std::string out = "overlap [" + format_word(cp.overlap) + "] rules " +
                    std::string(to_string(r1.family)) + "#" +
                    std::to_string(cp.first_rule) + " / " +
                    std::string(to_string(r2.family)) + "#" +
                    std::to_string(cp.second_rule) + " at " +
                    std::to_string(cp.position) + ": [" +
                    format_word(cp.left_reduct) + "] -> [" +
                    format_word(cp.left_normal) + "], [" +
                    format_word(cp.right_reduct) + "] -> [" +
                    format_word(cp.right_normal) + "] ";
  out += cp.joinable ? "joinable" : "NOT joinable";
  return out;
}

std::vector<Word> enumerate_normal_forms(Presentation const& p,
                                         std::size_t maxlen) {
  auto const letters = alphabet(p.order(), false);
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    auto const level_end = out.size();
    for (std::size_t idx = level_begin; idx < level_end; ++idx) {
      for (auto l : letters) {
        Word w = out[idx];
        w.push_back(l);
        // w's proper prefix is irreducible, so only factors ending at the new
        // letter need checking.
        std::span<Letter const> const view(w);
        bool reducible = false;
        auto const longest = std::min(p.max_lhs_length(), w.size());
        for (std::size_t k = 1; k <= longest && !reducible; ++k) {
          reducible = p.find_rule(view.subspan(w.size() - k, k)).has_value();
        }
        if (!reducible) {
          out.push_back(std::move(w));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace cfmonoid
