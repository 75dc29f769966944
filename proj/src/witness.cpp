#include "cfmonoid/witness.hpp"

#include <sstream>
#include <stdexcept>

#include "cfmonoid/rewrite.hpp"

namespace cfmonoid {

bool has_normal_shape(Word const& w) {
  if (is_zero(w)) {
    return true;
  }
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].is_z()) {
      return false;
    }
    if (p + 1 < w.size()) {
      auto const a = w[p];
      auto const b = w[p + 1];
      if ((a.is_s() && b.is_s()) || (a.is_x() && b.is_y())) {
        return false;
      }
      if (p + 2 < w.size() && a.is_x() && b.is_s() && w[p + 2].is_y()) {
        return false;
      }
    }
  }
  return true;
}

std::pair<Word, Word> decompose(Word const& w) {
  if (is_zero(w)) {
    throw std::invalid_argument("decompose: the zero has no decomposition");
  }
  if (!has_normal_shape(w)) {
    throw std::invalid_argument("decompose: '" + format_word(w) +
                                "' is not a normal form");
  }
  std::size_t cut = 0;
  while (cut < w.size() && !w[cut].is_x()) {
    ++cut;
  }
  auto const mid = w.begin() + static_cast<std::ptrdiff_t>(cut);
  return {Word(w.begin(), mid), Word(mid, w.end())};
}

namespace {

using Index = std::uint32_t;

// Coloring lookups with smallest-index tie-breaking. Each throws if the
// coloring lacks the entry the corresponding condition guarantees.

Index y_with(Coloring const& f, Index i, Index j, bool value, char const* c) {
  auto const m = static_cast<Index>(f.order() + 1);
  for (Index k = 1; k <= m; ++k) {
    if (f.at(i, j, k) == value) {
      return k;
    }
  }
  throw std::runtime_error(std::string("coloring violates ") + c);
}

Index x_with(Coloring const& f, Index j, Index k, bool value, char const* c) {
  auto const m = static_cast<Index>(f.order() + 1);
  for (Index i = 1; i <= m; ++i) {
    if (f.at(i, j, k) == value) {
      return i;
    }
  }
  throw std::runtime_error(std::string("coloring violates ") + c);
}

// k with f(i, j, k) != f(p, q, k)
Index y_separating(Coloring const& f, Index i, Index j, Index p, Index q) {
  auto const m = static_cast<Index>(f.order() + 1);
  for (Index k = 1; k <= m; ++k) {
    if (f.at(i, j, k) != f.at(p, q, k)) {
      return k;
    }
  }
  throw std::runtime_error("coloring violates C5");
}

// i with f(i, j, k) != f(i, q, l)
Index x_separating(Coloring const& f, Index j, Index k, Index q, Index l) {
  auto const m = static_cast<Index>(f.order() + 1);
  for (Index i = 1; i <= m; ++i) {
    if (f.at(i, j, k) != f.at(i, q, l)) {
      return i;
    }
  }
  throw std::runtime_error("coloring violates C6");
}

// The right end of a word containing x: "x_i" (j = 0) or "x_i s_j".
struct RightEnd {
  Index i = 0;
  Index j = 0;
};

RightEnd right_end(Word const& w) {
  auto const n = w.size();
  if (w[n - 1].is_x()) {
    return {w[n - 1].index, 0};
  }
  return {w[n - 2].index, w[n - 1].index};
}

// The left end of a word containing y: "y_k" (j = 0) or "s_j y_k".
struct LeftEnd {
  Index j = 0;
  Index k = 0;
};

LeftEnd left_end(Word const& w) {
  if (w[0].is_y()) {
    return {0, w[0].index};
  }
  return {w[0].index, w[1].index};
}

void require_nonzero_normal(Word const& w, Presentation const& p,
                            char const* who) {
  if (is_zero(w)) {
    throw std::invalid_argument(std::string(who) +
                                ": the zero has no unit context");
  }
  for (auto l : w) {
    if (!l.valid_for(p.order())) {
      throw std::invalid_argument(std::string(who) + ": letter " +
                                  format_letter(l) + " out of range");
    }
  }
  if (!is_normal_form(w, p) || !has_normal_shape(w)) {
    throw std::invalid_argument(std::string(who) + ": '" + format_word(w) +
                                "' is not a normal form");
  }
}

}  // namespace

std::pair<Word, Word> unit_context(Word const& w, Presentation const& p) {
  require_nonzero_normal(w, p, "unit_context");
  auto const& f = p.coloring();
  auto [prefix, tail] = decompose(w);

  // Strip tail = x.. from the right, one x-block at a time.
  Word right_context;
  while (!tail.empty()) {
    auto const end = right_end(tail);
    if (end.j == 0) {
      auto const k = y_with(f, end.i, 1, true, "C1");
      right_context.push_back(Letter::s(1));
      right_context.push_back(Letter::y(k));
      tail.pop_back();
    } else {
      auto const k = y_with(f, end.i, end.j, true, "C1");
      right_context.push_back(Letter::y(k));
      tail.resize(tail.size() - 2);
    }
  }

  // Strip prefix (no x) from the left. Pieces are prepended, so they are
  // collected innermost-first and reversed at the end.
  std::vector<Word> left_pieces;
  std::size_t pos = 0;
  while (pos < prefix.size()) {
    auto const a = prefix[pos];
    if (a.is_y()) {
      auto const i = x_with(f, 1, a.index, true, "C2");
      left_pieces.push_back({Letter::x(i), Letter::s(1)});
      pos += 1;
    } else if (pos + 1 < prefix.size()) {
      auto const k = prefix[pos + 1].index;
      auto const i = x_with(f, a.index, k, true, "C2");
      left_pieces.push_back({Letter::x(i)});
      pos += 2;
    } else {
      // lone s_j: wrap with x_1 . y_k
      auto const k = y_with(f, 1, a.index, true, "C1");
      left_pieces.push_back({Letter::x(1)});
      right_context.push_back(Letter::y(k));
      pos += 1;
    }
  }
  Word left_context;
  for (auto it = left_pieces.rbegin(); it != left_pieces.rend(); ++it) {
    left_context.insert(left_context.end(), it->begin(), it->end());
  }
  return {std::move(left_context), std::move(right_context)};
}

namespace {

bool is_unit_zero(Word const& a, Word const& b) {
  return (a.empty() && is_zero(b)) || (is_zero(a) && b.empty());
}

class TraceBuilder {
 public:
  TraceBuilder(Presentation const& p, Word const& u, Word const& v) : p_(p) {
    trace_.steps.push_back({u, v, Move{}, "generator pair"});
  }

  Word const& left() const { return trace_.steps.back().left; }
  Word const& right() const { return trace_.steps.back().right; }

  void multiply_left(Word const& g, std::string note) {
    auto const& last = trace_.steps.back();
    trace_.steps.push_back({concat(g, last.left), concat(g, last.right),
                            Move{MoveKind::MultiplyLeft, g, Side::Both},
                            std::move(note)});
  }

  void multiply_right(Word const& g, std::string note) {
    auto const& last = trace_.steps.back();
    trace_.steps.push_back({concat(last.left, g), concat(last.right, g),
                            Move{MoveKind::MultiplyRight, g, Side::Both},
                            std::move(note)});
  }

  void rewrite(std::string note) {
    auto const& last = trace_.steps.back();
    auto l = normal_form(last.left, p_);
    auto r = normal_form(last.right, p_);
    bool const left_changed = l != last.left;
    bool const right_changed = r != last.right;
    if (!left_changed && !right_changed) {
      return;
    }
    auto const side = left_changed && right_changed
                          ? Side::Both
                          : (left_changed ? Side::Left : Side::Right);
    trace_.steps.push_back({std::move(l), std::move(r),
                            Move{MoveKind::Rewrite, {}, side},
                            std::move(note)});
  }

  WitnessTrace take() { return std::move(trace_); }

 private:
  Presentation const& p_;
  WitnessTrace trace_;
};

void require_generator(Word const& w, Presentation const& p) {
  for (auto l : w) {
    if (!l.valid_for(p.order())) {
      throw std::invalid_argument("collapse: letter " + format_letter(l) +
                                  " out of range");
    }
  }
  if (!is_normal_form(w, p) || !has_normal_shape(w)) {
    throw std::invalid_argument("collapse: '" + format_word(w) +
                                "' is not a normal form");
  }
}

}  // namespace

WitnessTrace collapse(Word const& u, Word const& v, Presentation const& p) {
  if (u == v) {
    throw std::invalid_argument("collapse: identical inputs");
  }
  require_generator(u, p);
  require_generator(v, p);

  auto const& f = p.coloring();
  auto const s1 = Letter::s(1);
  TraceBuilder tb(p, u, v);

  // Each pass either finishes, moves to the zero case (which finishes on the
  // next pass), or shrinks |left| + |right|.
  std::size_t budget = u.size() + v.size() + 3;
  while (!is_unit_zero(tb.left(), tb.right())) {
    if (budget-- == 0) {
      throw std::logic_error("collapse made no progress on (" +
                             format_word(tb.left()) + ", " +
                             format_word(tb.right()) + ")");
    }
    Word const l = tb.left();
    Word const r = tb.right();
    bool const lx = contains_role(l, Role::X);
    bool const rx = contains_role(r, Role::X);
    bool const ly = contains_role(l, Role::Y);
    bool const ry = contains_role(r, Role::Y);

    if (is_zero(l) || is_zero(r)) {
      auto const& w = is_zero(l) ? r : l;
      auto const [a, b] = unit_context(w, p);
      if (!a.empty()) {
        tb.multiply_left(a, "zero: unit context");
      }
      if (!b.empty()) {
        tb.multiply_right(b, "zero: unit context");
      }
      tb.rewrite("zero: unit context");
      continue;
    }

    if (lx && rx) {
      auto const el = right_end(l);
      auto const er = right_end(r);
      if (el.j != 0 && er.j != 0) {
        if (el.i == er.i && el.j == er.j) {
          auto const k = y_with(f, el.i, el.j, true, "C1");
          tb.multiply_right({Letter::y(k)}, "x-x: equal ends x_i s_j, C1");
        } else {
          auto const k = y_separating(f, el.i, el.j, er.i, er.j);
          tb.multiply_right({Letter::y(k)}, "x-x: distinct ends x s, C5");
        }
      } else if (el.j != 0 || er.j != 0) {
        auto const& with_s = el.j != 0 ? el : er;
        auto const k = y_with(f, with_s.i, with_s.j, true, "C1");
        tb.multiply_right({Letter::y(k)}, "x-x: ends x_i s_j and x_p, C1");
      } else if (el.i == er.i) {
        auto const k = y_with(f, el.i, 1, true, "C1");
        tb.multiply_right({s1, Letter::y(k)}, "x-x: equal ends x_i, C1");
      } else {
        auto const k = y_separating(f, el.i, 1, er.i, 1);
        tb.multiply_right({s1, Letter::y(k)}, "x-x: distinct ends x_i, C5");
      }
      tb.rewrite("x-x: cancel right ends");
      continue;
    }

    if (ly && ry) {
      auto const el = left_end(l);
      auto const er = left_end(r);
      if (el.j != 0 && er.j != 0) {
        if (el.j == er.j && el.k == er.k) {
          auto const i = x_with(f, el.j, el.k, true, "C2");
          tb.multiply_left({Letter::x(i)}, "y-y: equal ends s_j y_k, C2");
        } else {
          auto const i = x_separating(f, el.j, el.k, er.j, er.k);
          tb.multiply_left({Letter::x(i)}, "y-y: distinct ends s y, C6");
        }
      } else if (el.j != 0 || er.j != 0) {
        auto const& with_s = el.j != 0 ? el : er;
        auto const i = x_with(f, with_s.j, with_s.k, true, "C2");
        tb.multiply_left({Letter::x(i)}, "y-y: ends s_j y_k and y_l, C2");
      } else if (el.k == er.k) {
        auto const i = x_with(f, 1, el.k, true, "C2");
        tb.multiply_left({Letter::x(i), s1}, "y-y: equal ends y_k, C2");
      } else {
        auto const i = x_separating(f, 1, el.k, 1, er.k);
        tb.multiply_left({Letter::x(i), s1}, "y-y: distinct ends y_k, C6");
      }
      tb.rewrite("y-y: cancel left ends");
      continue;
    }

    if (lx || rx) {
      auto const end = right_end(lx ? l : r);
      if (end.j == 0) {
        tb.multiply_right({Letter::y(end.i)}, "one x: x_i y_i = 0");
      } else {
        auto const k = y_with(f, end.i, end.j, false, "C3");
        tb.multiply_right({Letter::y(k)}, "one x: x_i s_j y_k = 0, C3");
      }
      tb.rewrite("one x: send one side to zero");
      continue;
    }

    if (ly || ry) {
      auto const end = left_end(ly ? l : r);
      if (end.j == 0) {
        tb.multiply_left({Letter::x(end.k)}, "one y: x_k y_k = 0");
      } else {
        auto const i = x_with(f, end.j, end.k, false, "C4");
        tb.multiply_left({Letter::x(i)}, "one y: x_i s_j y_k = 0, C4");
      }
      tb.rewrite("one y: send one side to zero");
      continue;
    }

    // Both sides are 1 or a single s-letter.
    if (l.empty() || r.empty()) {
      auto const j = (l.empty() ? r : l)[0].index;
      auto const k = y_with(f, 1, j, true, "C1");
      tb.multiply_left({Letter::x(1)}, "s-letters: 1 vs s_j, C1");
      tb.multiply_right({Letter::y(k)}, "s-letters: 1 vs s_j, C1");
    } else {
      auto const k = y_separating(f, 1, l[0].index, 1, r[0].index);
      tb.multiply_left({Letter::x(1)}, "s-letters: s_i vs s_j, C5");
      tb.multiply_right({Letter::y(k)}, "s-letters: s_i vs s_j, C5");
    }
    tb.rewrite("s-letters: wrap");
  }
  return tb.take();
}

TraceVerdict verify_trace(WitnessTrace const& t, Presentation const& p) {
  auto reject = [](std::size_t step, std::string reason) {
    return TraceVerdict{false, step, std::move(reason)};
  };
  auto valid_letters = [&](Word const& w) {
    for (auto l : w) {
      if (!l.valid_for(p.order())) {
        return false;
      }
    }
    return true;
  };

  if (t.steps.empty()) {
    return TraceVerdict{false, std::nullopt, "empty trace"};
  }
  auto const& gen = t.steps.front();
  if (gen.move.kind != MoveKind::Generator) {
    return reject(0, "step 0 is not GEN");
  }
  if (!valid_letters(gen.left) || !valid_letters(gen.right)) {
    return reject(0, "letter out of range");
  }
  if (gen.left == gen.right) {
    return reject(0, "generator pair is not distinct");
  }
  if (normal_form(gen.left, p) != gen.left ||
      normal_form(gen.right, p) != gen.right) {
    return reject(0, "generator pair is not in normal form");
  }

  for (std::size_t s = 1; s < t.steps.size(); ++s) {
    auto const& prev = t.steps[s - 1];
    auto const& cur = t.steps[s];
    if (!valid_letters(cur.left) || !valid_letters(cur.right) ||
        !valid_letters(cur.move.context)) {
      return reject(s, "letter out of range");
    }
    switch (cur.move.kind) {
      case MoveKind::Generator:
        return reject(s, "GEN after step 0");
      case MoveKind::MultiplyLeft:
        if (cur.left != concat(cur.move.context, prev.left) ||
            cur.right != concat(cur.move.context, prev.right)) {
          return reject(s, "MUL_LEFT does not match previous pair");
        }
        break;
      case MoveKind::MultiplyRight:
        if (cur.left != concat(prev.left, cur.move.context) ||
            cur.right != concat(prev.right, cur.move.context)) {
          return reject(s, "MUL_RIGHT does not match previous pair");
        }
        break;
      case MoveKind::Rewrite: {
        bool const do_left = cur.move.side != Side::Right;
        bool const do_right = cur.move.side != Side::Left;
        auto const want_left = do_left ? normal_form(prev.left, p) : prev.left;
        auto const want_right =
            do_right ? normal_form(prev.right, p) : prev.right;
        if (cur.left != want_left || cur.right != want_right) {
          return reject(s, "REWRITE does not yield the normal form");
        }
        break;
      }
    }
  }

  auto const& last = t.steps.back();
  if (!is_unit_zero(last.left, last.right)) {
    return reject(t.steps.size() - 1, "final pair is (" +
                                          format_word(last.left) + ", " +
                                          format_word(last.right) +
                                          "), not (1, 0)");
  }
  return TraceVerdict{true, std::nullopt, "ok"};
}

namespace {

std::string_view side_name(Side s) {
  switch (s) {
    case Side::Left:
      return "left";
    case Side::Right:
      return "right";
    case Side::Both:
      return "both";
  }
  return "?";
}

std::string format_move(Move const& m) {
  switch (m.kind) {
    case MoveKind::Generator:
      return "GEN";
    case MoveKind::MultiplyLeft:
      return "MUL_LEFT " + format_word(m.context);
    case MoveKind::MultiplyRight:
      return "MUL_RIGHT " + format_word(m.context);
    case MoveKind::Rewrite:
      return "REWRITE " + std::string(side_name(m.side));
  }
  return "?";
}

std::vector<std::string> split_tabs(std::string const& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto const tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) {
      break;
    }
    start = tab + 1;
  }
  return out;
}

}  // namespace

std::string format_trace(WitnessTrace const& t) {
  std::string out;
  for (std::size_t s = 0; s < t.steps.size(); ++s) {
    auto const& step = t.steps[s];
    out += std::to_string(s) + '\t' + format_move(step.move) + '\t' +
           format_word(step.left) + '\t' + format_word(step.right) + '\t' +
           step.note + '\n';
  }
  return out;
}

WitnessTrace parse_trace(std::string_view text, std::size_t n) {
  WitnessTrace t;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    auto const fields = split_tabs(line);
    if (fields.size() != 4 && fields.size() != 5) {
      throw ParseError("expected 4 or 5 tab-separated fields", line_no);
    }
    if (fields[0] != std::to_string(t.steps.size())) {
      throw ParseError("expected step number " +
                           std::to_string(t.steps.size()),
                       line_no);
    }
    try {
      WitnessStep step;
      auto const& mv = fields[1];
      auto const space = mv.find(' ');
      auto const tag = mv.substr(0, space);
      auto const arg = space == std::string::npos ? std::string()
                                                  : mv.substr(space + 1);
      if (tag == "GEN" && arg.empty()) {
        step.move = Move{};
      } else if (tag == "MUL_LEFT" || tag == "MUL_RIGHT") {
        step.move.kind = tag == "MUL_LEFT" ? MoveKind::MultiplyLeft
                                           : MoveKind::MultiplyRight;
        step.move.context = parse_word(arg, n);
      } else if (tag == "REWRITE") {
        step.move.kind = MoveKind::Rewrite;
        if (arg == "left") {
          step.move.side = Side::Left;
        } else if (arg == "right") {
          step.move.side = Side::Right;
        } else if (arg == "both") {
          step.move.side = Side::Both;
        } else {
          throw std::invalid_argument("unknown rewrite side '" + arg + "'");
        }
      } else {
        throw std::invalid_argument("unknown move '" + mv + "'");
      }
      step.left = parse_word(fields[2], n);
      step.right = parse_word(fields[3], n);
      if (fields.size() == 5) {
        step.note = fields[4];
      }
      t.steps.push_back(std::move(step));
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return t;
}

}  // namespace cfmonoid
