#include "cfmonoid/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cfmonoid {

bool Letter::valid_for(std::size_t n) const noexcept {
  switch (role) {
    case Role::S:
      return index >= 1 && index <= n;
    case Role::X:
    case Role::Y:
      return index >= 1 && index <= n + 1;
    case Role::Z:
      return index == 0;
  }
  return false;
}

std::vector<Letter> alphabet(std::size_t n, bool with_zero) {
  std::vector<Letter> out;
  auto const m = static_cast<std::uint32_t>(n);
  for (std::uint32_t i = 1; i <= m; ++i) {
    out.push_back(Letter::s(i));
  }
  for (std::uint32_t i = 1; i <= m + 1; ++i) {
    out.push_back(Letter::x(i));
  }
  for (std::uint32_t i = 1; i <= m + 1; ++i) {
    out.push_back(Letter::y(i));
  }
  if (with_zero) {
    out.push_back(Letter::z());
  }
  return out;
}

bool contains_role(Word const& w, Role role) {
  return std::any_of(w.begin(), w.end(),
                     [role](Letter l) { return l.role == role; });
}

bool is_zero(Word const& w) { return w.size() == 1 && w[0].is_z(); }

Word concat(Word a, Word const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word concat(Word const& a, Word const& b, Word const& c) {
  Word out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

Word parse_word(std::string_view text, std::size_t n) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) {
    tokens.push_back(std::move(tok));
  }
  if (tokens.empty()) {
    throw std::invalid_argument("empty word text (write 1 for the identity)");
  }
  if (tokens.size() == 1 && tokens[0] == "1") {
    return {};
  }
  Word w;
  for (auto const& tok : tokens) {
    if (tok == "0") {
      w.push_back(Letter::z());
      continue;
    }
    if (tok == "1") {
      throw std::invalid_argument("token '1' must be the whole word");
    }
    Role role;
    switch (tok[0]) {
      case 's':
        role = Role::S;
        break;
      case 'x':
        role = Role::X;
        break;
      case 'y':
        role = Role::Y;
        break;
      default:
        throw std::invalid_argument("unknown token '" + tok + "'");
    }
    std::uint32_t index = 0;
    auto const* first = tok.data() + 1;
    auto const* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (first == last || ec != std::errc() || ptr != last) {
      throw std::invalid_argument("unknown token '" + tok + "'");
    }
    Letter l{role, index};
    if (!l.valid_for(n)) {
      throw std::invalid_argument("index out of range in token '" + tok +
                                  "' for n=" + std::to_string(n));
    }
    w.push_back(l);
  }
  return w;
}

std::string format_letter(Letter l) {
  switch (l.role) {
    case Role::S:
      return "s" + std::to_string(l.index);
    case Role::X:
      return "x" + std::to_string(l.index);
    case Role::Y:
      return "y" + std::to_string(l.index);
    case Role::Z:
      return "0";
  }
  return "?";
}

std::string format_word(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p > 0) {
      out += ' ';
    }
    out += format_letter(w[p]);
  }
  return out;
}

std::size_t WordHash::operator()(Word const& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto l : w) {
    h ^= l.code();
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace cfmonoid
