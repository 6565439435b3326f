#include "qstir/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace qstir {

Pattern::Pattern(std::vector<Letter> word) : word_(std::move(word)) {
  if (word_.empty()) throw InvalidInput("empty pattern");
  k_ = *std::max_element(word_.begin(), word_.end());
  std::vector<bool> used(static_cast<std::size_t>(std::max(k_, 0)) + 1, false);
  for (Letter v : word_) {
    if (v < 1) throw InvalidInput("pattern letters must be positive");
    used[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= k_; ++v) {
    if (!used[static_cast<std::size_t>(v)]) {
      throw InvalidInput("pattern alphabet skips " + std::to_string(v));
    }
  }
}

bool same_relative_order(std::span<const Letter> a, std::span<const Letter> b) {
  if (a.size() != b.size()) {
    throw InvalidInput("relative order of sequences with different lengths");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

namespace {

// Depth-first search over increasing positions. Every new position is
// constrained by the values already placed: an equal letter fixes the value,
// distinct letters give strict lower/upper bounds.
class Matcher {
 public:
  Matcher(std::span<const Letter> word, const Pattern& pattern)
      : word_(word), pat_(pattern.word()), picked_(pat_.size()) {}

  bool run() { return place(0, 0); }
  const std::vector<std::size_t>& picked() const { return picked_; }

 private:
  bool place(std::size_t t, std::size_t from) {
    const std::size_t m = pat_.size();
    if (t == m) return true;
    if (word_.size() < m - t) return false;
    const std::size_t last = word_.size() - (m - t);  // inclusive bound on position
    if (from > last) return false;

    Letter lo = 1;
    Letter hi = std::numeric_limits<Letter>::max();
    std::optional<Letter> fixed;
    for (std::size_t s = 0; s < t; ++s) {
      const Letter v = word_[picked_[s]];
      if (pat_[s] == pat_[t]) {
        fixed = v;
      } else if (pat_[s] < pat_[t]) {
        lo = std::max(lo, v + 1);
      } else {
        hi = std::min(hi, v - 1);
      }
    }
    if (lo > hi) return false;
    for (std::size_t j = from; j <= last; ++j) {
      const Letter v = word_[j];
      if (fixed ? v != *fixed : (v < lo || v > hi)) continue;
      picked_[t] = j;
      if (place(t + 1, j + 1)) return true;
    }
    return false;
  }

  std::span<const Letter> word_;
  std::span<const Letter> pat_;
  std::vector<std::size_t> picked_;
};

}  // namespace

std::optional<Occurrence> contains(const MultisetPerm& perm, const Pattern& pattern) {
  Matcher m(perm.word(), pattern);
  if (!m.run()) return std::nullopt;
  Occurrence occ;
  occ.reserve(pattern.length());
  for (std::size_t p : m.picked()) occ.push_back(p + 1);
  return occ;
}

bool contains_any(std::span<const Letter> word, const Pattern& pattern) {
  if (word.size() < pattern.length()) return false;
  Matcher m(word, pattern);
  return m.run();
}

bool avoids_all(const MultisetPerm& perm, const PatternSet& patterns) {
  if (patterns.empty()) throw InvalidInput("avoidance query with an empty pattern set");
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Pattern& p) { return contains_any(perm.word(), p); });
}

// 1212/2121-avoidance is the same as the pairs of equal letters forming a
// non-crossing matching, which a stack checks in one pass.
bool is_quasi_stirling(const MultisetPerm& perm) noexcept {
  std::vector<bool> opened(static_cast<std::size_t>(perm.order()) + 1, false);
  std::vector<Letter> stack;
  stack.reserve(perm.size() / 2);
  for (Letter v : perm) {
    if (!opened[static_cast<std::size_t>(v)]) {
      opened[static_cast<std::size_t>(v)] = true;
      stack.push_back(v);
    } else {
      if (stack.empty() || stack.back() != v) return false;
      stack.pop_back();
    }
  }
  return true;
}

// 212-avoidance: non-crossing, and every value nested inside v exceeds v.
bool is_stirling(const MultisetPerm& perm) noexcept {
  std::vector<bool> opened(static_cast<std::size_t>(perm.order()) + 1, false);
  std::vector<Letter> stack;
  stack.reserve(perm.size() / 2);
  for (Letter v : perm) {
    if (!opened[static_cast<std::size_t>(v)]) {
      if (!stack.empty() && stack.back() > v) return false;
      opened[static_cast<std::size_t>(v)] = true;
      stack.push_back(v);
    } else {
      if (stack.empty() || stack.back() != v) return false;
      stack.pop_back();
    }
  }
  return true;
}

Pattern reverse(const Pattern& p) {
  std::vector<Letter> w(p.word().begin(), p.word().end());
  std::reverse(w.begin(), w.end());
  return Pattern(std::move(w));
}

Pattern complement(const Pattern& p) {
  std::vector<Letter> w;
  w.reserve(p.length());
  for (Letter v : p.word()) w.push_back(p.alphabet_size() + 1 - v);
  return Pattern(std::move(w));
}

std::set<PatternSet> symmetry_closure(const PatternSet& patterns) {
  std::set<PatternSet> orbit;
  PatternSet r, c, rc;
  for (const Pattern& p : patterns) {
    r.insert(reverse(p));
    c.insert(complement(p));
    rc.insert(reverse(complement(p)));
  }
  orbit.insert(patterns);
  orbit.insert(std::move(r));
  orbit.insert(std::move(c));
  orbit.insert(std::move(rc));
  return orbit;
}

Pattern parse_pattern(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidInput("empty pattern");
  const bool spaced = std::any_of(text.begin(), text.end(),
                                  [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (spaced) return Pattern(parse_letters(text));
  std::vector<Letter> w;
  for (char ch : text) {
    if (ch < '1' || ch > '9') {
      throw InvalidInput("bad pattern '" + std::string(text) + "'");
    }
    w.push_back(ch - '0');
  }
  return Pattern(std::move(w));
}

std::string format_pattern(const Pattern& p) {
  std::string out;
  const bool compact = p.alphabet_size() <= 9;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (!compact && i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

PatternSet parse_pattern_set(std::string_view text) {
  PatternSet out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    out.insert(parse_pattern(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw InvalidInput("trailing comma in pattern set");
  }
  return out;
}

std::string format_pattern_set(const PatternSet& patterns) {
  std::string out;
  for (const Pattern& p : patterns) {
    if (!out.empty()) out += ',';
    out += format_pattern(p);
  }
  return out;
}

const std::vector<Pattern>& classical_s3() {
  static const std::vector<Pattern> s3 = {
      Pattern({1, 2, 3}), Pattern({1, 3, 2}), Pattern({2, 1, 3}),
      Pattern({2, 3, 1}), Pattern({3, 1, 2}), Pattern({3, 2, 1})};
  return s3;
}

}  // namespace qstir
