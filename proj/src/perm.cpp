#include "qstir/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace qstir {

MultisetPerm::MultisetPerm(std::vector<Letter> word, int max_order) : word_(std::move(word)) {
  if (word_.empty()) throw InvalidInput("empty word");
  if (word_.size() % 2 != 0) {
    throw InvalidInput("word length " + std::to_string(word_.size()) + " is odd");
  }
  const int n = order();
  if (n > max_order) {
    throw InvalidInput("order " + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(max_order));
  }
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (Letter v : word_) {
    if (v < 1 || v > n) {
      throw InvalidInput("value " + std::to_string(v) + " is outside 1.." + std::to_string(n));
    }
    ++seen[static_cast<std::size_t>(v)];
  }
  for (int v = 1; v <= n; ++v) {
    if (seen[static_cast<std::size_t>(v)] != 2) {
      throw InvalidInput("value " + std::to_string(v) + " occurs " +
                         std::to_string(seen[static_cast<std::size_t>(v)]) +
                         " times, expected 2");
    }
  }
}

MultisetPerm make_perm(std::vector<Letter> word, int max_order) {
  return MultisetPerm(std::move(word), max_order);
}

StatRecord stats(const MultisetPerm& perm) noexcept {
  StatRecord r;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
    if (perm[i] > perm[i + 1]) {
      ++r.des;
    } else if (perm[i] < perm[i + 1]) {
      ++r.asc;
    } else {
      ++r.pl;
    }
  }
  return r;
}

SegmentSet segment_set(const MultisetPerm& perm, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > perm.size()) {
    throw InvalidInput("segment [" + std::to_string(i) + "," + std::to_string(j) +
                       "] is out of range for length " + std::to_string(perm.size()));
  }
  return SegmentSet(perm.begin() + static_cast<std::ptrdiff_t>(i - 1),
                    perm.begin() + static_cast<std::ptrdiff_t>(j));
}

MultisetPerm reverse(const MultisetPerm& perm) {
  std::vector<Letter> w(perm.begin(), perm.end());
  std::reverse(w.begin(), w.end());
  return MultisetPerm(MultisetPerm::Unchecked{}, std::move(w));
}

MultisetPerm complement(const MultisetPerm& perm) {
  const Letter top = perm.order() + 1;
  std::vector<Letter> w;
  w.reserve(perm.size());
  for (Letter v : perm) w.push_back(top - v);
  return MultisetPerm(MultisetPerm::Unchecked{}, std::move(w));
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view tok = text.substr(pos, end - pos);
    Letter v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1) {
      throw InvalidInput("bad value '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = end;
  }
  return out;
}

MultisetPerm parse_perm(std::string_view text, int max_order) {
  return MultisetPerm(parse_letters(text), max_order);
}

std::string format_perm(const MultisetPerm& perm) {
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(perm[i]);
  }
  return out;
}

}  // namespace qstir
