#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstir/perm.hpp"

namespace qstir {

/// A classical pattern over the contiguous alphabet {1..k}. Letters may
/// repeat (212, 1212); equal letters demand equal values in an occurrence.
class Pattern {
 public:
  /// Throws InvalidInput when the word is empty or its letters are not
  /// exactly {1..k}.
  explicit Pattern(std::vector<Letter> word);

  std::size_t length() const noexcept { return word_.size(); }
  int alphabet_size() const noexcept { return k_; }
  std::span<const Letter> word() const noexcept { return word_; }
  Letter operator[](std::size_t i) const noexcept { return word_[i]; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Letter> word_;
  int k_ = 0;
};

using PatternSet = std::set<Pattern>;

/// 1-based strictly increasing positions of an occurrence.
using Occurrence = std::vector<std::size_t>;

bool same_relative_order(std::span<const Letter> a, std::span<const Letter> b);

/// Lexicographically least occurrence of `pattern` in `perm`, if any.
std::optional<Occurrence> contains(const MultisetPerm& perm, const Pattern& pattern);
bool contains_any(std::span<const Letter> word, const Pattern& pattern);

/// True iff `perm` avoids every pattern. An empty set is rejected.
bool avoids_all(const MultisetPerm& perm, const PatternSet& patterns);

bool is_quasi_stirling(const MultisetPerm& perm) noexcept;
bool is_stirling(const MultisetPerm& perm) noexcept;

Pattern reverse(const Pattern& p);
Pattern complement(const Pattern& p);

/// Orbit of the set under {id, reverse, complement, reverse∘complement},
/// applied to every member.
std::set<PatternSet> symmetry_closure(const PatternSet& patterns);

/// "1212" or, for alphabets above 9, "1 2 10 ...".
Pattern parse_pattern(std::string_view text);
std::string format_pattern(const Pattern& p);

/// "132,213,321". Empty text yields an empty set.
PatternSet parse_pattern_set(std::string_view text);
std::string format_pattern_set(const PatternSet& patterns);

/// The six patterns of length three without repeated letters, in
/// lexicographic order: 123, 132, 213, 231, 312, 321.
const std::vector<Pattern>& classical_s3();

}  // namespace qstir
