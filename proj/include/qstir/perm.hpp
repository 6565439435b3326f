#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qstir {

/// Raised for malformed or out-of-domain input (bad words, patterns, trees).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Letter = int;

inline constexpr int kDefaultMaxOrder = 64;

/// A permutation of the multiset {1,1,2,2,...,n,n}.
///
/// Immutable after construction. The order n is inferred from the word; every
/// value in 1..n occurs exactly twice.
class MultisetPerm {
 public:
  struct Unchecked {};

  /// Validating constructor. Throws InvalidInput on an odd length, a value
  /// outside 1..n, a multiplicity other than two, or n above `max_order`.
  explicit MultisetPerm(std::vector<Letter> word, int max_order = kDefaultMaxOrder);

  /// Hot-path constructor for generators that already guarantee validity.
  MultisetPerm(Unchecked, std::vector<Letter> word) noexcept
      : word_(std::move(word)) {}

  int order() const noexcept { return static_cast<int>(word_.size() / 2); }
  std::size_t size() const noexcept { return word_.size(); }
  std::span<const Letter> word() const noexcept { return word_; }
  Letter operator[](std::size_t i) const noexcept { return word_[i]; }

  auto begin() const noexcept { return word_.begin(); }
  auto end() const noexcept { return word_.end(); }

  friend bool operator==(const MultisetPerm&, const MultisetPerm&) = default;
  friend auto operator<=>(const MultisetPerm&, const MultisetPerm&) = default;

 private:
  std::vector<Letter> word_;
};

MultisetPerm make_perm(std::vector<Letter> word, int max_order = kDefaultMaxOrder);

struct StatRecord {
  int des = 0;
  int asc = 0;
  int pl = 0;

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

StatRecord stats(const MultisetPerm& perm) noexcept;

using SegmentSet = std::set<Letter>;

/// Distinct values of the segment perm_i..perm_j, with 1-based inclusive
/// indices.
SegmentSet segment_set(const MultisetPerm& perm, std::size_t i, std::size_t j);

MultisetPerm reverse(const MultisetPerm& perm);
MultisetPerm complement(const MultisetPerm& perm);

/// Parses "3 2 2 6 6 4 4 3 5 1 1 5".
MultisetPerm parse_perm(std::string_view text, int max_order = kDefaultMaxOrder);
std::string format_perm(const MultisetPerm& perm);

/// Parses a whitespace-separated list of positive integers.
std::vector<Letter> parse_letters(std::string_view text);

}  // namespace qstir
