#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qstir/bigint.hpp"
#include "qstir/pattern.hpp"
#include "qstir/perm.hpp"
#include "qstir/tree.hpp"

namespace qstir {

/// Balanced-parentheses word of length 2n: '(' descends to a new vertex, ')'
/// returns to its parent. Encodes an unlabeled ordered tree shape.
using ShapeCode = std::string;

bool is_valid_shape(const ShapeCode& code) noexcept;

/// The first shape in lexicographic order ('(' < ')'): a path.
ShapeCode first_shape(int n);

/// Advances to the lexicographic successor; false after the last shape.
bool next_shape(ShapeCode& code);

/// All C_n shapes in lexicographic order.
std::vector<ShapeCode> gen_shapes(int n);

/// A shape with its vertices numbered 0..n-1 in preorder.
struct ShapeLayout {
  /// phi of the shape with preorder indices standing in for labels.
  std::vector<int> walk;
  /// children[0] is the root; vertex k sits at children index k + 1.
  std::vector<std::vector<int>> children;
};

ShapeLayout layout_shape(const ShapeCode& code);

/// Permutation of 1..n with the given lexicographic rank (rank < n!).
std::vector<Letter> unrank_permutation(int n, std::uint64_t rank);

std::uint64_t factorial_u64(int n);

/// Work split: item i belongs to shard i % count == index.
struct Shard {
  std::size_t index = 0;
  std::size_t count = 1;

  bool owns(std::size_t item) const noexcept { return item % count == index; }
};

/// Calls `visit(labels)` for label ranks in [rank_begin, rank_end), where
/// labels[k] is the label of the k-th preorder vertex.
template <class Visit>
void for_each_labeling(int n, std::uint64_t rank_begin, std::uint64_t rank_end, Visit&& visit) {
  if (rank_begin >= rank_end) return;
  std::vector<Letter> labels = unrank_permutation(n, rank_begin);
  for (std::uint64_t r = rank_begin; r < rank_end; ++r) {
    visit(static_cast<const std::vector<Letter>&>(labels));
    std::next_permutation(labels.begin(), labels.end());
  }
}

/// Every quasi-Stirling permutation of order n, each once, ordered by
/// (shape, label rank). Built as phi over labeled shapes.
template <class Visit>
void for_each_quasi_stirling(int n, Visit&& visit, Shard shard = {}) {
  ShapeCode code = first_shape(n);
  const std::uint64_t labelings = factorial_u64(n);
  std::vector<Letter> word(2 * static_cast<std::size_t>(n));
  std::size_t index = 0;
  do {
    if (shard.owns(index)) {
      const ShapeLayout layout = layout_shape(code);
      for_each_labeling(n, 0, labelings, [&](const std::vector<Letter>& labels) {
        for (std::size_t i = 0; i < word.size(); ++i) {
          word[i] = labels[static_cast<std::size_t>(layout.walk[i])];
        }
        visit(MultisetPerm(MultisetPerm::Unchecked{}, word));
      });
    }
    ++index;
  } while (next_shape(code));
}

/// Every ordered rooted labeled tree on [n], each once, in the same order
/// as for_each_quasi_stirling.
template <class Visit>
void for_each_tree(int n, Visit&& visit, Shard shard = {}) {
  ShapeCode code = first_shape(n);
  const std::uint64_t labelings = factorial_u64(n);
  std::size_t index = 0;
  do {
    if (shard.owns(index)) {
      const ShapeLayout layout = layout_shape(code);
      for_each_labeling(n, 0, labelings, [&](const std::vector<Letter>& labels) {
        std::vector<std::vector<Letter>> children(static_cast<std::size_t>(n) + 1);
        for (std::size_t v = 0; v < layout.children.size(); ++v) {
          const std::size_t owner = v == 0 ? 0 : static_cast<std::size_t>(labels[v - 1]);
          for (int k : layout.children[v]) children[owner].push_back(labels[static_cast<std::size_t>(k)]);
        }
        visit(OrderedTree(std::move(children)));
      });
    }
    ++index;
  } while (next_shape(code));
}

/// Every permutation of {1,1,...,n,n}, each once, in lexicographic order.
/// Shards split on the first letter.
template <class Visit>
void for_each_multiset_perm(int n, Visit&& visit, Shard shard = {}) {
  for (Letter lead = 1; lead <= n; ++lead) {
    if (!shard.owns(static_cast<std::size_t>(lead - 1))) continue;
    std::vector<Letter> word{lead};
    for (Letter v = 1; v <= n; ++v) {
      word.push_back(v);
      if (v != lead) word.push_back(v);
    }
    do {
      visit(MultisetPerm(MultisetPerm::Unchecked{}, word));
    } while (std::next_permutation(word.begin() + 1, word.end()));
  }
}

std::vector<MultisetPerm> gen_quasi_stirling(int n);
std::vector<OrderedTree> gen_trees(int n);
std::vector<MultisetPerm> gen_all(int n);

enum class Universe { kQuasi, kAll, kStirling };

Universe parse_universe(std::string_view text);
std::string_view universe_name(Universe u) noexcept;

/// Streams the universe of order n across `jobs` workers. `visit(shard_id,
/// perm)` runs concurrently for distinct shard ids; shard ids are in
/// [0, shard_count(u, n, jobs)).
std::size_t shard_count(Universe u, int n, unsigned jobs);
void for_each_in_universe(Universe u, int n, unsigned jobs,
                          const std::function<void(std::size_t, const MultisetPerm&)>& visit);

/// Number of universe members of order n avoiding every pattern in
/// `patterns`. An empty set is rejected like in avoids_all.
BigInt count_filtered(int n, const PatternSet& patterns, Universe universe, unsigned jobs = 1);

/// Size of the universe by streaming it.
BigInt count_universe(int n, Universe universe, unsigned jobs = 1);

/// Runs task(i) for i in [0, tasks) on up to `jobs` threads.
void parallel_for(std::size_t tasks, unsigned jobs, const std::function<void(std::size_t)>& task);

unsigned default_jobs() noexcept;

}  // namespace qstir
