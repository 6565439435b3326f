#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qstir/perm.hpp"

namespace qstir {

class NotQuasiStirling : public InvalidInput {
 public:
  NotQuasiStirling() : InvalidInput("not quasi-Stirling") {}
};

/// Ordered (plane) rooted tree with an unlabeled root and n non-root vertices
/// labeled bijectively by 1..n. Vertex 0 stands for the root.
class OrderedTree {
 public:
  /// `children[v]` lists the children of v left to right; index 0 is the root.
  /// Throws InvalidInput unless every label 1..n hangs below the root exactly
  /// once.
  explicit OrderedTree(std::vector<std::vector<Letter>> children);

  int order() const noexcept { return static_cast<int>(children_.size()) - 1; }
  std::span<const Letter> children(Letter v) const { return children_.at(static_cast<std::size_t>(v)); }
  std::span<const Letter> root_children() const noexcept { return children_.front(); }
  /// 0 when v hangs directly off the root.
  Letter parent(Letter v) const { return parent_.at(static_cast<std::size_t>(v)); }

  /// Every child label exceeds its parent's label.
  bool is_increasing() const noexcept;

  friend bool operator==(const OrderedTree& a, const OrderedTree& b) noexcept {
    return a.children_ == b.children_;
  }

 private:
  std::vector<std::vector<Letter>> children_;
  std::vector<Letter> parent_;
};

/// Contiguous span of a word whose first and last letters coincide.
/// Positions are 1-based and inclusive.
struct Block {
  std::size_t first = 0;
  std::size_t last = 0;
  Letter head = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Depth-first walk, recording a child's label each time its parent edge is
/// traversed (down and up).
MultisetPerm phi(const OrderedTree& tree);

/// Top-level blocks of a quasi-Stirling word, left to right. Throws
/// NotQuasiStirling when the word does not tile at some nesting depth.
std::vector<Block> block_decompose(const MultisetPerm& perm);

/// Inverse of phi. Throws NotQuasiStirling.
OrderedTree phi_inverse(const MultisetPerm& perm);

int leaves(const OrderedTree& tree) noexcept;

/// forest := subtree* ; subtree := "(" label subtree* ")"
OrderedTree parse_tree(std::string_view text);
std::string render_tree(const OrderedTree& tree);

}  // namespace qstir
