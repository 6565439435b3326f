#include "qstir/tree.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace qstir {

OrderedTree::OrderedTree(std::vector<std::vector<Letter>> children) : children_(std::move(children)) {
  if (children_.size() < 2) throw InvalidInput("a tree needs at least one labeled vertex");
  const std::size_t n = children_.size() - 1;
  parent_.assign(n + 1, -1);
  for (std::size_t v = 0; v <= n; ++v) {
    for (Letter c : children_[v]) {
      if (c < 1 || static_cast<std::size_t>(c) > n) {
        throw InvalidInput("tree label " + std::to_string(c) + " is outside 1.." + std::to_string(n));
      }
      if (parent_[static_cast<std::size_t>(c)] != -1) {
        throw InvalidInput("tree label " + std::to_string(c) + " appears twice");
      }
      parent_[static_cast<std::size_t>(c)] = static_cast<Letter>(v);
    }
  }
  for (std::size_t v = 1; v <= n; ++v) {
    if (parent_[v] == -1) throw InvalidInput("tree label " + std::to_string(v) + " is missing");
  }
  // Each label has exactly one parent; it remains to rule out cycles
  // detached from the root.
  std::size_t reached = 0;
  std::vector<Letter> todo{0};
  while (!todo.empty()) {
    const Letter v = todo.back();
    todo.pop_back();
    for (Letter c : children_[static_cast<std::size_t>(v)]) {
      ++reached;
      todo.push_back(c);
    }
  }
  if (reached != n) throw InvalidInput("tree labels do not all hang below the root");
  parent_[0] = 0;
}

bool OrderedTree::is_increasing() const noexcept {
  for (std::size_t v = 1; v < children_.size(); ++v) {
    for (Letter c : children_[v]) {
      if (static_cast<std::size_t>(c) < v) return false;
    }
  }
  return true;
}

MultisetPerm phi(const OrderedTree& tree) {
  std::vector<Letter> word;
  word.reserve(2 * static_cast<std::size_t>(tree.order()));
  // (vertex, index of next child to visit)
  std::vector<std::pair<Letter, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto kids = tree.children(v);
    if (next < kids.size()) {
      const Letter c = kids[next++];
      word.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      const Letter done = v;
      stack.pop_back();
      if (done != 0) word.push_back(done);
    }
  }
  return MultisetPerm(MultisetPerm::Unchecked{}, std::move(word));
}

namespace {

struct Parse {
  std::vector<std::vector<Letter>> children;
  std::vector<Block> top;
};

// Block tiling at every depth. A frame covers word[lo, hi) and attaches the
// heads of its blocks to `parent`.
Parse parse_blocks(const MultisetPerm& perm) {
  const std::size_t len = perm.size();
  const std::size_t n = static_cast<std::size_t>(perm.order());
  std::vector<std::size_t> first_at(n + 1, len);
  std::vector<std::size_t> mate(len, len);
  for (std::size_t i = 0; i < len; ++i) {
    const auto v = static_cast<std::size_t>(perm[i]);
    if (first_at[v] == len) {
      first_at[v] = i;
    } else {
      mate[first_at[v]] = i;
    }
  }

  Parse out;
  out.children.assign(n + 1, {});
  struct Frame {
    Letter parent;
    std::size_t pos;
    std::size_t hi;
  };
  std::vector<Frame> stack{{0, 0, len}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.pos == f.hi) {
      stack.pop_back();
      continue;
    }
    const std::size_t start = f.pos;
    const std::size_t end = mate[start];
    // A second occurrence opening a block, or a block running past its
    // enclosing one, means two letter pairs cross.
    if (end == len || end >= f.hi) throw NotQuasiStirling();
    const Letter head = perm[start];
    out.children[static_cast<std::size_t>(f.parent)].push_back(head);
    if (f.parent == 0) out.top.push_back(Block{start + 1, end + 1, head});
    f.pos = end + 1;
    if (end > start + 1) stack.push_back(Frame{head, start + 1, end});
  }
  return out;
}

}  // namespace

std::vector<Block> block_decompose(const MultisetPerm& perm) {
  return parse_blocks(perm).top;
}

OrderedTree phi_inverse(const MultisetPerm& perm) {
  return OrderedTree(parse_blocks(perm).children);
}

int leaves(const OrderedTree& tree) noexcept {
  int count = 0;
  for (Letter v = 1; v <= tree.order(); ++v) {
    if (tree.children(v).empty()) ++count;
  }
  return count;
}

OrderedTree parse_tree(std::string_view text) {
  std::vector<std::vector<Letter>> children(1);
  std::vector<Letter> open;  // labels of unclosed subtrees
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    const char ch = text[i];
    if (ch == '(') {
      ++i;
      skip_ws();
      Letter label = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), label);
      if (ec != std::errc{} || label < 1) {
        throw InvalidInput("expected a positive label at offset " + std::to_string(i));
      }
      i = static_cast<std::size_t>(ptr - text.data());
      if (static_cast<std::size_t>(label) >= children.size()) children.resize(static_cast<std::size_t>(label) + 1);
      const Letter parent = open.empty() ? 0 : open.back();
      children[static_cast<std::size_t>(parent)].push_back(label);
      open.push_back(label);
    } else if (ch == ')') {
      if (open.empty()) throw InvalidInput("unbalanced ')' at offset " + std::to_string(i));
      open.pop_back();
      ++i;
    } else {
      throw InvalidInput(std::string("unexpected '") + ch + "' at offset " + std::to_string(i));
    }
  }
  if (!open.empty()) throw InvalidInput("unclosed '(' in tree text");
  return OrderedTree(std::move(children));
}

std::string render_tree(const OrderedTree& tree) {
  std::string out;
  std::vector<std::pair<Letter, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto kids = tree.children(v);
    if (next < kids.size()) {
      if (next > 0 || v != 0) out += ' ';
      const Letter c = kids[next++];
      out += '(';
      out += std::to_string(c);
      stack.emplace_back(c, 0);
    } else {
      if (v != 0) out += ')';
      stack.pop_back();
    }
  }
  return out;
}

}  // namespace qstir
