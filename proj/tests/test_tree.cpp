#include <doctest.h>

#include <map>
#include <random>

#include "oracle.hpp"
#include "qstir/formulas.hpp"
#include "qstir/generate.hpp"
#include "qstir/pattern.hpp"
#include "qstir/tree.hpp"

using namespace qstir;
using oracle::digits;

namespace {

MultisetPerm P(const char* s) { return make_perm(digits(s)); }

OrderedTree random_tree(int n, std::mt19937& rng) {
  std::vector<std::vector<Letter>> children(static_cast<std::size_t>(n) + 1);
  std::vector<Letter> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Letter> placed{0};
  for (Letter v : order) {
    const Letter parent = placed[rng() % placed.size()];
    auto& kids = children[static_cast<std::size_t>(parent)];
    kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(rng() % (kids.size() + 1)), v);
    placed.push_back(v);
  }
  return OrderedTree(std::move(children));
}

}  // namespace

TEST_CASE("phi on the worked tree example") {
  const OrderedTree t = parse_tree("(3 (2) (6) (4)) (5 (1))");
  CHECK(t.order() == 6);
  CHECK(phi(t) == P("322664435115"));
  CHECK(is_quasi_stirling(phi(t)));
  CHECK(leaves(t) == 4);
  CHECK(stats(phi(t)).pl == 4);
}

TEST_CASE("phi on a single leaf and on the increasing example") {
  CHECK(phi(parse_tree("(1)")) == P("11"));
  const OrderedTree inc = parse_tree("(1 (2 (5) (7) (9)) (10)) (3 (4) (6 (8)))");
  CHECK(inc.is_increasing());
  const MultisetPerm p = phi(inc);
  CHECK(p == make_perm({1, 2, 5, 5, 7, 7, 9, 9, 2, 10, 10, 1, 3, 4, 4, 6, 8, 8, 6, 3}));
  CHECK(is_stirling(p));
}

TEST_CASE("block_decompose") {
  const MultisetPerm p = P("346699435517722881");
  const std::vector<Block> blocks = block_decompose(p);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == Block{1, 8, 3});
  CHECK(blocks[1] == Block{9, 10, 5});
  CHECK(blocks[2] == Block{11, 18, 1});
  CHECK(block_decompose(P("11")) == std::vector<Block>{Block{1, 2, 1}});
  CHECK_THROWS_AS(block_decompose(P("1212")), NotQuasiStirling);
  // Tiles at the top level but crosses inside.
  CHECK_THROWS_AS(block_decompose(P("123231")), NotQuasiStirling);
}

TEST_CASE("phi_inverse on the worked example") {
  const OrderedTree t = phi_inverse(P("346699435517722881"));
  CHECK(render_tree(t) == "(3 (4 (6) (9))) (5) (1 (7) (2) (8))");
  CHECK(std::vector<Letter>(t.root_children().begin(), t.root_children().end()) == std::vector<Letter>{3, 5, 1});
  CHECK(t.parent(9) == 4);
  CHECK(render_tree(phi_inverse(P("11"))) == "(1)");
  CHECK(render_tree(phi_inverse(P("322664435115"))) == "(3 (2) (6) (4)) (5 (1))");
  CHECK_THROWS_AS(phi_inverse(P("1212")), NotQuasiStirling);
}

TEST_CASE("phi is a bijection onto the quasi-Stirling words, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::set<MultisetPerm> images;
    std::size_t trees = 0;
    for_each_tree(n, [&](const OrderedTree& t) {
      const MultisetPerm p = phi(t);
      CHECK(is_quasi_stirling(p));
      CHECK(phi_inverse(p) == t);
      CHECK(leaves(t) == stats(p).pl);
      images.insert(p);
      ++trees;
    });
    CHECK(images.size() == trees);
    std::size_t quasi = 0;
    for_each_multiset_perm(n, [&](const MultisetPerm& p) {
      if (!is_quasi_stirling(p)) return;
      ++quasi;
      CHECK(phi(phi_inverse(p)) == p);
      CHECK(images.contains(p));
    });
    CHECK(quasi == trees);
  }
}

TEST_CASE("random round trips up to n = 12") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const OrderedTree t = random_tree(n, rng);
    CHECK(phi_inverse(phi(t)) == t);
    CHECK(parse_tree(render_tree(t)) == t);
    CHECK(leaves(t) == stats(phi(t)).pl);
  }
}

TEST_CASE("block parsing rejects exactly the words containing 1212 or 2121, n <= 4") {
  const PatternSet forbidden{parse_pattern("1212"), parse_pattern("2121")};
  for (int n = 1; n <= 4; ++n) {
    for_each_multiset_perm(n, [&](const MultisetPerm& p) {
      bool rejected = false;
      try {
        (void)phi_inverse(p);
      } catch (const NotQuasiStirling&) {
        rejected = true;
      }
      CHECK(rejected == !avoids_all(p, forbidden));
    });
  }
}

TEST_CASE("first occurrences follow preorder; block heads are the root's children") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const OrderedTree t = random_tree(1 + static_cast<int>(rng() % 10), rng);
    std::vector<Letter> preorder;
    std::vector<Letter> stack(t.root_children().rbegin(), t.root_children().rend());
    while (!stack.empty()) {
      const Letter v = stack.back();
      stack.pop_back();
      preorder.push_back(v);
      const auto kids = t.children(v);
      stack.insert(stack.end(), kids.rbegin(), kids.rend());
    }
    std::vector<Letter> firsts;
    std::set<Letter> seen;
    for (Letter v : phi(t)) {
      if (seen.insert(v).second) firsts.push_back(v);
    }
    CHECK(firsts == preorder);
    std::vector<Letter> heads;
    for (const Block& b : block_decompose(phi(t))) heads.push_back(b.head);
    CHECK(heads == std::vector<Letter>(t.root_children().begin(), t.root_children().end()));
  }
}

TEST_CASE("increasing trees map to Stirling permutations, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::size_t increasing = 0;
    for_each_tree(n, [&](const OrderedTree& t) {
      if (!t.is_increasing()) return;
      ++increasing;
      CHECK(is_stirling(phi(t)));
    });
    CHECK(increasing == static_cast<std::size_t>(odd_double_factorial(n)));
  }
}

TEST_CASE("leaves on paths and stars") {
  CHECK(leaves(parse_tree("(1 (2 (3 (4))))")) == 1);
  CHECK(leaves(parse_tree("(1) (2) (3) (4) (5)")) == 5);
}

TEST_CASE("tree text errors") {
  CHECK_THROWS_AS(parse_tree("(1 (1))"), InvalidInput);
  CHECK_THROWS_AS(parse_tree("(1"), InvalidInput);
  CHECK_THROWS_AS(parse_tree("(1))"), InvalidInput);
  CHECK_THROWS_AS(parse_tree("(2)"), InvalidInput);
  CHECK_THROWS_AS(parse_tree("(x)"), InvalidInput);
  CHECK_THROWS_AS(parse_tree("1"), InvalidInput);
  CHECK_THROWS_AS(parse_tree(""), InvalidInput);
  CHECK_THROWS_AS(OrderedTree({{}, {2}, {1}}), InvalidInput);
  CHECK(render_tree(parse_tree("  ( 3(2)(6) (4) )(5 (1) ) ")) == "(3 (2) (6) (4)) (5 (1))");
}

TEST_CASE("deep trees do not recurse") {
  const int n = 50000;
  std::vector<std::vector<Letter>> children(static_cast<std::size_t>(n) + 1);
  for (int v = 0; v < n; ++v) children[static_cast<std::size_t>(v)] = {v + 1};
  const OrderedTree path(std::move(children));
  const MultisetPerm p = phi(path);
  CHECK(p.order() == n);
  CHECK(phi_inverse(p) == path);
  CHECK(parse_tree(render_tree(path)) == path);
}
