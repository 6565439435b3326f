#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qstir/generate.hpp"
#include "qstir/perm.hpp"

using namespace qstir;
using oracle::digits;

namespace {

MultisetPerm P(const char* s) { return make_perm(digits(s)); }

}  // namespace

TEST_CASE("make_perm accepts valid words and infers the order") {
  CHECK(P("1122").order() == 2);
  const MultisetPerm p = P("77611632554423");
  CHECK(p.order() == 7);
  CHECK(p.size() == 14);
}

TEST_CASE("make_perm rejects malformed words") {
  CHECK_THROWS_AS(make_perm({1, 1, 2, 3}), InvalidInput);  // multiplicity
  CHECK_THROWS_AS(make_perm({1, 1, 2}), InvalidInput);     // odd length
  CHECK_THROWS_AS(make_perm({1, 1, 3, 3}), InvalidInput);  // 3 outside 1..2
  CHECK_THROWS_AS(make_perm({0, 0}), InvalidInput);
  CHECK_THROWS_AS(make_perm({}), InvalidInput);
  CHECK_THROWS_AS(make_perm({1, 1, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(make_perm({1, 1, 2, 2}, 1), InvalidInput);  // order cap
}

TEST_CASE("stats") {
  CHECK(stats(P("77611632554423")) == StatRecord{6, 3, 4});
  CHECK(stats(P("2211")) == StatRecord{1, 0, 2});
  for (int n = 1; n <= 9; ++n) {
    std::vector<Letter> w;
    for (int v = 1; v <= n; ++v) w.insert(w.end(), {v, v});
    CHECK(stats(make_perm(w)) == StatRecord{0, n - 1, n});
  }
}

TEST_CASE("segment_set") {
  const MultisetPerm p = make_perm({3, 2, 2, 6, 6, 4, 4, 3, 5, 1, 1, 5});
  CHECK(segment_set(p, 1, 4) == SegmentSet{2, 3, 6});
  CHECK(segment_set(p, 5, 5) == SegmentSet{6});
  CHECK(segment_set(p, 1, 12) == SegmentSet{1, 2, 3, 4, 5, 6});
  CHECK_THROWS_AS(segment_set(p, 0, 3), InvalidInput);
  CHECK_THROWS_AS(segment_set(p, 4, 3), InvalidInput);
  CHECK_THROWS_AS(segment_set(p, 1, 13), InvalidInput);
}

TEST_CASE("reverse and complement on the worked example") {
  const MultisetPerm p = P("25513443661277");
  CHECK(reverse(p) == P("77216634431552"));
  CHECK(complement(p) == P("63375445227611"));
  CHECK(complement(P("1122")) == P("2211"));
  CHECK(reverse(P("1221")) == P("1221"));
}

TEST_CASE("symmetries and statistics over all of S_{n,n}, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for_each_multiset_perm(n, [&](const MultisetPerm& p) {
      const StatRecord s = stats(p);
      CHECK(s.des + s.asc + s.pl == 2 * n - 1);
      CHECK(reverse(reverse(p)) == p);
      CHECK(complement(complement(p)) == p);
      CHECK(reverse(complement(p)) == complement(reverse(p)));
      const StatRecord r = stats(reverse(p));
      const StatRecord c = stats(complement(p));
      CHECK(r == StatRecord{s.asc, s.des, s.pl});
      CHECK(c == StatRecord{s.asc, s.des, s.pl});
      CHECK(segment_set(p, 1, p.size()).size() == static_cast<std::size_t>(n));
    });
  }
}

TEST_CASE("statistics identity on random words up to n = 10") {
  std::mt19937 rng(20191);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<Letter> w;
    for (int v = 1; v <= n; ++v) w.insert(w.end(), {v, v});
    std::shuffle(w.begin(), w.end(), rng);
    const StatRecord s = stats(make_perm(w));
    CHECK(s.des + s.asc + s.pl == 2 * n - 1);
  }
}

TEST_CASE("text form") {
  const MultisetPerm p = parse_perm("  3 2 2 6 6 4 4 3 5 1 1 5\n");
  CHECK(format_perm(p) == "3 2 2 6 6 4 4 3 5 1 1 5");
  CHECK(parse_perm(format_perm(p)) == p);
  std::vector<Letter> big;
  for (int v = 1; v <= 12; ++v) big.insert(big.end(), {v, v});
  CHECK(parse_perm(format_perm(make_perm(big))).order() == 12);
  CHECK_THROWS_AS(parse_perm("1 x 1"), InvalidInput);
  CHECK_THROWS_AS(parse_perm("1 -1"), InvalidInput);
  CHECK_THROWS_AS(parse_perm(""), InvalidInput);
}
