#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "qstir/formulas.hpp"
#include "qstir/generate.hpp"

using namespace qstir;

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  for (int n = 1; n <= 10; ++n) CHECK(catalan(n) == oracle::dyck_count(n));
  for (int n = 0; n <= 40; ++n) CHECK(catalan(n) * (n + 1) == binomial(2 * n, n));
}

TEST_CASE("total_count and small combinatorics") {
  CHECK(total_count(1) == 1);
  CHECK(total_count(2) == 4);
  CHECK(total_count(6) == 95040);
  CHECK(factorial(20) == BigInt(oracle::factorial(20)));
  CHECK(factorial(25) == BigInt("15511210043330985984000000"));
  CHECK(binomial(5, 7) == 0);
  CHECK(odd_double_factorial(4) == 105);
  CHECK_THROWS_AS(total_count(0), InvalidInput);
}

TEST_CASE("plateau_count") {
  for (int n = 1; n <= 8; ++n) CHECK(plateau_count(n, n) == factorial(n));
  CHECK(plateau_count(3, 2) == 18);
  CHECK_THROWS_AS(plateau_count(3, 0), InvalidInput);
  CHECK_THROWS_AS(plateau_count(3, 4), InvalidInput);
  for (int n = 1; n <= 20; ++n) {
    BigInt sum = 0;
    for (int k = 1; k <= n; ++k) sum += plateau_count(n, k);
    CHECK(sum == total_count(n));
  }
  // Against a direct plateau census.
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> hist(2 * static_cast<std::size_t>(n), 0);
    for_each_quasi_stirling(n, [&](const MultisetPerm& p) {
      int pl = 0;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) pl += p[i] == p[i + 1];
      ++hist[static_cast<std::size_t>(pl)];
    });
    CHECK(hist[0] == 0);
    for (int k = 1; k <= n; ++k) CHECK(plateau_count(n, k) == hist[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("gf_coefficients") {
  for (const BigInt& c : gf_coefficients(RationalGF{{1}, {1, -1}}, 20)) CHECK(c == 1);

  const auto fib = gf_coefficients(RationalGF{{0, 1}, {1, -1, -1}}, 30);
  BigInt a = 0, b = 1;
  for (const BigInt& c : fib) {
    CHECK(c == a);
    BigInt t = a + b;
    a = b;
    b = t;
  }

  // q_n = q_{n-1} + q_{n-2} + Σ_{k<n} q_k with q_0 = q_1 = 1.
  const auto q = gf_coefficients(RationalGF{{1, -2, 1}, {1, -3, 0, 1}}, 30);
  std::vector<BigInt> r{1, 1};
  for (int n = 2; n <= 30; ++n) {
    BigInt s = 0;
    for (int k = 0; k < n; ++k) s += r[static_cast<std::size_t>(k)];
    r.push_back(r[static_cast<std::size_t>(n - 1)] + r[static_cast<std::size_t>(n - 2)] + s);
  }
  CHECK(q == r);
  CHECK(std::vector<BigInt>(q.begin(), q.begin() + 6) == std::vector<BigInt>{1, 1, 4, 11, 32, 92});

  CHECK_THROWS_AS(gf_coefficients(RationalGF{{1}, {0, 1}}, 3), InvalidInput);
  CHECK_THROWS_AS(gf_coefficients(RationalGF{{1}, {2, 1}}, 3), InvalidInput);
}

TEST_CASE("pell closed form matches its recurrence") {
  std::vector<BigInt> q{1, 1, 4};
  for (int n = 3; n <= 30; ++n) {
    const std::size_t i = static_cast<std::size_t>(n);
    q.push_back(q[i - 1] + 3 * q[i - 2] + q[i - 3]);
  }
  for (int n = 0; n <= 30; ++n) CHECK(pell_closed_form(n) == q[static_cast<std::size_t>(n)]);
  CHECK(q[3] == 8);
  CHECK(power(QuadraticInt{1, 1}, 2) == QuadraticInt{3, 2});
}

TEST_CASE("descent_conjecture_value") {
  CHECK(descent_conjecture_value(1) == 1);
  CHECK(descent_conjecture_value(2) == 3);
  CHECK(descent_conjecture_value(4) == 125);
}

TEST_CASE("theorem registry") {
  const auto& reg = theorem_registry();
  CHECK(reg.size() == 20);
  std::set<std::string> ids;
  std::set<PatternSet> orbit_reps;
  for (const TheoremSpec& s : reg) {
    ids.insert(s.id);
    orbit_reps.insert(*symmetry_closure(s.patterns).begin());
    CHECK(s.patterns.size() >= 2);
    CHECK(s.patterns.size() <= 5);
  }
  CHECK(ids.size() == reg.size());
  CHECK(orbit_reps.size() == reg.size());

  CHECK(class_count(find_theorem("132,312"), 2).value == BigInt(4));
  const TheoremSpec& gf = find_theorem("213,132");
  for (int n = 0; n <= 4; ++n) {
    const BigInt want[] = {1, 1, 4, 11, 32};
    CHECK(class_count(gf, n).value == want[n]);
  }
  CHECK(class_count(find_theorem("123,132,213"), 3).value == BigInt(8));
  CHECK(class_count(find_theorem("132,321"), 3).value == BigInt(11));
  CHECK(class_count(find_theorem("123,132,312"), 4).value == BigInt(13));
  CHECK(class_count(find_theorem("132,312"), 5).value == BigInt(108));

  const ClassCount early = class_count(find_theorem("321,123"), 4);
  CHECK_FALSE(early.in_range);
  CHECK(early.value == BigInt(0));
  CHECK_FALSE(class_count(find_theorem("132,312"), 1).value.has_value());
  CHECK_THROWS_AS(find_theorem("123"), InvalidInput);
}

TEST_CASE("formula descriptions") {
  CHECK(describe(find_theorem("132,321").formula) == "2n^2 - 3n + 2");
  CHECK(describe(find_theorem("123,132,312").formula) == "(n^2 + 3n - 2)/2");
  CHECK(describe(find_theorem("132,312").formula) == "4*3^(n-2)");
  CHECK(describe(find_theorem("132,213").formula) == "[x^n] (1 - 2x + x^2)/(1 - 3x + x^3)");
  CHECK(describe(find_theorem("123,132,213").formula) == "q_n = q_{n-1} + 3q_{n-2} + q_{n-3}; q_0.. = 1,1,4");
}
