#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qstir/bigint.hpp"
#include "qstir/pattern.hpp"

namespace qstir {

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// C_n from the ballot-number triangle.
BigInt catalan(int n);

/// |Q̄_n| = n! C_n.
BigInt total_count(int n);

/// (2n-1)!!, the number of Stirling permutations of order n.
BigInt odd_double_factorial(int n);

/// Quasi-Stirling permutations of order n with exactly k plateaus:
/// (n!/k) C(n-1,k-1) C(n,k-1). Throws InvalidInput unless 1 <= k <= n.
BigInt plateau_count(int n, int k);

/// Conjectured number of quasi-Stirling permutations of order n with n-1
/// descents: (n+1)^(n-1).
BigInt descent_conjecture_value(int n);

/// numerator(x) / denominator(x), coefficients in ascending powers.
struct RationalGF {
  std::vector<BigInt> numerator;
  std::vector<BigInt> denominator;
};

/// Coefficients of x^0..x^n_max. Throws InvalidInput on a zero constant term
/// in the denominator, or when a coefficient would not be an integer.
std::vector<BigInt> gf_coefficients(const RationalGF& gf, int n_max);

/// a + b·√2 with integer parts.
struct QuadraticInt {
  BigInt a;
  BigInt b;

  friend QuadraticInt operator*(const QuadraticInt& x, const QuadraticInt& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QuadraticInt&, const QuadraticInt&) = default;
};

QuadraticInt power(QuadraticInt base, unsigned exponent);

/// ((1+√2)^(n+1) + (1-√2)^(n+1))/4 - (-1)^(n+1)/2, evaluated exactly.
BigInt pell_closed_form(int n);

// Formula shapes used by the theorem registry.

/// (c_0 + c_1 n + c_2 n^2 + ...) / divisor
struct Polynomial {
  std::vector<BigInt> coefficients;
  BigInt divisor = 1;
};

/// coefficient · base^(n - shift); undefined when n < shift.
struct Exponential {
  BigInt coefficient;
  int base = 1;
  int shift = 0;
};

/// q_n = Σ_i coefficients[i] · q_{n-1-i} once n >= initial.size().
struct LinearRecurrence {
  std::vector<BigInt> coefficients;
  std::vector<BigInt> initial;
};

using Formula = std::variant<Polynomial, Exponential, RationalGF, LinearRecurrence>;

/// Value at n, or nullopt where the formula does not yield an integer.
std::optional<BigInt> evaluate(const Formula& formula, int n);
std::string describe(const Formula& formula);

enum class Status { kTheorem, kConjecture };

/// One row of the classification table: a representative pattern set, the
/// first n at which the formula is claimed, and the formula itself. Rows that
/// share `group` are claimed to be equinumerous on their range.
struct TheoremSpec {
  std::string id;
  PatternSet patterns;
  int n_from = 1;
  Formula formula;
  std::string group;
  Status status = Status::kTheorem;
};

const std::vector<TheoremSpec>& theorem_registry();

/// Looks up by id (the pattern set text, e.g. "132,213"). Pattern order in
/// the query does not matter. Throws InvalidInput when absent.
const TheoremSpec& find_theorem(std::string_view id);

struct ClassCount {
  std::optional<BigInt> value;
  bool in_range = true;
};

/// Formula value at n, flagged when n precedes the stated range.
ClassCount class_count(const TheoremSpec& spec, int n);

}  // namespace qstir
