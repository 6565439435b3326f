#include "qstir/formulas.hpp"

#include <algorithm>
#include <sstream>

namespace qstir {

BigInt factorial(int n) {
  if (n < 0) throw InvalidInput("factorial of a negative number");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (n < 0) throw InvalidInput("binomial with negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

BigInt catalan(int n) {
  if (n < 0) throw InvalidInput("catalan of a negative number");
  // ballot[j] holds the number of lattice paths to (i, j) with j <= i that
  // never cross the diagonal; C_n is the entry at (n, n).
  std::vector<BigInt> ballot(static_cast<std::size_t>(n) + 1, 0);
  ballot[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) ballot[static_cast<std::size_t>(j)] += ballot[static_cast<std::size_t>(j - 1)];
  }
  return ballot[static_cast<std::size_t>(n)];
}

BigInt total_count(int n) {
  if (n < 1) throw InvalidInput("total_count needs n >= 1");
  return factorial(n) * catalan(n);
}

BigInt odd_double_factorial(int n) {
  if (n < 1) throw InvalidInput("odd_double_factorial needs n >= 1");
  BigInt f = 1;
  for (int i = 3; i <= 2 * n - 1; i += 2) f *= i;
  return f;
}

BigInt plateau_count(int n, int k) {
  if (n < 1 || k < 1 || k > n) {
    throw InvalidInput("plateau count needs 1 <= k <= n, got n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
  }
  const BigInt scaled = factorial(n) * binomial(n - 1, k - 1) * binomial(n, k - 1);
  if (scaled % k != 0) throw InvalidInput("plateau count is not integral");
  return scaled / k;
}

BigInt descent_conjecture_value(int n) {
  if (n < 1) throw InvalidInput("descent conjecture needs n >= 1");
  BigInt v = 1;
  for (int i = 1; i < n; ++i) v *= n + 1;
  return v;
}

std::vector<BigInt> gf_coefficients(const RationalGF& gf, int n_max) {
  if (gf.denominator.empty() || gf.denominator.front() == 0) {
    throw InvalidInput("generating function denominator has a zero constant term");
  }
  const BigInt& lead = gf.denominator.front();
  std::vector<BigInt> c;
  c.reserve(static_cast<std::size_t>(std::max(n_max + 1, 0)));
  for (int n = 0; n <= n_max; ++n) {
    BigInt acc = static_cast<std::size_t>(n) < gf.numerator.size() ? gf.numerator[static_cast<std::size_t>(n)] : BigInt(0);
    for (std::size_t i = 1; i < gf.denominator.size() && i <= static_cast<std::size_t>(n); ++i) {
      acc -= gf.denominator[i] * c[static_cast<std::size_t>(n) - i];
    }
    if (acc % lead != 0) throw InvalidInput("generating function coefficient is not an integer");
    c.push_back(acc / lead);
  }
  return c;
}

QuadraticInt power(QuadraticInt base, unsigned exponent) {
  QuadraticInt result{1, 0};
  while (exponent) {
    if (exponent & 1u) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

BigInt pell_closed_form(int n) {
  if (n < 0) throw InvalidInput("pell_closed_form needs n >= 0");
  // (1+√2)^(n+1) = a + b√2 and (1-√2)^(n+1) = a - b√2, so four times the
  // value is 2a - 2(-1)^(n+1).
  const QuadraticInt up = power(QuadraticInt{1, 1}, static_cast<unsigned>(n + 1));
  const int sign = (n + 1) % 2 == 0 ? 1 : -1;
  const BigInt four_times = 2 * up.a - 2 * sign;
  if (four_times % 4 != 0) throw InvalidInput("closed form is not integral");
  return four_times / 4;
}

namespace {

struct Evaluator {
  int n;

  std::optional<BigInt> operator()(const Polynomial& p) const {
    BigInt acc = 0;
    BigInt x = 1;
    for (const BigInt& c : p.coefficients) {
      acc += c * x;
      x *= n;
    }
    if (acc % p.divisor != 0) return std::nullopt;
    return acc / p.divisor;
  }

  std::optional<BigInt> operator()(const Exponential& e) const {
    if (n < e.shift) return std::nullopt;
    BigInt v = e.coefficient;
    for (int i = e.shift; i < n; ++i) v *= e.base;
    return v;
  }

  std::optional<BigInt> operator()(const RationalGF& gf) const {
    if (n < 0) return std::nullopt;
    return gf_coefficients(gf, n).back();
  }

  std::optional<BigInt> operator()(const LinearRecurrence& r) const {
    if (n < 0) return std::nullopt;
    std::vector<BigInt> q(r.initial);
    while (q.size() <= static_cast<std::size_t>(n)) {
      BigInt next = 0;
      for (std::size_t i = 0; i < r.coefficients.size(); ++i) next += r.coefficients[i] * q[q.size() - 1 - i];
      q.push_back(next);
    }
    return q[static_cast<std::size_t>(n)];
  }
};

std::string poly_text(const std::vector<BigInt>& coeffs, char var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const BigInt& c = coeffs[i];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
    first = false;
  }
  if (first) out << '0';
  return out.str();
}

struct Describer {
  std::string operator()(const Polynomial& p) const {
    // Highest power first reads naturally for polynomials in n.
    std::vector<BigInt> rev(p.coefficients.rbegin(), p.coefficients.rend());
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < rev.size(); ++i) {
      const std::size_t power = rev.size() - 1 - i;
      const BigInt& c = rev[i];
      if (c == 0) continue;
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out << '-';
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (mag != 1 || power == 0) out << mag;
      if (power >= 1) out << 'n';
      if (power >= 2) out << '^' << power;
      first = false;
    }
    if (first) out << '0';
    const std::string body = out.str();
    if (p.divisor == 1) return body;
    std::ostringstream d;
    d << '(' << body << ")/" << p.divisor;
    return d.str();
  }
  std::string operator()(const Exponential& e) const {
    std::ostringstream out;
    out << e.coefficient << '*' << e.base << "^(n-" << e.shift << ')';
    return out.str();
  }
  std::string operator()(const RationalGF& gf) const {
    return "[x^n] (" + poly_text(gf.numerator, 'x') + ")/(" + poly_text(gf.denominator, 'x') + ")";
  }
  std::string operator()(const LinearRecurrence& r) const {
    std::ostringstream out;
    out << "q_n =";
    for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
      if (r.coefficients[i] == 0) continue;
      out << (i ? " + " : " ");
      if (r.coefficients[i] != 1) out << r.coefficients[i];
      out << "q_{n-" << i + 1 << '}';
    }
    out << "; q_0.. =";
    for (std::size_t i = 0; i < r.initial.size(); ++i) out << (i ? "," : " ") << r.initial[i];
    return out.str();
  }
};

TheoremSpec row(std::string_view patterns, int n_from, Formula formula, std::string group) {
  PatternSet set = parse_pattern_set(patterns);
  return TheoremSpec{format_pattern_set(set), std::move(set), n_from, std::move(formula), std::move(group),
                     Status::kTheorem};
}

Polynomial constant(int c) { return Polynomial{{BigInt(c)}, 1}; }

std::vector<TheoremSpec> build_registry() {
  const Exponential four_threes{4, 3, 2};
  const Polynomial two_n{{0, 2}, 1};
  std::vector<TheoremSpec> r;
  // two patterns
  r.push_back(row("123,321", 5, constant(0), "0"));
  r.push_back(row("132,312", 2, four_threes, "4*3^(n-2)"));
  r.push_back(row("132,231", 2, four_threes, "4*3^(n-2)"));
  r.push_back(row("312,321", 2, four_threes, "4*3^(n-2)"));
  r.push_back(row("132,213", 1, RationalGF{{1, -2, 1}, {1, -3, 0, 1}}, "gf"));
  r.push_back(row("132,321", 2, Polynomial{{2, -3, 2}, 1}, "2n^2-3n+2"));
  // three patterns
  r.push_back(row("123,132,321", 5, constant(0), "0"));
  r.push_back(row("132,213,321", 2, two_n, "2n"));
  r.push_back(row("123,213,312", 2, two_n, "2n"));
  r.push_back(row("132,213,312", 2, two_n, "2n"));
  r.push_back(row("123,132,213", 1, LinearRecurrence{{1, 3, 1}, {1, 1, 4}}, "pell"));
  r.push_back(row("123,132,312", 1, Polynomial{{-2, 3, 1}, 2}, "(n^2+3n-2)/2"));
  // four patterns
  r.push_back(row("123,132,213,321", 5, constant(0), "0"));
  r.push_back(row("123,132,231,321", 5, constant(0), "0"));
  r.push_back(row("123,132,312,321", 5, constant(0), "0"));
  r.push_back(row("123,132,213,231", 2, constant(4), "4"));
  r.push_back(row("123,132,231,312", 3, constant(3), "3"));
  r.push_back(row("132,213,231,312", 3, constant(2), "2"));
  // five patterns
  r.push_back(row("123,132,213,231,321", 5, constant(0), "0"));
  r.push_back(row("123,132,213,231,312", 3, constant(1), "1"));
  return r;
}

}  // namespace

std::optional<BigInt> evaluate(const Formula& formula, int n) {
  return std::visit(Evaluator{n}, formula);
}

std::string describe(const Formula& formula) {
  return std::visit(Describer{}, formula);
}

const std::vector<TheoremSpec>& theorem_registry() {
  static const std::vector<TheoremSpec> registry = build_registry();
  return registry;
}

const TheoremSpec& find_theorem(std::string_view id) {
  const std::string key = format_pattern_set(parse_pattern_set(id));
  for (const TheoremSpec& spec : theorem_registry()) {
    if (spec.id == key) return spec;
  }
  throw InvalidInput("no theorem for pattern set '" + std::string(id) + "'");
}

ClassCount class_count(const TheoremSpec& spec, int n) {
  return ClassCount{evaluate(spec.formula, n), n >= spec.n_from};
}

}  // namespace qstir
