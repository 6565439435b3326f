#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qstir/bigint.hpp"
#include "qstir/formulas.hpp"
#include "qstir/generate.hpp"
#include "qstir/pattern.hpp"

namespace qstir {

/// Bit i set <=> the permutation contains classical_s3()[i].
using S3Mask = unsigned;

S3Mask s3_mask(const PatternSet& patterns);

/// Brute-force avoidance counts over quasi-Stirling permutations, with the
/// containment profile against the six classical patterns of length three
/// cached per order so that many pattern sets share one pass.
class BruteForceCounter {
 public:
  explicit BruteForceCounter(unsigned jobs = 1) : jobs_(jobs) {}

  BigInt count(int n, const PatternSet& patterns);

  /// histogram[m] = number of members of Q̄_n whose S_3 containment mask is m.
  const std::array<std::uint64_t, 64>& s3_histogram(int n);

 private:
  unsigned jobs_;
  std::map<int, std::array<std::uint64_t, 64>> histograms_;
};

/// hist[k] = #{π ∈ Q̄_n : plateaus(π) = k}, k = 0..2n-1.
std::vector<BigInt> plateau_histogram(int n, unsigned jobs = 1);
/// hist[k] = #{π ∈ Q̄_n : descents(π) = k}.
std::vector<BigInt> descent_histogram(int n, unsigned jobs = 1);

enum class Outcome { kPass, kFail, kInfo, kOutOfRange };

std::string_view outcome_name(Outcome o) noexcept;

struct VerifyRow {
  std::string theorem;
  int n = 0;
  std::string lambda;
  std::optional<BigInt> formula;
  BigInt brute_force;
  Outcome outcome = Outcome::kPass;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  /// False iff some non-conjecture row failed.
  bool ok() const noexcept;
  void append(const VerifyReport& other);
};

/// Formula against brute force for n = 1..n_max. Rows before the stated
/// range are reported as out of range and never fail.
VerifyReport verify(const TheoremSpec& spec, int n_max, BruteForceCounter& counter);
VerifyReport verify(const TheoremSpec& spec, int n_max, unsigned jobs = 1);

/// Streamed |Q̄_n| against n! C_n.
VerifyReport verify_total(int n_max, unsigned jobs = 1);
/// Plateau histogram against the closed form, one row per (n, k).
VerifyReport verify_plateaus(int n_max, unsigned jobs = 1);
/// Descent census against (n+1)^(n-1); rows are informational only.
VerifyReport verify_descent_conjecture(int n_max, unsigned jobs = 1);

/// Every registry row, then totals, plateaus and the descent conjecture.
VerifyReport verify_all(int n_max, unsigned jobs = 1);

struct WilfEntry {
  PatternSet patterns;
  std::size_t orbit = 0;
  std::size_t empirical_class = 0;
  std::vector<BigInt> counts;  // q̄_1 .. q̄_{n_max}
};

struct WilfReport {
  int size = 0;
  int n_max = 0;
  std::vector<WilfEntry> entries;  // lexicographic by pattern set
  std::size_t orbit_count = 0;
  std::size_t class_count = 0;
};

/// All subsets of S_3 with `size` elements, grouped by symmetry orbit and by
/// count vector over n = 1..n_max.
WilfReport wilf_classify(int size, int n_max, BruteForceCounter& counter);
WilfReport wilf_classify(int size, int n_max, unsigned jobs = 1);

/// The registry row whose symmetry orbit contains `patterns`, if any.
const TheoremSpec* table_row_for(const PatternSet& patterns);

/// Differences between an empirical classification and the table: subsets
/// not covered by any row, orbits with differing counts, rows of one group
/// that disagree on their range, and distinct groups that never differ.
std::vector<std::string> compare_with_table(const WilfReport& report);

}  // namespace qstir
