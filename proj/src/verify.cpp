#include "qstir/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>

namespace qstir {

S3Mask s3_mask(const PatternSet& patterns) {
  const auto& s3 = classical_s3();
  S3Mask mask = 0;
  for (const Pattern& p : patterns) {
    const auto it = std::find(s3.begin(), s3.end(), p);
    if (it == s3.end()) return ~S3Mask{0};
    mask |= 1u << static_cast<unsigned>(it - s3.begin());
  }
  return mask;
}

const std::array<std::uint64_t, 64>& BruteForceCounter::s3_histogram(int n) {
  if (auto it = histograms_.find(n); it != histograms_.end()) return it->second;
  const auto& s3 = classical_s3();
  std::vector<std::array<std::uint64_t, 64>> shards(shard_count(Universe::kQuasi, n, jobs_));
  for (auto& h : shards) h.fill(0);
  for_each_in_universe(Universe::kQuasi, n, jobs_, [&](std::size_t s, const MultisetPerm& p) {
    S3Mask mask = 0;
    for (std::size_t i = 0; i < s3.size(); ++i) {
      if (contains_any(p.word(), s3[i])) mask |= 1u << i;
    }
    ++shards[s][mask];
  });
  std::array<std::uint64_t, 64> total{};
  for (const auto& h : shards) {
    for (std::size_t m = 0; m < 64; ++m) total[m] += h[m];
  }
  return histograms_.emplace(n, total).first->second;
}

BigInt BruteForceCounter::count(int n, const PatternSet& patterns) {
  if (patterns.empty()) throw InvalidInput("avoidance query with an empty pattern set");
  const S3Mask mask = s3_mask(patterns);
  if (mask == ~S3Mask{0}) return count_filtered(n, patterns, Universe::kQuasi, jobs_);
  const auto& hist = s3_histogram(n);
  std::uint64_t total = 0;
  for (S3Mask m = 0; m < 64; ++m) {
    if ((m & mask) == 0) total += hist[m];
  }
  return total;
}

namespace {

template <class Stat>
std::vector<BigInt> stat_histogram(int n, unsigned jobs, Stat stat) {
  const std::size_t bins = 2 * static_cast<std::size_t>(n);
  std::vector<std::vector<std::uint64_t>> shards(shard_count(Universe::kQuasi, n, jobs),
                                                 std::vector<std::uint64_t>(bins, 0));
  for_each_in_universe(Universe::kQuasi, n, jobs, [&](std::size_t s, const MultisetPerm& p) {
    ++shards[s][static_cast<std::size_t>(stat(stats(p)))];
  });
  std::vector<BigInt> out(bins, 0);
  for (const auto& h : shards) {
    for (std::size_t k = 0; k < bins; ++k) out[k] += h[k];
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome judge(bool in_range, Status status, const std::optional<BigInt>& formula, const BigInt& brute) {
  if (!in_range) return Outcome::kOutOfRange;
  if (status == Status::kConjecture) return Outcome::kInfo;
  return formula && *formula == brute ? Outcome::kPass : Outcome::kFail;
}

}  // namespace

std::vector<BigInt> plateau_histogram(int n, unsigned jobs) {
  return stat_histogram(n, jobs, [](const StatRecord& r) { return r.pl; });
}

std::vector<BigInt> descent_histogram(int n, unsigned jobs) {
  return stat_histogram(n, jobs, [](const StatRecord& r) { return r.des; });
}

std::string_view outcome_name(Outcome o) noexcept {
  switch (o) {
    case Outcome::kPass:
      return "PASS";
    case Outcome::kFail:
      return "FAIL";
    case Outcome::kInfo:
      return "INFO";
    case Outcome::kOutOfRange:
      return "OUT-OF-RANGE";
  }
  return "?";
}

bool VerifyReport::ok() const noexcept {
  return std::none_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.outcome == Outcome::kFail; });
}

void VerifyReport::append(const VerifyReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

VerifyReport verify(const TheoremSpec& spec, int n_max, BruteForceCounter& counter) {
  VerifyReport report;
  for (int n = 1; n <= n_max; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyRow row;
    row.theorem = spec.id;
    row.n = n;
    row.lambda = spec.id;
    row.brute_force = counter.count(n, spec.patterns);
    const ClassCount cc = class_count(spec, n);
    row.formula = cc.value;
    row.outcome = judge(cc.in_range, spec.status, row.formula, row.brute_force);
    row.seconds = seconds_since(t0);
    report.rows.push_back(std::move(row));
  }
  return report;
}

VerifyReport verify(const TheoremSpec& spec, int n_max, unsigned jobs) {
  BruteForceCounter counter(jobs);
  return verify(spec, n_max, counter);
}

VerifyReport verify_total(int n_max, unsigned jobs) {
  VerifyReport report;
  for (int n = 1; n <= n_max; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyRow row{"total", n, "total", total_count(n), count_universe(n, Universe::kQuasi, jobs)};
    row.outcome = judge(true, Status::kTheorem, row.formula, row.brute_force);
    row.seconds = seconds_since(t0);
    report.rows.push_back(std::move(row));
  }
  return report;
}

VerifyReport verify_plateaus(int n_max, unsigned jobs) {
  VerifyReport report;
  for (int n = 1; n <= n_max; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<BigInt> hist = plateau_histogram(n, jobs);
    const double elapsed = seconds_since(t0);
    for (int k = 0; k < static_cast<int>(hist.size()); ++k) {
      const bool covered = k >= 1 && k <= n;
      if (!covered && hist[static_cast<std::size_t>(k)] == 0) continue;
      VerifyRow row{"plateaus", n, "pl=" + std::to_string(k), covered ? plateau_count(n, k) : BigInt(0),
                    hist[static_cast<std::size_t>(k)]};
      row.outcome = judge(true, Status::kTheorem, row.formula, row.brute_force);
      row.seconds = elapsed;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

VerifyReport verify_descent_conjecture(int n_max, unsigned jobs) {
  VerifyReport report;
  for (int n = 1; n <= n_max; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<BigInt> hist = descent_histogram(n, jobs);
    VerifyRow row{"descent-conjecture", n, "des=n-1", descent_conjecture_value(n),
                  hist[static_cast<std::size_t>(n - 1)]};
    row.outcome = Outcome::kInfo;
    row.seconds = seconds_since(t0);
    report.rows.push_back(std::move(row));
  }
  return report;
}

VerifyReport verify_all(int n_max, unsigned jobs) {
  VerifyReport report;
  BruteForceCounter counter(jobs);
  for (const TheoremSpec& spec : theorem_registry()) report.append(verify(spec, n_max, counter));
  report.append(verify_total(n_max, jobs));
  report.append(verify_plateaus(n_max, jobs));
  report.append(verify_descent_conjecture(n_max, jobs));
  return report;
}

WilfReport wilf_classify(int size, int n_max, BruteForceCounter& counter) {
  if (size < 1 || size > 5) throw InvalidInput("pattern-set size must be in 1..5");
  if (n_max < 1) throw InvalidInput("n_max must be at least 1");
  const auto& s3 = classical_s3();
  WilfReport report;
  report.size = size;
  report.n_max = n_max;
  std::map<PatternSet, std::size_t> orbit_ids;
  std::map<std::vector<BigInt>, std::size_t> class_ids;
  for (unsigned subset = 0; subset < 64; ++subset) {
    if (std::popcount(subset) != size) continue;
    WilfEntry e;
    for (std::size_t i = 0; i < s3.size(); ++i) {
      if (subset & (1u << i)) e.patterns.insert(s3[i]);
    }
    report.entries.push_back(std::move(e));
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const WilfEntry& a, const WilfEntry& b) { return a.patterns < b.patterns; });
  for (WilfEntry& e : report.entries) {
    const PatternSet canonical = *symmetry_closure(e.patterns).begin();
    e.orbit = orbit_ids.emplace(canonical, orbit_ids.size()).first->second;
    for (int n = 1; n <= n_max; ++n) e.counts.push_back(counter.count(n, e.patterns));
    e.empirical_class = class_ids.emplace(e.counts, class_ids.size()).first->second;
  }
  report.orbit_count = orbit_ids.size();
  report.class_count = class_ids.size();
  return report;
}

WilfReport wilf_classify(int size, int n_max, unsigned jobs) {
  BruteForceCounter counter(jobs);
  return wilf_classify(size, n_max, counter);
}

const TheoremSpec* table_row_for(const PatternSet& patterns) {
  for (const TheoremSpec& spec : theorem_registry()) {
    if (spec.patterns.size() != patterns.size()) continue;
    if (symmetry_closure(spec.patterns).contains(patterns)) return &spec;
  }
  return nullptr;
}

std::vector<std::string> compare_with_table(const WilfReport& report) {
  std::vector<std::string> issues;
  std::vector<const TheoremSpec*> rows;
  for (const WilfEntry& e : report.entries) {
    rows.push_back(table_row_for(e.patterns));
    if (!rows.back()) issues.push_back("no table row covers {" + format_pattern_set(e.patterns) + "}");
  }
  auto agree_from = [&](const WilfEntry& a, const WilfEntry& b, int n_from) {
    for (int n = std::max(n_from, 1); n <= report.n_max; ++n) {
      if (a.counts[static_cast<std::size_t>(n - 1)] != b.counts[static_cast<std::size_t>(n - 1)]) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < report.entries.size(); ++j) {
      const WilfEntry& a = report.entries[i];
      const WilfEntry& b = report.entries[j];
      const std::string pair = "{" + format_pattern_set(a.patterns) + "} and {" + format_pattern_set(b.patterns) + "}";
      if (a.orbit == b.orbit && a.counts != b.counts) issues.push_back("symmetric sets " + pair + " differ");
      if (!rows[i] || !rows[j]) continue;
      const int n_from = std::max(rows[i]->n_from, rows[j]->n_from);
      const bool same_group = rows[i]->group == rows[j]->group;
      if (same_group && !agree_from(a, b, n_from)) {
        issues.push_back("same-row sets " + pair + " disagree from n=" + std::to_string(n_from));
      }
      if (!same_group && n_from <= report.n_max && agree_from(a, b, n_from)) {
        issues.push_back("sets " + pair + " from different rows agree up to n=" + std::to_string(report.n_max));
      }
    }
  }
  return issues;
}

}  // namespace qstir
