#include "qstir/generate.hpp"

#include <atomic>
#include <thread>

namespace qstir {

bool is_valid_shape(const ShapeCode& code) noexcept {
  if (code.size() % 2 != 0) return false;
  int balance = 0;
  for (char ch : code) {
    if (ch == '(') {
      ++balance;
    } else if (ch == ')') {
      if (--balance < 0) return false;
    } else {
      return false;
    }
  }
  return balance == 0;
}

ShapeCode first_shape(int n) {
  if (n < 1) throw InvalidInput("shape order must be at least 1");
  return ShapeCode(static_cast<std::size_t>(n), '(') + ShapeCode(static_cast<std::size_t>(n), ')');
}

bool next_shape(ShapeCode& code) {
  const std::size_t len = code.size();
  const std::size_t n = len / 2;
  std::vector<int> opens(len + 1, 0);  // opens in code[0, i)
  for (std::size_t i = 0; i < len; ++i) opens[i + 1] = opens[i] + (code[i] == '(');
  // Rightmost '(' that can become ')' without the prefix going negative.
  for (std::size_t i = len; i-- > 0;) {
    const int closes = static_cast<int>(i) - opens[i];
    if (code[i] == '(' && opens[i] - closes >= 1) {
      code[i] = ')';
      const std::size_t rest_open = n - static_cast<std::size_t>(opens[i]);
      std::size_t j = i + 1;
      for (std::size_t k = 0; k < rest_open; ++k) code[j++] = '(';
      while (j < len) code[j++] = ')';
      return true;
    }
  }
  return false;
}

std::vector<ShapeCode> gen_shapes(int n) {
  std::vector<ShapeCode> out;
  ShapeCode code = first_shape(n);
  do {
    out.push_back(code);
  } while (next_shape(code));
  return out;
}

ShapeLayout layout_shape(const ShapeCode& code) {
  if (!is_valid_shape(code) || code.empty()) throw InvalidInput("malformed shape code '" + code + "'");
  ShapeLayout layout;
  layout.walk.reserve(code.size());
  layout.children.assign(code.size() / 2 + 1, {});
  std::vector<int> open;
  int next = 0;
  for (char ch : code) {
    if (ch == '(') {
      const std::size_t parent = open.empty() ? 0 : static_cast<std::size_t>(open.back()) + 1;
      layout.children[parent].push_back(next);
      layout.walk.push_back(next);
      open.push_back(next++);
    } else {
      layout.walk.push_back(open.back());
      open.pop_back();
    }
  }
  return layout;
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw InvalidInput("factorial_u64 supports 0..20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<Letter> unrank_permutation(int n, std::uint64_t rank) {
  if (rank >= factorial_u64(n)) throw InvalidInput("permutation rank out of range");
  std::vector<Letter> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<Letter> out;
  out.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    const std::uint64_t block = factorial_u64(i - 1);
    const auto pick = static_cast<std::ptrdiff_t>(rank / block);
    rank %= block;
    out.push_back(pool[static_cast<std::size_t>(pick)]);
    pool.erase(pool.begin() + pick);
  }
  return out;
}

std::vector<MultisetPerm> gen_quasi_stirling(int n) {
  std::vector<MultisetPerm> out;
  for_each_quasi_stirling(n, [&](const MultisetPerm& p) { out.push_back(p); });
  return out;
}

std::vector<OrderedTree> gen_trees(int n) {
  std::vector<OrderedTree> out;
  for_each_tree(n, [&](OrderedTree t) { out.push_back(std::move(t)); });
  return out;
}

std::vector<MultisetPerm> gen_all(int n) {
  std::vector<MultisetPerm> out;
  for_each_multiset_perm(n, [&](const MultisetPerm& p) { out.push_back(p); });
  return out;
}

Universe parse_universe(std::string_view text) {
  if (text == "quasi") return Universe::kQuasi;
  if (text == "all") return Universe::kAll;
  if (text == "stirling") return Universe::kStirling;
  throw InvalidInput("unknown universe '" + std::string(text) + "'");
}

std::string_view universe_name(Universe u) noexcept {
  switch (u) {
    case Universe::kQuasi:
      return "quasi";
    case Universe::kAll:
      return "all";
    case Universe::kStirling:
      return "stirling";
  }
  return "?";
}

unsigned default_jobs() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t tasks, unsigned jobs, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1u), tasks);
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < tasks; i = next++) task(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = tasks;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::size_t shard_count(Universe u, int n, unsigned jobs) {
  if (u == Universe::kQuasi) return std::max(jobs, 1u) * 4;
  return static_cast<std::size_t>(n);
}

void for_each_in_universe(Universe u, int n, unsigned jobs,
                          const std::function<void(std::size_t, const MultisetPerm&)>& visit) {
  if (n < 1) throw InvalidInput("order must be at least 1");
  const std::size_t shards = shard_count(u, n, jobs);
  parallel_for(shards, jobs, [&](std::size_t s) {
    const Shard shard{s, shards};
    switch (u) {
      case Universe::kQuasi:
        for_each_quasi_stirling(n, [&](const MultisetPerm& p) { visit(s, p); }, shard);
        break;
      case Universe::kAll:
        for_each_multiset_perm(n, [&](const MultisetPerm& p) { visit(s, p); }, shard);
        break;
      case Universe::kStirling:
        for_each_multiset_perm(
            n,
            [&](const MultisetPerm& p) {
              if (is_stirling(p)) visit(s, p);
            },
            shard);
        break;
    }
  });
}

namespace {

BigInt count_where(int n, Universe universe, unsigned jobs,
                   const std::function<bool(const MultisetPerm&)>& keep) {
  std::vector<std::uint64_t> per_shard(shard_count(universe, n, jobs), 0);
  for_each_in_universe(universe, n, jobs, [&](std::size_t s, const MultisetPerm& p) {
    if (keep(p)) ++per_shard[s];
  });
  BigInt total = 0;
  for (std::uint64_t c : per_shard) total += c;
  return total;
}

}  // namespace

BigInt count_filtered(int n, const PatternSet& patterns, Universe universe, unsigned jobs) {
  if (patterns.empty()) throw InvalidInput("avoidance query with an empty pattern set");
  return count_where(n, universe, jobs, [&](const MultisetPerm& p) { return avoids_all(p, patterns); });
}

BigInt count_universe(int n, Universe universe, unsigned jobs) {
  return count_where(n, universe, jobs, [](const MultisetPerm&) { return true; });
}

}  // namespace qstir
