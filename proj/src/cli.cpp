#include "qstir/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "qstir/formulas.hpp"
#include "qstir/generate.hpp"
#include "qstir/pattern.hpp"
#include "qstir/perm.hpp"
#include "qstir/tree.hpp"
#include "qstir/verify.hpp"

namespace qstir::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string big(const BigInt& v) { return v.str(); }

void check_cap(int n, bool force, const std::string& what) {
  if (n < 1) throw UsageError(what + " must be at least 1");
  if (n > kDefaultOrderCap && !force) {
    throw UsageError(what + " " + std::to_string(n) + " exceeds the exhaustive cap of " +
                     std::to_string(kDefaultOrderCap) + "; pass --force to run anyway");
  }
}

PatternSet parse_lambda(const std::string& text) {
  try {
    PatternSet set = parse_pattern_set(text);
    if (set.empty()) throw UsageError("empty pattern set");
    return set;
  } catch (const InvalidInput& e) {
    throw UsageError(std::string("bad pattern set: ") + e.what());
  }
}

// Lines from --input when given, otherwise from the input stream.
class LineSource {
 public:
  LineSource(const std::string& path, std::istream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ifstream>(path);
      if (!*file_) throw UsageError("cannot open " + path);
    }
    in_ = file_ ? file_.get() : &fallback;
  }
  bool next(std::string& line) { return static_cast<bool>(std::getline(*in_, line)); }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* in_;
};

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

struct Options {
  unsigned jobs = default_jobs();
  bool force = false;

  // count / list
  int n = 0;
  std::string avoid;
  std::string universe = "quasi";
  bool trees = false;

  // convert / stats
  bool to_tree = false;
  bool to_perm = false;
  std::string input;

  // verify / sequence / wilf
  std::string theorem = "all";
  int n_max = 6;
  std::string format = "table";
  bool timing = false;
  std::string lambda;
  bool total = false;
  int plateaus = 0;
  bool brute = false;
  int size = 0;
  bool check = false;
};

int cmd_count(const Options& o, std::ostream& out) {
  check_cap(o.n, o.force, "order");
  const Universe u = parse_universe(o.universe);
  if (o.avoid.empty()) {
    out << big(count_universe(o.n, u, o.jobs)) << '\n';
  } else {
    out << big(count_filtered(o.n, parse_lambda(o.avoid), u, o.jobs)) << '\n';
  }
  return kOk;
}

int cmd_list(const Options& o, std::ostream& out) {
  check_cap(o.n, o.force, "order");
  const Universe u = parse_universe(o.universe);
  if (o.trees && u != Universe::kQuasi) throw UsageError("--trees needs the quasi universe");
  std::optional<PatternSet> avoid;
  if (!o.avoid.empty()) avoid = parse_lambda(o.avoid);
  // One worker keeps the listing in stream order.
  for_each_in_universe(u, o.n, 1, [&](std::size_t, const MultisetPerm& p) {
    if (avoid && !avoids_all(p, *avoid)) return;
    out << (o.trees ? render_tree(phi_inverse(p)) : format_perm(p)) << '\n';
  });
  return kOk;
}

int cmd_convert(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.to_tree == o.to_perm) throw UsageError("convert needs exactly one of --to-tree or --to-perm");
  LineSource source(o.input, in);
  std::string line;
  std::size_t line_no = 0;
  int status = kOk;
  while (source.next(line)) {
    ++line_no;
    if (blank(line)) continue;
    try {
      if (o.to_tree) {
        out << render_tree(phi_inverse(parse_perm(line))) << '\n';
      } else {
        out << format_perm(phi(parse_tree(line))) << '\n';
      }
    } catch (const InvalidInput& e) {
      err << "line " << line_no << ": " << e.what() << '\n';
      status = kDataError;
    }
  }
  return status;
}

int cmd_stats(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  LineSource source(o.input, in);
  std::string line;
  std::size_t line_no = 0;
  int status = kOk;
  while (source.next(line)) {
    ++line_no;
    if (blank(line)) continue;
    try {
      std::optional<OrderedTree> tree;
      if (o.trees) tree = parse_tree(line);
      const MultisetPerm p = tree ? phi(*tree) : parse_perm(line);
      const StatRecord s = stats(p);
      out << "des=" << s.des << " asc=" << s.asc << " pl=" << s.pl;
      if (tree) {
        const int lv = leaves(*tree);
        out << " leaves=" << lv << (lv == s.pl ? " ok" : " MISMATCH");
        if (lv != s.pl) status = kMismatch;
      }
      out << '\n';
    } catch (const InvalidInput& e) {
      err << "line " << line_no << ": " << e.what() << '\n';
      status = kDataError;
    }
  }
  return status;
}

nlohmann::json row_json(const VerifyRow& r, bool timing) {
  nlohmann::json j;
  j["theorem"] = r.theorem;
  j["n"] = r.n;
  j["lambda"] = r.lambda;
  j["formula"] = r.formula ? nlohmann::json(big(*r.formula)) : nlohmann::json(nullptr);
  j["brute_force"] = big(r.brute_force);
  j["match"] = r.formula ? nlohmann::json(*r.formula == r.brute_force) : nlohmann::json(nullptr);
  j["status"] = std::string(outcome_name(r.outcome));
  if (timing) j["seconds"] = r.seconds;
  return j;
}

std::string match_text(const VerifyRow& r) {
  if (!r.formula) return "n/a";
  return *r.formula == r.brute_force ? "true" : "false";
}

void print_report(const VerifyReport& report, const std::string& format, bool timing, std::ostream& out) {
  if (format == "csv") {
    out << "n,lambda,formula,brute_force,match" << (timing ? ",seconds" : "") << '\n';
    for (const VerifyRow& r : report.rows) {
      out << r.n << ",\"" << r.lambda << "\"," << (r.formula ? big(*r.formula) : "") << ','
          << big(r.brute_force) << ',' << match_text(r);
      if (timing) out << ',' << r.seconds;
      out << '\n';
    }
    return;
  }
  if (format == "json") {
    for (const VerifyRow& r : report.rows) out << row_json(r, timing).dump() << '\n';
    return;
  }

  out << std::left << std::setw(22) << "theorem" << std::setw(4) << "n" << std::setw(12) << "lambda"
      << std::right << std::setw(14) << "formula" << std::setw(14) << "brute_force" << "  status";
  if (timing) out << "  seconds";
  out << '\n';
  for (const VerifyRow& r : report.rows) {
    const std::string lambda = r.lambda == r.theorem ? "" : r.lambda;
    out << std::left << std::setw(22) << r.theorem << std::setw(4) << r.n << std::setw(12) << lambda
        << std::right << std::setw(14) << (r.formula ? big(*r.formula) : "-") << std::setw(14)
        << big(r.brute_force) << "  " << outcome_name(r.outcome);
    if (timing) out << "  " << std::fixed << std::setprecision(3) << r.seconds << std::defaultfloat;
    out << '\n';
  }

  // Per-theorem verdicts in first-appearance order.
  std::vector<std::string> order;
  std::map<std::string, std::pair<int, int>> tally;  // fails, info rows
  for (const VerifyRow& r : report.rows) {
    auto [it, fresh] = tally.try_emplace(r.theorem, 0, 0);
    if (fresh) order.push_back(r.theorem);
    if (r.outcome == Outcome::kFail) ++it->second.first;
    if (r.outcome == Outcome::kInfo) ++it->second.second;
  }
  std::size_t registry_total = 0;
  std::size_t registry_pass = 0;
  out << '\n';
  for (const std::string& id : order) {
    const auto [fails, infos] = tally[id];
    const bool is_registry = std::any_of(theorem_registry().begin(), theorem_registry().end(),
                                         [&](const TheoremSpec& s) { return s.id == id; });
    if (is_registry) {
      ++registry_total;
      if (fails == 0) ++registry_pass;
    }
    std::string verdict = fails ? "FAIL" : (infos ? "INFO" : "PASS");
    if (infos) {
      std::size_t agree = 0;
      std::size_t rows = 0;
      for (const VerifyRow& r : report.rows) {
        if (r.theorem != id) continue;
        ++rows;
        if (r.formula && *r.formula == r.brute_force) ++agree;
      }
      verdict += " (" + std::to_string(agree) + "/" + std::to_string(rows) + " rows agree)";
    }
    out << std::left << std::setw(22) << id << verdict << std::right << '\n';
  }
  if (registry_total) out << "table theorems: " << registry_pass << '/' << registry_total << " PASS\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  check_cap(o.n_max, o.force, "--nmax");
  VerifyReport report;
  if (o.theorem == "all") {
    report = verify_all(o.n_max, o.jobs);
  } else if (o.theorem == "plateaus") {
    report = verify_plateaus(o.n_max, o.jobs);
  } else if (o.theorem == "descent-conjecture") {
    report = verify_descent_conjecture(o.n_max, o.jobs);
  } else if (o.theorem == "total") {
    report = verify_total(o.n_max, o.jobs);
  } else {
    const TheoremSpec* spec = nullptr;
    try {
      spec = &find_theorem(o.theorem);
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
    report = verify(*spec, o.n_max, o.jobs);
  }
  print_report(report, o.format, o.timing, out);
  return report.ok() ? kOk : kMismatch;
}

int cmd_sequence(const Options& o, std::ostream& out) {
  const int modes = (!o.lambda.empty()) + (o.total ? 1 : 0) + (o.plateaus > 0 ? 1 : 0);
  if (modes != 1) throw UsageError("sequence needs exactly one of --lambda, --total, --plateaus");
  const bool brute = o.brute || !o.lambda.empty();
  if (brute) check_cap(o.n_max, o.force, "--nmax");
  if (o.n_max < 1) throw UsageError("--nmax must be at least 1");

  std::vector<std::pair<int, BigInt>> values;
  if (!o.lambda.empty()) {
    const PatternSet set = parse_lambda(o.lambda);
    const Universe u = parse_universe(o.universe);
    BruteForceCounter counter(o.jobs);
    for (int n = 1; n <= o.n_max; ++n) {
      values.emplace_back(n, u == Universe::kQuasi ? counter.count(n, set) : count_filtered(n, set, u, o.jobs));
    }
  } else if (o.total) {
    for (int n = 1; n <= o.n_max; ++n) {
      values.emplace_back(n, brute ? count_universe(n, Universe::kQuasi, o.jobs) : total_count(n));
    }
  } else {
    for (int n = o.plateaus; n <= o.n_max; ++n) {
      values.emplace_back(n, brute ? plateau_histogram(n, o.jobs)[static_cast<std::size_t>(o.plateaus)]
                                   : plateau_count(n, o.plateaus));
    }
  }

  if (o.format == "csv") {
    out << "n,value\n";
    for (const auto& [n, v] : values) out << n << ',' << big(v) << '\n';
  } else if (o.format == "json") {
    for (const auto& [n, v] : values) out << nlohmann::json{{"n", n}, {"value", big(v)}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << big(values[i].second);
    out << '\n';
  }
  return kOk;
}

int cmd_wilf(const Options& o, std::ostream& out) {
  check_cap(o.n_max, o.force, "--nmax");
  const WilfReport report = wilf_classify(o.size, o.n_max, o.jobs);
  const std::vector<std::string> issues = compare_with_table(report);

  auto row_id = [](const PatternSet& s) {
    const TheoremSpec* row = table_row_for(s);
    return row ? row->id : std::string("-");
  };
  if (o.format == "csv") {
    out << "lambda,orbit,class,table_row";
    for (int n = 1; n <= report.n_max; ++n) out << ",q" << n;
    out << '\n';
    for (const WilfEntry& e : report.entries) {
      out << '"' << format_pattern_set(e.patterns) << "\"," << e.orbit << ',' << e.empirical_class << ",\""
          << row_id(e.patterns) << '"';
      for (const BigInt& c : e.counts) out << ',' << big(c);
      out << '\n';
    }
  } else if (o.format == "json") {
    for (const WilfEntry& e : report.entries) {
      nlohmann::json j;
      j["lambda"] = format_pattern_set(e.patterns);
      j["orbit"] = e.orbit;
      j["class"] = e.empirical_class;
      j["table_row"] = row_id(e.patterns);
      std::vector<std::string> counts;
      for (const BigInt& c : e.counts) counts.push_back(big(c));
      j["counts"] = counts;
      out << j.dump() << '\n';
    }
  } else {
    out << "size " << report.size << ", n = 1.." << report.n_max << ": " << report.entries.size()
        << " sets, " << report.orbit_count << " symmetry orbits, " << report.class_count
        << " count classes\n";
    out << std::left << std::setw(22) << "lambda" << std::setw(7) << "orbit" << std::setw(7) << "class"
        << std::setw(22) << "table row" << "counts" << std::right << '\n';
    for (const WilfEntry& e : report.entries) {
      std::string counts;
      for (const BigInt& c : e.counts) counts += (counts.empty() ? "" : ",") + big(c);
      out << std::left << std::setw(22) << format_pattern_set(e.patterns) << std::setw(7) << e.orbit
          << std::setw(7) << e.empirical_class << std::setw(22) << row_id(e.patterns) << counts << std::right
          << '\n';
    }
    if (issues.empty()) {
      out << "agrees with the classification table\n";
    } else {
      for (const std::string& issue : issues) out << "table disagreement: " << issue << '\n';
    }
  }
  return o.check && !issues.empty() ? kMismatch : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-Stirling permutation toolkit"};
  app.name("qstir");
  app.require_subcommand(1);
  Options o;

  auto jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads (affects timing only)")->check(CLI::PositiveNumber);
  };
  const std::vector<std::string> universes{"quasi", "all", "stirling"};
  const std::vector<std::string> formats{"table", "csv", "json"};

  auto* count = app.add_subcommand("count", "Count permutations of order N, optionally avoiding patterns");
  count->add_option("n", o.n, "Order")->required();
  count->add_option("--avoid", o.avoid, "Comma-separated pattern set");
  count->add_option("--universe", o.universe, "quasi | all | stirling")->check(CLI::IsMember(universes));
  count->add_flag("--force", o.force, "Allow orders above the exhaustive cap");
  jobs(count);

  auto* list = app.add_subcommand("list", "List permutations of order N, one per line");
  list->add_option("n", o.n, "Order")->required();
  list->add_option("--avoid", o.avoid, "Comma-separated pattern set");
  list->add_option("--universe", o.universe, "quasi | all | stirling")->check(CLI::IsMember(universes));
  list->add_flag("--trees", o.trees, "Print the corresponding trees instead");
  list->add_flag("--force", o.force, "Allow orders above the exhaustive cap");

  auto* convert = app.add_subcommand("convert", "Convert between permutation lines and tree text");
  convert->add_flag("--to-tree", o.to_tree, "Permutation lines to trees");
  convert->add_flag("--to-perm", o.to_perm, "Tree lines to permutations");
  convert->add_option("--input", o.input, "Read lines from a file instead of standard input");

  auto* stat = app.add_subcommand("stats", "Descents, ascents and plateaus per line");
  stat->add_flag("--trees", o.trees, "Input lines are trees; audit leaves against plateaus");
  stat->add_option("--input", o.input, "Read lines from a file instead of standard input");

  auto* ver = app.add_subcommand("verify", "Check formulas against brute force");
  ver->add_option("--theorem", o.theorem, "Registry id (e.g. 132,213), all, total, plateaus, descent-conjecture");
  ver->add_option("--nmax", o.n_max, "Largest order to check");
  ver->add_option("--format", o.format, "table | csv | json")->check(CLI::IsMember(formats));
  ver->add_flag("--timing", o.timing, "Include per-row timing");
  ver->add_flag("--force", o.force, "Allow orders above the exhaustive cap");
  jobs(ver);

  auto* seq = app.add_subcommand("sequence", "Export an integer sequence for n = 1..nmax");
  seq->add_option("--lambda", o.lambda, "Pattern set (brute force)");
  seq->add_flag("--total", o.total, "n! C_n");
  seq->add_option("--plateaus", o.plateaus, "Permutations with exactly k plateaus")->check(CLI::PositiveNumber);
  seq->add_option("--nmax", o.n_max, "Largest order");
  seq->add_option("--universe", o.universe, "Universe for --lambda")->check(CLI::IsMember(universes));
  seq->add_flag("--brute", o.brute, "Count --total/--plateaus by enumeration");
  seq->add_option("--format", o.format, "table (one line) | csv | json")->check(CLI::IsMember(formats));
  seq->add_flag("--force", o.force, "Allow orders above the exhaustive cap");
  jobs(seq);

  auto* wilf = app.add_subcommand("wilf", "Classify pattern subsets of S_3 by symmetry and by counts");
  wilf->add_option("--size", o.size, "Number of patterns in each set (1..5)")->required()->check(CLI::Range(1, 5));
  wilf->add_option("--nmax", o.n_max, "Largest order");
  wilf->add_option("--format", o.format, "table | csv | json")->check(CLI::IsMember(formats));
  wilf->add_flag("--check", o.check, "Exit 3 when the result disagrees with the classification table");
  wilf->add_flag("--force", o.force, "Allow orders above the exhaustive cap");
  jobs(wilf);

  std::vector<std::string> argv_store{"qstir"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*count) return cmd_count(o, out);
    if (*list) return cmd_list(o, out);
    if (*convert) return cmd_convert(o, in, out, err);
    if (*stat) return cmd_stats(o, in, out, err);
    if (*ver) return cmd_verify(o, out);
    if (*seq) return cmd_sequence(o, out);
    if (*wilf) return cmd_wilf(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace qstir::cli
