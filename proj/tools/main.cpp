// Command-line front end: evaluate orderings, emit the optimal ones, brute
// force the tree space, run the fading simulation, and replay the property
// suites. All numerics live in the library; this file is flag plumbing.
//
// Exit codes: 0 success, 1 usage error, 2 domain error (infeasible or
// invalid input, or a failed verification), 3 resource guard (enumeration
// cap).

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mwrc/mwrc.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mwrc::DomainError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mwrc::DomainError("cannot write " + path);
  out << content;
}

std::vector<double> to_linear(std::vector<double> values, bool db) {
  if (db)
    for (double& v : values) v = std::pow(10.0, v / 10.0);
  return values;
}

mwrc::BoundKind parse_bound(const std::string& name) {
  return name == "weak" ? mwrc::BoundKind::Weak : mwrc::BoundKind::Exact;
}

mwrc::Objective parse_objective(const std::string& name) {
  return name == "sum" ? mwrc::Objective::Sum : mwrc::Objective::Common;
}

// "start:step:stop" (inclusive) or a single value.
std::vector<double> parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ':')) parts.push_back(token);
  try {
    if (parts.size() == 1) return {std::stod(parts[0])};
    if (parts.size() == 3) {
      const double start = std::stod(parts[0]);
      const double step = std::stod(parts[1]);
      const double stop = std::stod(parts[2]);
      if (!(step > 0.0)) throw UsageError("sweep step must be positive");
      if (stop < start) throw UsageError("sweep stop is before start");
      const double span = (stop - start) / step;
      if (span > 1e6) throw UsageError("sweep would have over 1e6 points");
      const int count = static_cast<int>(span + 1e-9) + 1;
      std::vector<double> points;
      points.reserve(static_cast<std::size_t>(count));
      for (int i = 0; i < count; ++i) points.push_back(start + i * step);
      return points;
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw UsageError("cannot parse sweep '" + text +
                   "' (want a value or start:step:stop)");
}

// "lo:hi" (inclusive) or a single value.
std::pair<int, int> parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ':')) parts.push_back(token);
  try {
    if (parts.size() == 1) {
      const int v = std::stoi(parts[0]);
      return {v, v};
    }
    if (parts.size() == 2) return {std::stoi(parts[0]), std::stoi(parts[1])};
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw UsageError("cannot parse range '" + text + "' (want n or lo:hi)");
}

nlohmann::ordered_json pairs_to_json(const mwrc::Ordering& ordering) {
  auto arr = nlohmann::ordered_json::array();
  for (mwrc::UserPair p : ordering.pairs)
    arr.push_back(nlohmann::ordered_json::array({p.a, p.b}));
  return arr;
}

int cmd_rate(const std::string& ordering_path, std::vector<double> snrs,
             bool db, const std::string& bound_name, bool require_tree) {
  const mwrc::OrderingDocument doc =
      mwrc::parse_ordering_json(read_file(ordering_path));
  snrs = to_linear(std::move(snrs), db);
  if (static_cast<int>(snrs.size()) != doc.n)
    throw mwrc::DomainError("got " + std::to_string(snrs.size()) +
                            " SNR values for an ordering over " +
                            std::to_string(doc.n) + " users");
  const mwrc::SnrProfile profile = mwrc::canonicalize(snrs);
  const mwrc::Ordering canonical =
      mwrc::relabel_to_canonical(doc.ordering, profile);
  std::vector<mwrc::UserPair> collapsed;
  const mwrc::ClientGraph graph =
      mwrc::build_client_graph(canonical, doc.n, &collapsed);
  for (mwrc::UserPair p : collapsed)
    std::cerr << "note: duplicate pair (" << profile.original_label(p.a) << ","
              << profile.original_label(p.b) << ") collapsed to one edge\n";
  if (require_tree && !mwrc::is_tree(graph))
    throw mwrc::DomainError("not a tree ordering");
  const mwrc::RateReport report =
      mwrc::evaluate_ordering(canonical, profile, parse_bound(bound_name));
  std::cout << mwrc::rate_report_to_json(report, profile).dump(2) << "\n";
  return 0;
}

int cmd_optimal(std::vector<double> snrs, bool db,
                const std::string& objective_name) {
  const mwrc::SnrProfile profile =
      mwrc::canonicalize(to_linear(std::move(snrs), db));
  const int n = profile.size();
  const mwrc::Objective objective = parse_objective(objective_name);
  const mwrc::Ordering canonical = objective == mwrc::Objective::Common
                                       ? mwrc::chain_ordering(n)
                                       : mwrc::star_ordering(n);
  const mwrc::ClientGraph graph = mwrc::build_client_graph(canonical, n);
  const mwrc::RateReport report =
      mwrc::evaluate(graph, profile, mwrc::BoundKind::Weak);

  nlohmann::ordered_json out;
  out["objective"] = objective_name;
  out["n"] = n;
  out["pairs"] = pairs_to_json(mwrc::relabel_to_original(canonical, profile));
  if (objective == mwrc::Objective::Common) {
    out["closed_form"] = mwrc::max_common_rate_closed_form(profile);
    out["evaluated_weak"] = report.common_rate;
  } else {
    out["closed_form"] = mwrc::max_sum_rate_closed_form(profile);
    out["evaluated_weak"] = report.sum_rate;
    // when the low-SNR clamp binds, closed_form floors each user at rate 0
    // while evaluated_weak keeps the negative terms
    out["low_snr_clamp"] = mwrc::sum_clamp_active(profile);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_brute(std::vector<double> snrs, bool db,
              const std::string& objective_name, const std::string& bound_name,
              int cap) {
  const mwrc::SnrProfile profile =
      mwrc::canonicalize(to_linear(std::move(snrs), db));
  const int n = profile.size();
  const mwrc::Objective objective = parse_objective(objective_name);
  const mwrc::BoundKind kind = parse_bound(bound_name);
  const mwrc::BruteForceResult result =
      mwrc::brute_force_best(profile, objective, kind, cap);

  const mwrc::Ordering constructive = objective == mwrc::Objective::Common
                                          ? mwrc::chain_ordering(n)
                                          : mwrc::star_ordering(n);
  const mwrc::PruferCode constructive_code =
      mwrc::prufer_encode(mwrc::build_client_graph(constructive, n));
  const bool in_set = std::find(result.co_optimal.begin(),
                                result.co_optimal.end(),
                                constructive_code) != result.co_optimal.end();

  // symmetric profiles can make millions of trees co-optimal; keep the
  // document bounded and say so
  constexpr std::size_t kMaxListed = 1000;
  nlohmann::ordered_json out;
  out["objective"] = objective_name;
  out["bound_kind"] = bound_name;
  out["n"] = n;
  out["tree_count"] = mwrc::tree_count(n);
  out["best_value"] = result.best_value;
  out["constructive_co_optimal"] = in_set;
  out["co_optimal_count"] = result.co_optimal.size();
  out["co_optimal_truncated"] = result.co_optimal.size() > kMaxListed;
  out["co_optimal"] = nlohmann::ordered_json::array();
  const std::size_t listed = std::min(result.co_optimal.size(), kMaxListed);
  for (std::size_t idx = 0; idx < listed; ++idx) {
    const mwrc::PruferCode& code = result.co_optimal[idx];
    const mwrc::ClientGraph tree = mwrc::prufer_decode(code, n);
    mwrc::Ordering ordering;
    for (mwrc::UserPair e : tree.edges())
      ordering.pairs.push_back(mwrc::normalized(
          {profile.original_label(e.a), profile.original_label(e.b)}));
    nlohmann::ordered_json entry;
    entry["prufer"] = code.labels;
    entry["n"] = n;
    entry["pairs"] = pairs_to_json(ordering);
    out["co_optimal"].push_back(entry);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_simulate(int n, const std::string& sweep_text, std::int64_t trials,
                 std::uint64_t seed, double power, double variance, int threads,
                 const std::string& out_path) {
  mwrc::ChannelConfig config;
  config.n_users = n;
  config.snr_sweep_db = parse_sweep(sweep_text);
  config.trials = trials;
  config.seed = seed;
  config.transmit_power = power;
  config.fading_variance = variance;
  config.threads = threads;
  const std::vector<mwrc::GapStats> stats = mwrc::run_gap_experiment(config);
  std::ostringstream csv;
  mwrc::write_gap_csv(csv, stats);
  write_output(out_path, csv.str());
  return 0;
}

int cmd_verify(const std::string& range_text, int profiles, std::uint64_t seed,
               int cap) {
  mwrc::VerifyOptions opts;
  const auto [lo, hi] = parse_range(range_text);
  opts.n_min = lo;
  opts.n_max = hi;
  opts.profiles_per_n = profiles;
  opts.seed = seed;
  opts.cap = cap;
  const std::vector<mwrc::CheckResult> results = mwrc::run_verification(opts);
  int failed = 0;
  for (const mwrc::CheckResult& r : results) {
    std::cout << (r.violations == 0 ? "ok   " : "FAIL ") << r.name
              << ": checked=" << r.checked << " violations=" << r.violations
              << "\n";
    if (r.violations != 0) ++failed;
  }
  std::cout << "seed=" << seed << " profiles=" << profiles << " n=" << lo
            << ".." << hi << "\n";
  if (failed != 0) {
    std::cout << "verification FAILED: " << failed << " of " << results.size()
              << " checks have violations\n";
    return 2;
  }
  std::cout << "verification passed: " << results.size() << " checks\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Achievable rates of pairwise functional-decode-forward multiway relay "
      "channels: evaluate transmission orderings, construct optimal ones, and "
      "check the optimality claims"};
  app.require_subcommand(1);

  std::vector<double> snrs;
  bool db = false;
  std::string bound_name = "exact";
  std::string objective_name = "common";
  std::string ordering_path;
  bool require_tree = false;
  int cap = mwrc::kDefaultEnumerationCap;

  CLI::App* rate =
      app.add_subcommand("rate", "Evaluate one ordering on an SNR profile");
  rate->add_option("--ordering", ordering_path,
                   "Ordering JSON file ({\"n\", \"pairs\"})")
      ->required();
  rate->add_option("--snr", snrs, "Per-user SNRs, comma separated")
      ->required()
      ->delimiter(',');
  rate->add_flag("--db", db, "Treat SNRs as dB (x = 10^(v/10))");
  rate->add_option("--bound", bound_name, "Rate bound (default exact)")
      ->check(CLI::IsMember({"exact", "weak"}));
  rate->add_flag("--require-tree", require_tree,
                 "Reject orderings whose client graph is not a tree");

  CLI::App* optimal = app.add_subcommand(
      "optimal", "Construct the rate-maximizing ordering for a profile");
  optimal->add_option("--snr", snrs, "Per-user SNRs, comma separated")
      ->required()
      ->delimiter(',');
  optimal->add_flag("--db", db, "Treat SNRs as dB (x = 10^(v/10))");
  optimal->add_option("--objective", objective_name, "common or sum")
      ->check(CLI::IsMember({"common", "sum"}));

  std::string brute_bound = "weak";
  CLI::App* brute = app.add_subcommand(
      "brute", "Exhaustively search every tree ordering (oracle)");
  brute->add_option("--snr", snrs, "Per-user SNRs, comma separated")
      ->required()
      ->delimiter(',');
  brute->add_flag("--db", db, "Treat SNRs as dB (x = 10^(v/10))");
  brute->add_option("--objective", objective_name, "common or sum")
      ->check(CLI::IsMember({"common", "sum"}));
  brute->add_option("--bound", brute_bound, "Rate bound (default weak)")
      ->check(CLI::IsMember({"exact", "weak"}));
  brute->add_option("--cap", cap, "Enumeration guard on the user count");

  int sim_n = 0;
  std::string sweep_text;
  std::int64_t trials = 100000;
  std::uint64_t seed = 0;
  double power = 1.0;
  double variance = 0.5;
  int threads = 1;
  std::string out_path;
  CLI::App* simulate = app.add_subcommand(
      "simulate",
      "Monte Carlo Rayleigh-fading comparison of optimal vs random orderings");
  simulate->add_option("--n", sim_n, "Number of users")->required();
  simulate
      ->add_option("--sweep", sweep_text,
                   "1/sigma^2 sweep in dB: start:step:stop or one value")
      ->required();
  simulate->add_option("--trials", trials, "Trials per sweep point");
  simulate->add_option("--seed", seed, "RNG seed")->required();
  simulate->add_option("--power", power, "Per-user transmit power");
  simulate->add_option("--variance", variance,
                       "Variance of each fading component");
  simulate->add_option("--threads", threads,
                       "Worker threads (0 = all hardware threads)");
  simulate->add_option("--out", out_path, "CSV output path (default stdout)");

  std::string range_text = "3:5";
  int profiles = 500;
  std::uint64_t verify_seed = 1;
  CLI::App* verify = app.add_subcommand(
      "verify", "Replay the optimality and gap-bound property suites");
  verify->add_option("--n", range_text, "User-count range, lo:hi or one value");
  verify->add_option("--profiles", profiles, "Random profiles per user count");
  verify->add_option("--seed", verify_seed, "RNG seed (echoed in the report)");
  verify->add_option("--cap", cap, "Enumeration guard on the user count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (rate->parsed())
      return cmd_rate(ordering_path, snrs, db, bound_name, require_tree);
    if (optimal->parsed()) return cmd_optimal(snrs, db, objective_name);
    if (brute->parsed())
      return cmd_brute(snrs, db, objective_name, brute_bound, cap);
    if (simulate->parsed())
      return cmd_simulate(sim_n, sweep_text, trials, seed, power, variance,
                          threads, out_path);
    if (verify->parsed())
      return cmd_verify(range_text, profiles, verify_seed, cap);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const mwrc::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const mwrc::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
