#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "mwrc/client_graph.hpp"
#include "mwrc/errors.hpp"
#include "mwrc/optimal.hpp"
#include "mwrc/prufer.hpp"
#include "mwrc/rate.hpp"
#include "mwrc/rng.hpp"
#include "mwrc/snr_profile.hpp"

namespace mwrc {

// Monte Carlo experiment settings: independent Rayleigh fading per user, an
// SNR sweep in dB of 1/sigma^2, a trial count per sweep point, and a seed.
struct ChannelConfig {
  int n_users = 4;
  double transmit_power = 1.0;    // per-user P
  double fading_variance = 0.5;   // of each of the real and imaginary parts
  std::vector<double> snr_sweep_db;
  std::int64_t trials = 100000;
  std::uint64_t seed = 0;
  int threads = 1;                // 0 = all hardware threads
};

inline void validate(const ChannelConfig& config) {
  if (config.n_users < 2) throw DomainError("simulation needs at least two users");
  if (!(config.transmit_power > 0.0))
    throw DomainError("transmit power must be positive");
  if (!(config.fading_variance > 0.0))
    throw DomainError("fading variance must be positive");
  if (config.snr_sweep_db.empty()) throw DomainError("empty SNR sweep");
  for (double db : config.snr_sweep_db)
    if (!std::isfinite(db)) throw DomainError("sweep point is not finite");
  if (config.trials < 1) throw DomainError("need at least one trial");
  if (config.threads < 0) throw DomainError("thread count cannot be negative");
}

// Averages over one sweep point. The gaps compare the averaged optimal
// ordering against the averaged random one: g_c = (cr_opt - cr_rand)/cr_opt,
// ratio of means rather than mean of ratios, and likewise g_s.
struct GapStats {
  double snr_db = 0.0;
  int n_users = 0;
  std::int64_t trials = 0;
  double mean_cr_opt = 0.0;
  double mean_cr_rand = 0.0;
  double mean_sr_opt = 0.0;
  double mean_sr_rand = 0.0;
  double g_c = 0.0;
  double g_s = 0.0;
};

// One fading draw per user: g = a + bi with a, b zero-mean Gaussians of the
// configured variance, x = P |g|^2 / sigma^2. |g|^2 is exponential with mean
// 2 * variance, so the default variance 1/2 gives unit-mean fading power.
[[nodiscard]] inline SnrProfile sample_snr_profile(const ChannelConfig& config,
                                                   double sigma2,
                                                   SplitMix64& rng) {
  if (!(sigma2 > 0.0)) throw DomainError("noise power must be positive");
  const double scale = std::sqrt(config.fading_variance);
  std::vector<double> snrs;
  snrs.reserve(static_cast<std::size_t>(config.n_users));
  for (int i = 0; i < config.n_users; ++i) {
    const GaussianPair g = gaussian_pair(rng);
    const double a = scale * g.first;
    const double b = scale * g.second;
    const double x = config.transmit_power * (a * a + b * b) / sigma2;
    // a zero draw has probability ~2^-53; floor it so the profile stays valid
    snrs.push_back(std::max(x, std::numeric_limits<double>::min()));
  }
  return canonicalize(snrs);
}

namespace detail {

// Compensated summation; with the fixed index order below it makes the means
// reproducible bit for bit regardless of thread count.
struct KahanAccumulator {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace detail

// Per trial: draw a fading profile, then compare the chain (common rate) and
// the star (sum rate) against one uniformly random tree, all under the
// clamped bound. Each trial owns an RNG substream keyed by (seed, sweep
// index, trial index) and lands in its own slot, so output is identical for
// any thread count.
[[nodiscard]] inline std::vector<GapStats> run_gap_experiment(
    const ChannelConfig& config) {
  validate(config);
  const int n = config.n_users;
  const ClientGraph chain = build_client_graph(chain_ordering(n), n);
  const ClientGraph star = build_client_graph(star_ordering(n), n);

  unsigned thread_count = config.threads == 0
                              ? std::max(1u, std::thread::hardware_concurrency())
                              : static_cast<unsigned>(config.threads);
  constexpr std::int64_t kBlock = 1 << 16;  // bounds the per-block buffers

  std::vector<GapStats> all;
  all.reserve(config.snr_sweep_db.size());
  std::vector<double> cr_opt, cr_rand, sr_opt, sr_rand;
  for (std::size_t s = 0; s < config.snr_sweep_db.size(); ++s) {
    const double db = config.snr_sweep_db[s];
    const double sigma2 = std::pow(10.0, -db / 10.0);
    detail::KahanAccumulator acc_cr_opt, acc_cr_rand, acc_sr_opt, acc_sr_rand;

    for (std::int64_t base = 0; base < config.trials; base += kBlock) {
      const std::int64_t count = std::min(kBlock, config.trials - base);
      cr_opt.assign(static_cast<std::size_t>(count), 0.0);
      cr_rand.assign(static_cast<std::size_t>(count), 0.0);
      sr_opt.assign(static_cast<std::size_t>(count), 0.0);
      sr_rand.assign(static_cast<std::size_t>(count), 0.0);

      auto worker = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t t = lo; t < hi; ++t) {
          SplitMix64 rng(derive_seed(config.seed, static_cast<std::uint64_t>(s),
                                     static_cast<std::uint64_t>(base + t)));
          const SnrProfile profile = sample_snr_profile(config, sigma2, rng);
          const ClientGraph random_tree = sample_uniform_tree(n, rng);
          const std::size_t slot = static_cast<std::size_t>(t);
          cr_opt[slot] =
              evaluate(chain, profile, BoundKind::Exact).common_rate;
          sr_opt[slot] = evaluate(star, profile, BoundKind::Exact).sum_rate;
          const RateReport random_report =
              evaluate(random_tree, profile, BoundKind::Exact);
          cr_rand[slot] = random_report.common_rate;
          sr_rand[slot] = random_report.sum_rate;
        }
      };

      if (thread_count <= 1 || count < 2) {
        worker(0, count);
      } else {
        const std::int64_t chunk =
            (count + static_cast<std::int64_t>(thread_count) - 1) /
            static_cast<std::int64_t>(thread_count);
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (std::int64_t lo = 0; lo < count; lo += chunk)
          pool.emplace_back(worker, lo, std::min(lo + chunk, count));
        for (auto& th : pool) th.join();
      }

      for (std::int64_t t = 0; t < count; ++t) {
        acc_cr_opt.add(cr_opt[static_cast<std::size_t>(t)]);
        acc_cr_rand.add(cr_rand[static_cast<std::size_t>(t)]);
        acc_sr_opt.add(sr_opt[static_cast<std::size_t>(t)]);
        acc_sr_rand.add(sr_rand[static_cast<std::size_t>(t)]);
      }
    }

    GapStats stats;
    stats.snr_db = db;
    stats.n_users = n;
    stats.trials = config.trials;
    const double trials = static_cast<double>(config.trials);
    stats.mean_cr_opt = acc_cr_opt.sum / trials;
    stats.mean_cr_rand = acc_cr_rand.sum / trials;
    stats.mean_sr_opt = acc_sr_opt.sum / trials;
    stats.mean_sr_rand = acc_sr_rand.sum / trials;
    stats.g_c = stats.mean_cr_opt > 0.0
                    ? (stats.mean_cr_opt - stats.mean_cr_rand) / stats.mean_cr_opt
                    : 0.0;
    stats.g_s = stats.mean_sr_opt > 0.0
                    ? (stats.mean_sr_opt - stats.mean_sr_rand) / stats.mean_sr_opt
                    : 0.0;
    all.push_back(stats);
  }
  return all;
}

// Plot-ready CSV, 12 significant digits, LF line endings.
inline void write_gap_csv(std::ostream& out, std::span<const GapStats> stats) {
  out << "snr_db,n,trials,mean_cr_opt,mean_cr_rand,mean_sr_opt,mean_sr_rand,"
         "g_c,g_s\n";
  char buf[64];
  const auto fmt = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  for (const GapStats& row : stats) {
    out << fmt(row.snr_db) << ',' << row.n_users << ',' << row.trials << ','
        << fmt(row.mean_cr_opt) << ',' << fmt(row.mean_cr_rand) << ','
        << fmt(row.mean_sr_opt) << ',' << fmt(row.mean_sr_rand) << ','
        << fmt(row.g_c) << ',' << fmt(row.g_s) << '\n';
  }
}

}  // namespace mwrc
