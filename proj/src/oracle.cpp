#include "gccp/oracle.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <thread>

#include "gccp/errors.hpp"

namespace gccp {

namespace {

constexpr int kBruteWidthCap = 24;

std::vector<std::uint64_t> goal_masks(const Instance& inst) {
  std::vector<std::uint64_t> masks;
  masks.reserve(static_cast<std::size_t>(inst.goal_count()));
  for (const auto& g : inst.goals()) {
    std::uint64_t mask = 0;
    for (int p : g.members) mask |= std::uint64_t{1} << p;
    masks.push_back(mask);
  }
  return masks;
}

std::vector<BigInt> to_bigint(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> out;
  out.reserve(counts.size());
  for (const auto v : counts) {
    BigInt big;
    mpz_import(big.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    out.push_back(std::move(big));
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t block) {
  // splitmix64 step; decorrelates per-block streams from one user seed.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (block + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct BlockStats {
  std::uint64_t trials = 0;
  double sum = 0.0;
  double sum_squares = 0.0;
  std::uint64_t cap_hits = 0;
};

}  // namespace

TauVector brute_tau(const Instance& inst) {
  const int w = inst.width();
  if (w > kBruteWidthCap)
    throw ResourceLimitError("brute_tau: width " + std::to_string(w) + " exceeds cap " +
                             std::to_string(kBruteWidthCap));
  const auto masks = goal_masks(inst);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(w) + 1, 0);
  const std::uint64_t limit = std::uint64_t{1} << w;
  for (std::uint64_t x = 0; x < limit; ++x) {
    bool hits_all = true;
    for (const auto m : masks) {
      if ((x & m) == 0) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) ++counts[static_cast<std::size_t>(std::popcount(x))];
  }
  return TauVector{to_bigint(counts)};
}

TVector brute_transversouls(const Instance& inst, const AlphaVector& alpha) {
  const int w = inst.width();
  if (w > kBruteWidthCap)
    throw ResourceLimitError("brute_transversouls: width " + std::to_string(w) +
                             " exceeds cap " + std::to_string(kBruteWidthCap));
  if (alpha.thresholds.size() != static_cast<std::size_t>(inst.goal_count()))
    throw ValidationError("alpha vector length does not match goal count");
  const auto masks = goal_masks(inst);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(w) + 1, 0);
  const std::uint64_t limit = std::uint64_t{1} << w;
  for (std::uint64_t x = 0; x < limit; ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (std::popcount(x & masks[i]) < alpha.thresholds[i]) {
        ok = false;
        break;
      }
    }
    if (ok) ++counts[static_cast<std::size_t>(std::popcount(x))];
  }
  return TVector{to_bigint(counts), alpha.thresholds};
}

SimSummary simulate(const Instance& inst, bool with_replacement,
                    const std::optional<AlphaVector>& alpha, std::uint64_t trials,
                    std::uint64_t seed) {
  if (trials < 1) throw ValidationError("simulate: need at least one trial");
  const int w = inst.width();
  if (w < 1) throw ValidationError("simulate: instance has no coupons");
  const int h = inst.goal_count();
  const std::vector<int> thresholds =
      alpha ? alpha->thresholds : std::vector<int>(static_cast<std::size_t>(h), 1);
  if (thresholds.size() != static_cast<std::size_t>(h))
    throw ValidationError("alpha vector length does not match goal count");
  for (int i = 0; i < h; ++i) {
    if (thresholds[static_cast<std::size_t>(i)] >
        static_cast<int>(inst.goals()[static_cast<std::size_t>(i)].members.size()))
      throw ValidationError("alpha exceeds goal size, trials would not terminate");
  }

  // coupon -> goals it serves
  std::vector<std::vector<int>> serves(static_cast<std::size_t>(w));
  for (int i = 0; i < h; ++i) {
    for (int c : inst.goals()[static_cast<std::size_t>(i)].members)
      serves[static_cast<std::size_t>(c)].push_back(i);
  }
  const std::uint64_t draw_cap = 10000ULL * static_cast<std::uint64_t>(w);

  // Fixed block structure keeps results independent of the thread count.
  const std::uint64_t block_count = std::min<std::uint64_t>(64, trials);
  std::vector<BlockStats> blocks(block_count);

  auto run_block = [&](std::uint64_t b) {
    BlockStats& stats = blocks[b];
    stats.trials = trials / block_count + (b < trials % block_count ? 1 : 0);
    std::mt19937_64 rng(mix_seed(seed, b));
    std::uniform_int_distribution<int> pick(0, w - 1);
    std::vector<int> need(static_cast<std::size_t>(h));
    std::vector<int> urn(static_cast<std::size_t>(w));
    for (std::uint64_t t = 0; t < stats.trials; ++t) {
      for (int i = 0; i < h; ++i) need[static_cast<std::size_t>(i)] = thresholds[static_cast<std::size_t>(i)];
      int open_goals = h;
      std::uint64_t length = 0;
      if (with_replacement) {
        while (open_goals > 0 && length < draw_cap) {
          const int c = pick(rng);
          ++length;
          for (int g : serves[static_cast<std::size_t>(c)]) {
            if (--need[static_cast<std::size_t>(g)] == 0) --open_goals;
          }
        }
        if (open_goals > 0) ++stats.cap_hits;
      } else {
        for (int i = 0; i < w; ++i) urn[static_cast<std::size_t>(i)] = i;
        int remaining = w;
        while (open_goals > 0) {
          std::uniform_int_distribution<int> slot(0, remaining - 1);
          const int at = slot(rng);
          const int c = urn[static_cast<std::size_t>(at)];
          urn[static_cast<std::size_t>(at)] = urn[static_cast<std::size_t>(remaining - 1)];
          --remaining;
          ++length;
          for (int g : serves[static_cast<std::size_t>(c)]) {
            if (--need[static_cast<std::size_t>(g)] == 0) --open_goals;
          }
        }
      }
      const double x = static_cast<double>(length);
      stats.sum += x;
      stats.sum_squares += x * x;
    }
  };

  const unsigned worker_count =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(block_count));
  if (worker_count <= 1) {
    for (std::uint64_t b = 0; b < block_count; ++b) run_block(b);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) {
      workers.emplace_back([&, t] {
        for (std::uint64_t b = t; b < block_count; b += worker_count) run_block(b);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  SimSummary summary;
  double sum = 0.0, sum_squares = 0.0;
  for (const auto& stats : blocks) {
    summary.trials += stats.trials;
    summary.cap_hits += stats.cap_hits;
    sum += stats.sum;
    sum_squares += stats.sum_squares;
  }
  const double n = static_cast<double>(summary.trials);
  summary.mean = sum / n;
  summary.sample_variance =
      summary.trials > 1 ? (sum_squares - sum * sum / n) / (n - 1.0) : 0.0;
  if (summary.sample_variance < 0) summary.sample_variance = 0;  // fp guard
  summary.standard_error = std::sqrt(summary.sample_variance / n);
  return summary;
}

}  // namespace gccp
