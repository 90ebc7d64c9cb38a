#pragma once

#include <cstdint>
#include <optional>

#include "gccp/instance.hpp"
#include "gccp/transversal.hpp"
#include "gccp/transversoul.hpp"

namespace gccp {

/// Outcome of a batch of simulated trials.
struct SimSummary {
  std::uint64_t trials = 0;
  double mean = 0.0;
  double sample_variance = 0.0;
  double standard_error = 0.0;
  /// Trials cut off at the defensive draw cap (10^4 * w, replacement only).
  /// Expected to be 0 everywhere this library is used in anger.
  std::uint64_t cap_hits = 0;
};

/// Counts k-element transversals by walking all 2^w subsets. Requires w <= 24.
TauVector brute_tau(const Instance& inst);

/// Exhaustive transversoul counts; same 2^w walk with per-goal multiplicities.
TVector brute_transversouls(const Instance& inst, const AlphaVector& alpha);

/// Draws coupons uniformly until every goal has been seen alpha_i times
/// (all-ones when alpha is absent) and reports the empirical distribution of
/// the stopping draw index. Deterministic for a fixed seed, independent of
/// thread count.
SimSummary simulate(const Instance& inst, bool with_replacement,
                    const std::optional<AlphaVector>& alpha, std::uint64_t trials,
                    std::uint64_t seed);

}  // namespace gccp
