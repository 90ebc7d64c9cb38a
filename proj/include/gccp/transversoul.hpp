#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gccp/instance.hpp"
#include "gccp/transversal.hpp"

namespace gccp {

/// Exact counts T_0..T_w of k-element sets meeting every goal i at least
/// alpha_i times, together with the thresholds they answer.
struct TVector {
  std::vector<BigInt> counts;
  std::vector<int> alpha;

  int width() const { return static_cast<int>(counts.size()) - 1; }
  bool operator==(const TVector&) const = default;
};

enum class TransversoulStrategy {
  Auto,       ///< enumerate when the width allows it, otherwise reduce
  Enumerate,  ///< subset walk with per-goal counters
  Reduce,     ///< rewrite "at least s of m" as C(m, m-s+1) plain hitting
              ///< constraints and run the transversal decomposition
};

struct TransversoulOptions {
  TransversoulStrategy strategy = TransversoulStrategy::Auto;
  int enumeration_cap = 26;                  // max width for the subset walk
  std::uint64_t expansion_budget = 100000;   // max expanded goal count
  std::uint64_t row_budget = 50000000;       // decomposition rows on the reduce path
};

/// Counts alpha-transversouls. Both strategies are exact and interchangeable;
/// Auto picks whichever is admissible. Raises ResourceLimitError when the
/// width exceeds the enumeration cap and the expansion budget is blown too.
TVector count_transversouls(const Instance& inst, const AlphaVector& alpha,
                            const TransversoulOptions& options = {});

/// Checks the built-in 12-coupon reference fixture: six hand-written
/// {0,1,2,e(s),g(s)}-valued rows that partition the (2,1,3)-transversoul
/// family. Verifies pairwise disjointness, the union against brute-force
/// enumeration, and every per-row count column. Returns false and writes a
/// diff to `diagnostics` on any mismatch.
bool verify_reference_fixture(std::ostream* diagnostics = nullptr);

/// The instance and thresholds the reference fixture describes.
Instance reference_fixture_instance();

}  // namespace gccp
