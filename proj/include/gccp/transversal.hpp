#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gccp/instance.hpp"
#include "gccp/row.hpp"

namespace gccp {

/// Exact counts tau_0..tau_w of k-element transversals.
struct TauVector {
  std::vector<BigInt> counts;

  int width() const { return static_cast<int>(counts.size()) - 1; }
  bool operator==(const TauVector&) const = default;
};

/// Order in which goal constraints are imposed. Ascending size (the default)
/// pins literals early and keeps rows narrow; AsGiven preserves instance
/// order. The output family is the same either way.
enum class GoalOrder { AscendingSize, AsGiven };

struct DecomposeOptions {
  GoalOrder order = GoalOrder::AscendingSize;
  std::uint64_t max_rows = 0;  // 0 = unlimited; exceeded -> ResourceLimitError
  bool force_generic = false;  // test hook: skip the width<=64 mask fast path
};

/// Pairwise-disjoint rows whose union is exactly the transversal family of
/// the instance the decomposition was built from.
struct RowDecomposition {
  int width = 0;
  std::vector<Row> rows;
};

/// The transversal e-algorithm. Starting from the all-don't-care row, each
/// goal is imposed in turn: rows already hitting the goal pass unchanged,
/// others split into disjoint cases by the first chunk of the goal that
/// contributes a one. Deterministic for a fixed instance; rows that can no
/// longer hit a goal are dropped.
RowDecomposition decompose(const Instance& inst, const DecomposeOptions& options = {});

/// Streaming form of decompose: rows are handed to the callback as they are
/// finished instead of being collected.
void decompose_visit(const Instance& inst, const DecomposeOptions& options,
                     const std::function<void(const Row&)>& emit);

/// tau_k as the sum of the k-th counting-polynomial coefficients of the rows.
TauVector tau_vector(const RowDecomposition& dec);

/// Decomposes and accumulates tau in one pass without materializing rows.
/// For widths up to 64 this runs on machine words end to end.
struct StreamedTau {
  TauVector tau;
  std::uint64_t rows = 0;
};
StreamedTau stream_tau(const Instance& inst, const DecomposeOptions& options = {});
TauVector tau_vector(const Instance& inst, const DecomposeOptions& options = {});

/// Text table of the decomposition with per-row cardinalities.
std::string render_decomposition(const RowDecomposition& dec);

}  // namespace gccp
