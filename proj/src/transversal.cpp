#include "gccp/transversal.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gccp/errors.hpp"

namespace gccp {

namespace {

std::vector<std::vector<int>> ordered_goals(const Instance& inst, GoalOrder order) {
  std::vector<std::vector<int>> goals;
  goals.reserve(static_cast<std::size_t>(inst.goal_count()));
  for (const auto& g : inst.goals()) goals.push_back(g.members);
  if (order == GoalOrder::AscendingSize) {
    std::stable_sort(goals.begin(), goals.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
  }
  return goals;
}

// ---- mask path (width <= 64) -------------------------------------------

struct MaskRow {
  std::uint64_t ones = 0;
  std::uint64_t zeros = 0;
  std::vector<std::uint64_t> groups;  // threshold-1 position masks
};

// Places a "at least one 1 here" requirement, collapsing singletons to
// literal ones.
void add_requirement(MaskRow& row, std::uint64_t mask) {
  if (std::popcount(mask) == 1)
    row.ones |= mask;
  else
    row.groups.push_back(mask);
}

enum class Imposed { Satisfied, Dropped, Split };

Imposed impose(const MaskRow& row, std::uint64_t goal, std::uint64_t all,
               std::vector<MaskRow>& children) {
  if (row.ones & goal) return Imposed::Satisfied;
  std::uint64_t grouped = 0;
  for (const auto g : row.groups) {
    if ((g & ~goal) == 0) return Imposed::Satisfied;  // whole group inside the goal
    grouped |= g;
  }
  const std::uint64_t dontcare = all & ~row.ones & ~row.zeros & ~grouped;

  // Chunks of the goal that could contribute a one: free positions first,
  // then the overlap with each group in storage order.
  const std::uint64_t free_chunk = dontcare & goal;
  std::vector<std::size_t> overlapping;
  for (std::size_t g = 0; g < row.groups.size(); ++g) {
    if (row.groups[g] & goal) overlapping.push_back(g);
  }
  const std::size_t chunk_count = overlapping.size() + (free_chunk ? 1 : 0);
  if (chunk_count == 0) return Imposed::Dropped;

  children.clear();
  children.reserve(chunk_count);
  for (std::size_t c = 0; c < chunk_count; ++c) {
    MaskRow child;
    child.ones = row.ones;
    child.zeros = row.zeros;
    child.groups.reserve(row.groups.size() + 1);
    const bool free_case = free_chunk && c == 0;
    const std::size_t picked =
        free_chunk ? (free_case ? row.groups.size() : overlapping[c - 1])
                   : overlapping[c];

    // Earlier chunks are pinned to zero, the picked chunk must contain a one.
    if (!free_case && free_chunk) child.zeros |= free_chunk;
    for (std::size_t g = 0; g < row.groups.size(); ++g) {
      const std::uint64_t overlap = row.groups[g] & goal;
      if (!overlap || free_case || g > picked) {
        child.groups.push_back(row.groups[g]);  // untouched
      } else if (g == picked) {
        // "one in the overlap" subsumes the old group; its remainder
        // becomes don't-care.
        add_requirement(child, overlap);
      } else {
        child.zeros |= overlap;
        add_requirement(child, row.groups[g] & ~goal);
      }
    }
    if (free_case) add_requirement(child, free_chunk);
    children.push_back(std::move(child));
  }
  return Imposed::Split;
}

Row to_row(const MaskRow& row, int width) {
  RowSpec spec;
  spec.width = width;
  for (int p = 0; p < width; ++p) {
    if (row.ones >> p & 1u) spec.ones.push_back(p);
    if (row.zeros >> p & 1u) spec.zeros.push_back(p);
  }
  for (const auto mask : row.groups) {
    ConstraintGroup g{GroupKind::AtLeast, 1, {}};
    for (int p = 0; p < width; ++p) {
      if (mask >> p & 1u) g.positions.push_back(p);
    }
    spec.groups.push_back(std::move(g));
  }
  return Row(spec);
}

template <typename Emit>
void run_mask(const Instance& inst, const DecomposeOptions& options, Emit&& emit) {
  const int w = inst.width();
  const std::uint64_t all = w == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
  const auto goals = ordered_goals(inst, options.order);
  std::vector<std::uint64_t> goal_masks;
  goal_masks.reserve(goals.size());
  for (const auto& g : goals) {
    std::uint64_t mask = 0;
    for (int p : g) mask |= std::uint64_t{1} << p;
    goal_masks.push_back(mask);
  }

  std::uint64_t emitted = 0;
  std::vector<std::pair<MaskRow, std::size_t>> stack;
  stack.emplace_back(MaskRow{}, 0);
  std::vector<MaskRow> children;
  while (!stack.empty()) {
    auto [row, next] = std::move(stack.back());
    stack.pop_back();
    while (next < goal_masks.size()) {
      const Imposed result = impose(row, goal_masks[next], all, children);
      if (result == Imposed::Dropped) break;
      ++next;
      if (result == Imposed::Satisfied) continue;
      // Keep the first case, stack the rest in reverse for in-order popping.
      for (std::size_t c = children.size(); c-- > 1;)
        stack.emplace_back(std::move(children[c]), next);
      row = std::move(children[0]);
    }
    if (next == goal_masks.size()) {
      if (options.max_rows && ++emitted > options.max_rows)
        throw ResourceLimitError("row decomposition exceeds " +
                                 std::to_string(options.max_rows) + " rows");
      emit(row);
    }
  }
}

// ---- generic path (any width) ------------------------------------------
//
// Mirrors the mask path cell by cell so both paths produce identical row
// sequences; used for widths beyond 64 and as a cross-check in tests.

struct GenRow {
  std::vector<std::int8_t> cells;            // 0,1,2 literal/dontcare; 3 = grouped
  std::vector<std::vector<int>> groups;
};
constexpr std::int8_t kGZero = 0, kGOne = 1, kGFree = 2, kGGrouped = 3;

void add_requirement(GenRow& row, std::vector<int> positions) {
  if (positions.size() == 1) {
    row.cells[static_cast<std::size_t>(positions[0])] = kGOne;
  } else {
    for (int p : positions) row.cells[static_cast<std::size_t>(p)] = kGGrouped;
    row.groups.push_back(std::move(positions));
  }
}

Imposed impose(const GenRow& row, const std::vector<int>& goal, std::vector<GenRow>& children) {
  for (int p : goal) {
    if (row.cells[static_cast<std::size_t>(p)] == kGOne) return Imposed::Satisfied;
  }
  std::vector<int> free_chunk;
  for (int p : goal) {
    if (row.cells[static_cast<std::size_t>(p)] == kGFree) free_chunk.push_back(p);
  }
  std::vector<std::size_t> overlapping;
  for (std::size_t g = 0; g < row.groups.size(); ++g) {
    std::size_t inside = 0;
    for (int p : row.groups[g]) {
      if (std::binary_search(goal.begin(), goal.end(), p)) ++inside;
    }
    if (inside == row.groups[g].size()) return Imposed::Satisfied;
    if (inside > 0) overlapping.push_back(g);
  }
  const std::size_t chunk_count = overlapping.size() + (free_chunk.empty() ? 0 : 1);
  if (chunk_count == 0) return Imposed::Dropped;

  auto split_group = [&](const std::vector<int>& group, std::vector<int>& in, std::vector<int>& out) {
    for (int p : group) {
      if (std::binary_search(goal.begin(), goal.end(), p))
        in.push_back(p);
      else
        out.push_back(p);
    }
  };

  children.clear();
  for (std::size_t c = 0; c < chunk_count; ++c) {
    GenRow child;
    child.cells = row.cells;
    const bool free_case = !free_chunk.empty() && c == 0;
    const std::size_t picked = !free_chunk.empty()
                                   ? (free_case ? row.groups.size() : overlapping[c - 1])
                                   : overlapping[c];
    if (!free_case && !free_chunk.empty()) {
      for (int p : free_chunk) child.cells[static_cast<std::size_t>(p)] = kGZero;
    }
    for (std::size_t g = 0; g < row.groups.size(); ++g) {
      std::vector<int> in, out;
      split_group(row.groups[g], in, out);
      if (in.empty() || free_case || g > picked) {
        child.groups.push_back(row.groups[g]);
      } else if (g == picked) {
        for (int p : out) child.cells[static_cast<std::size_t>(p)] = kGFree;
        add_requirement(child, std::move(in));
      } else {
        for (int p : in) child.cells[static_cast<std::size_t>(p)] = kGZero;
        for (int p : out) child.cells[static_cast<std::size_t>(p)] = kGFree;
        add_requirement(child, std::move(out));
      }
    }
    if (free_case) add_requirement(child, free_chunk);
    children.push_back(std::move(child));
  }
  return Imposed::Split;
}

Row to_row(const GenRow& row, int width) {
  RowSpec spec;
  spec.width = width;
  for (int p = 0; p < width; ++p) {
    if (row.cells[static_cast<std::size_t>(p)] == kGOne) spec.ones.push_back(p);
    if (row.cells[static_cast<std::size_t>(p)] == kGZero) spec.zeros.push_back(p);
  }
  for (const auto& positions : row.groups)
    spec.groups.push_back(ConstraintGroup{GroupKind::AtLeast, 1, positions});
  return Row(spec);
}

template <typename Emit>
void run_generic(const Instance& inst, const DecomposeOptions& options, Emit&& emit) {
  const int w = inst.width();
  auto goals = ordered_goals(inst, options.order);

  std::uint64_t emitted = 0;
  GenRow start;
  start.cells.assign(static_cast<std::size_t>(w), kGFree);
  std::vector<std::pair<GenRow, std::size_t>> stack;
  stack.emplace_back(std::move(start), 0);
  std::vector<GenRow> children;
  while (!stack.empty()) {
    auto [row, next] = std::move(stack.back());
    stack.pop_back();
    while (next < goals.size()) {
      const Imposed result = impose(row, goals[next], children);
      if (result == Imposed::Dropped) break;
      ++next;
      if (result == Imposed::Satisfied) continue;
      for (std::size_t c = children.size(); c-- > 1;)
        stack.emplace_back(std::move(children[c]), next);
      row = std::move(children[0]);
    }
    if (next == goals.size()) {
      if (options.max_rows && ++emitted > options.max_rows)
        throw ResourceLimitError("row decomposition exceeds " +
                                 std::to_string(options.max_rows) + " rows");
      emit(row);
    }
  }
}

// Word-sized counting-polynomial accumulation for the mask path. Safe in
// 64-bit arithmetic: every partial coefficient counts subsets of at most 64
// positions, so it is bounded by C(64,32) < 2^61.
struct WordTauAccumulator {
  explicit WordTauAccumulator(int width) : w(width), tau(static_cast<std::size_t>(width) + 1, 0) {
    for (int n = 0; n <= 64; ++n) {
      choose[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        choose[n][k] = choose[n - 1][k - 1] + (k <= n - 1 ? choose[n - 1][k] : 0);
    }
  }

  void add(const MaskRow& row, std::uint64_t all) {
    std::uint64_t grouped = 0;
    for (const auto g : row.groups) grouped |= g;
    const int ones = std::popcount(row.ones);
    const int dontcares = std::popcount(all & ~row.ones & ~row.zeros & ~grouped);

    poly.assign(1, 1);
    for (const auto g : row.groups) {
      const int m = std::popcount(g);
      scratch.assign(poly.size() + static_cast<std::size_t>(m), 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        if (!poly[i]) continue;
        for (int j = 1; j <= m; ++j) scratch[i + static_cast<std::size_t>(j)] += poly[i] * choose[m][j];
      }
      poly.swap(scratch);
    }
    if (dontcares > 0) {
      scratch.assign(poly.size() + static_cast<std::size_t>(dontcares), 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        if (!poly[i]) continue;
        for (int j = 0; j <= dontcares; ++j)
          scratch[i + static_cast<std::size_t>(j)] += poly[i] * choose[dontcares][j];
      }
      poly.swap(scratch);
    }
    for (std::size_t i = 0; i < poly.size(); ++i) tau[i + static_cast<std::size_t>(ones)] += poly[i];
  }

  int w;
  std::vector<std::uint64_t> tau;
  std::vector<std::uint64_t> poly, scratch;
  std::uint64_t choose[65][65] = {};
};

}  // namespace

void decompose_visit(const Instance& inst, const DecomposeOptions& options,
                     const std::function<void(const Row&)>& emit) {
  const int w = inst.width();
  if (w <= 64 && !options.force_generic) {
    run_mask(inst, options, [&](const MaskRow& row) { emit(to_row(row, w)); });
  } else {
    run_generic(inst, options, [&](const GenRow& row) { emit(to_row(row, w)); });
  }
}

RowDecomposition decompose(const Instance& inst, const DecomposeOptions& options) {
  RowDecomposition dec;
  dec.width = inst.width();
  decompose_visit(inst, options, [&](const Row& row) { dec.rows.push_back(row); });
  return dec;
}

TauVector tau_vector(const RowDecomposition& dec) {
  TauVector tau;
  tau.counts.assign(static_cast<std::size_t>(dec.width) + 1, BigInt(0));
  for (const auto& row : dec.rows) {
    const CountPolynomial poly = count_polynomial(row);
    for (std::size_t k = 0; k < poly.coefficients.size(); ++k) tau.counts[k] += poly.coefficients[k];
  }
  return tau;
}

StreamedTau stream_tau(const Instance& inst, const DecomposeOptions& options) {
  const int w = inst.width();
  StreamedTau result;
  if (w <= 64 && !options.force_generic) {
    const std::uint64_t all = w == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
    WordTauAccumulator acc(w);
    run_mask(inst, options, [&](const MaskRow& row) {
      acc.add(row, all);
      ++result.rows;
    });
    result.tau.counts.reserve(static_cast<std::size_t>(w) + 1);
    for (const auto v : acc.tau) {
      BigInt big;
      mpz_import(big.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
      result.tau.counts.push_back(std::move(big));
    }
  } else {
    result.tau.counts.assign(static_cast<std::size_t>(w) + 1, BigInt(0));
    run_generic(inst, options, [&](const GenRow& row) {
      const CountPolynomial poly = count_polynomial(to_row(row, w));
      for (std::size_t k = 0; k < poly.coefficients.size(); ++k)
        result.tau.counts[k] += poly.coefficients[k];
      ++result.rows;
    });
  }
  return result;
}

TauVector tau_vector(const Instance& inst, const DecomposeOptions& options) {
  return stream_tau(inst, options).tau;
}

std::string render_decomposition(const RowDecomposition& dec) {
  std::ostringstream out;
  BigInt total(0);
  for (std::size_t i = 0; i < dec.rows.size(); ++i) {
    const BigInt size = dec.rows[i].cardinality();
    out << "r" << i + 1 << ": " << dec.rows[i].to_string() << "   |r" << i + 1
        << "| = " << size.get_str() << "\n";
    total += size;
  }
  out << "rows = " << dec.rows.size() << ", total = " << total.get_str() << "\n";
  return out.str();
}

}  // namespace gccp
