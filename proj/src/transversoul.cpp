#include "gccp/transversoul.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <thread>

#include "gccp/errors.hpp"
#include "gccp/oracle.hpp"
#include "gccp/row.hpp"

namespace gccp {

namespace {

void validate_alpha(const Instance& inst, const AlphaVector& alpha) {
  if (alpha.thresholds.size() != static_cast<std::size_t>(inst.goal_count()))
    throw ValidationError("alpha vector length does not match goal count");
  for (std::size_t i = 0; i < alpha.thresholds.size(); ++i) {
    const int a = alpha.thresholds[i];
    const auto& g = inst.goals()[i];
    if (a < 1) throw ValidationError("goal '" + g.name + "': alpha must be >= 1");
    if (a > static_cast<int>(g.members.size()))
      throw ValidationError("goal '" + g.name + "': alpha exceeds goal size, no transversoul exists");
  }
}

TVector enumerate_transversouls(const Instance& inst, const AlphaVector& alpha) {
  const int w = inst.width();
  if (w >= 64)
    throw ResourceLimitError("subset enumeration needs width < 64");
  std::vector<std::uint64_t> masks;
  for (const auto& g : inst.goals()) {
    std::uint64_t mask = 0;
    for (int p : g.members) mask |= std::uint64_t{1} << p;
    masks.push_back(mask);
  }

  const std::uint64_t limit = std::uint64_t{1} << w;
  const unsigned worker_count =
      w >= 20 ? std::min(16u, std::max(1u, std::thread::hardware_concurrency())) : 1;
  std::vector<std::vector<std::uint64_t>> partial(
      worker_count, std::vector<std::uint64_t>(static_cast<std::size_t>(w) + 1, 0));

  auto scan = [&](unsigned worker) {
    auto& counts = partial[worker];
    const std::uint64_t begin = limit / worker_count * worker;
    const std::uint64_t end = worker + 1 == worker_count ? limit : limit / worker_count * (worker + 1);
    for (std::uint64_t x = begin; x < end; ++x) {
      bool ok = true;
      for (std::size_t i = 0; i < masks.size(); ++i) {
        if (std::popcount(x & masks[i]) < alpha.thresholds[i]) {
          ok = false;
          break;
        }
      }
      if (ok) ++counts[static_cast<std::size_t>(std::popcount(x))];
    }
  };

  if (worker_count == 1) {
    scan(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < worker_count; ++t) workers.emplace_back(scan, t);
    for (auto& worker : workers) worker.join();
  }

  TVector result;
  result.alpha = alpha.thresholds;
  result.counts.assign(static_cast<std::size_t>(w) + 1, BigInt(0));
  for (const auto& counts : partial) {
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k]) result.counts[k] += BigInt(static_cast<unsigned long>(counts[k]));
    }
  }
  return result;
}

BigInt expansion_size(const Instance& inst, const AlphaVector& alpha) {
  BigInt total(0);
  for (std::size_t i = 0; i < alpha.thresholds.size(); ++i) {
    const long m = static_cast<long>(inst.goals()[i].members.size());
    total += binomial(m, m - alpha.thresholds[i] + 1);
  }
  return total;
}

// |X ∩ G| >= s holds iff X hits every (m-s+1)-element subset of G, so each
// multiplicity constraint expands into plain hitting constraints.
TVector reduce_transversouls(const Instance& inst, const AlphaVector& alpha,
                             std::uint64_t row_budget) {
  std::vector<Goal> expanded;
  for (std::size_t i = 0; i < alpha.thresholds.size(); ++i) {
    const auto& members = inst.goals()[i].members;
    const int m = static_cast<int>(members.size());
    const int pick = m - alpha.thresholds[i] + 1;
    std::vector<int> index(static_cast<std::size_t>(pick));
    for (int j = 0; j < pick; ++j) index[static_cast<std::size_t>(j)] = j;
    long counter = 0;
    for (;;) {
      Goal g{inst.goals()[i].name + "#" + std::to_string(++counter), {}};
      for (int j : index) g.members.push_back(members[static_cast<std::size_t>(j)]);
      expanded.push_back(std::move(g));
      int at = pick - 1;
      while (at >= 0 && index[static_cast<std::size_t>(at)] == m - pick + at) --at;
      if (at < 0) break;
      ++index[static_cast<std::size_t>(at)];
      for (int j = at + 1; j < pick; ++j)
        index[static_cast<std::size_t>(j)] = index[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  const Instance plain = reduce_goals(Instance(inst.coupons(), std::move(expanded)));
  DecomposeOptions options;
  options.max_rows = row_budget;
  TauVector tau = tau_vector(plain, options);
  return TVector{std::move(tau.counts), alpha.thresholds};
}

}  // namespace

TVector count_transversouls(const Instance& inst, const AlphaVector& alpha,
                            const TransversoulOptions& options) {
  validate_alpha(inst, alpha);
  const int w = inst.width();
  switch (options.strategy) {
    case TransversoulStrategy::Enumerate:
      if (w > options.enumeration_cap)
        throw ResourceLimitError("width " + std::to_string(w) + " exceeds enumeration cap " +
                                 std::to_string(options.enumeration_cap));
      return enumerate_transversouls(inst, alpha);
    case TransversoulStrategy::Reduce:
      if (expansion_size(inst, alpha) > static_cast<long>(options.expansion_budget))
        throw ResourceLimitError("constraint expansion exceeds budget of " +
                                 std::to_string(options.expansion_budget) + " goals");
      return reduce_transversouls(inst, alpha, options.row_budget);
    case TransversoulStrategy::Auto:
      break;
  }
  if (w <= options.enumeration_cap) return enumerate_transversouls(inst, alpha);
  if (expansion_size(inst, alpha) <= static_cast<long>(options.expansion_budget))
    return reduce_transversouls(inst, alpha, options.row_budget);
  throw ResourceLimitError(
      "width exceeds the enumeration cap and the constraint expansion exceeds its budget");
}

Instance reference_fixture_instance() {
  std::vector<std::string> coupons;
  for (int i = 1; i <= 12; ++i) coupons.push_back("c" + std::to_string(i));
  std::vector<Goal> goals{
      {"G1", {0, 1, 2, 3, 4}},
      {"G2", {5, 6, 7}},
      {"G3", {3, 4, 5, 8, 9, 10, 11}},
  };
  return Instance(std::move(coupons), std::move(goals), AlphaVector{{2, 1, 3}});
}

bool verify_reference_fixture(std::ostream* diagnostics) {
  bool ok = true;
  auto complain = [&](const std::string& message) {
    ok = false;
    if (diagnostics) *diagnostics << message << "\n";
  };

  using G = ConstraintGroup;
  const auto at_least = [](int s, std::vector<int> pos) {
    return G{GroupKind::AtLeast, s, std::move(pos)};
  };
  const auto exactly = [](int s, std::vector<int> pos) {
    return G{GroupKind::Exactly, s, std::move(pos)};
  };

  std::vector<Row> rows;
  rows.emplace_back(RowSpec{12, {}, {3, 4, 5},
                            {at_least(2, {0, 1, 2}), at_least(1, {6, 7}), at_least(3, {8, 9, 10, 11})}});
  rows.emplace_back(RowSpec{12, {5}, {3, 4},
                            {at_least(2, {0, 1, 2}), at_least(2, {8, 9, 10, 11})}});
  rows.emplace_back(RowSpec{12, {}, {5},
                            {at_least(1, {0, 1, 2}), exactly(1, {3, 4}), at_least(1, {6, 7}),
                             at_least(2, {8, 9, 10, 11})}});
  rows.emplace_back(RowSpec{12, {5}, {},
                            {at_least(1, {0, 1, 2}), exactly(1, {3, 4}), at_least(1, {8, 9, 10, 11})}});
  rows.emplace_back(RowSpec{12, {3, 4}, {5}, {at_least(1, {6, 7}), at_least(1, {8, 9, 10, 11})}});
  rows.emplace_back(RowSpec{12, {3, 4, 5}, {}, {}});

  // Frozen per-row counts for k = 0..12 and their column sums.
  const std::vector<std::vector<long>> expected_cards{
      {0, 0, 0, 0, 0, 0, 24, 26, 9, 1, 0, 0, 0},
      {0, 0, 0, 0, 0, 18, 54, 61, 33, 9, 1, 0, 0},
      {0, 0, 0, 0, 0, 72, 156, 144, 70, 18, 2, 0, 0},
      {0, 0, 0, 0, 24, 108, 212, 238, 166, 72, 18, 2, 0},
      {0, 0, 0, 0, 8, 40, 86, 104, 77, 35, 9, 1, 0},
      {0, 0, 0, 1, 9, 36, 84, 126, 126, 84, 36, 9, 1},
  };
  const std::vector<long> expected_total{0, 0, 0, 1, 41, 274, 616, 699, 481, 219, 66, 12, 1};

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CountPolynomial poly = count_polynomial(rows[i]);
    for (std::size_t k = 0; k <= 12; ++k) {
      if (poly.coefficients[k] != expected_cards[i][k])
        complain("row " + std::to_string(i + 1) + ": count at k=" + std::to_string(k) + " is " +
                 poly.coefficients[k].get_str() + ", expected " +
                 std::to_string(expected_cards[i][k]));
    }
  }
  if (rows[2].cardinality() != 462)
    complain("row 3 cardinality is " + rows[2].cardinality().get_str() + ", expected 462");

  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (!rows_disjoint(rows[i], rows[j]))
        complain("rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                 " are not disjoint");
    }
  }

  // Union check against direct enumeration of the (2,1,3)-transversouls.
  const Instance inst = reference_fixture_instance();
  std::vector<std::uint64_t> masks;
  for (const auto& g : inst.goals()) {
    std::uint64_t mask = 0;
    for (int p : g.members) mask |= std::uint64_t{1} << p;
    masks.push_back(mask);
  }
  const auto& alpha = inst.alpha()->thresholds;
  for (std::uint64_t x = 0; x < (1u << 12); ++x) {
    bool in_family = true;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (std::popcount(x & masks[i]) < alpha[i]) {
        in_family = false;
        break;
      }
    }
    int members = 0;
    for (const auto& row : rows) members += row.contains(x) ? 1 : 0;
    if (members != (in_family ? 1 : 0)) {
      complain("bitstring " + std::to_string(x) + " lies in " + std::to_string(members) +
               " rows but " + (in_family ? "is" : "is not") + " a transversoul");
    }
  }

  // Column sums against the frozen totals.
  for (std::size_t k = 0; k <= 12; ++k) {
    BigInt sum(0);
    for (const auto& row : rows) sum += count_polynomial(row).coefficients[k];
    if (sum != expected_total[k])
      complain("column k=" + std::to_string(k) + " sums to " + sum.get_str() + ", expected " +
               std::to_string(expected_total[k]));
  }
  return ok;
}

}  // namespace gccp
