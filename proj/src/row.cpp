#include "gccp/row.hpp"

#include <algorithm>
#include <climits>
#include <queue>

#include "gccp/errors.hpp"

namespace gccp {

namespace {

// Multiplies two dense coefficient vectors.
std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<BigInt> group_factor(const ConstraintGroup& g) {
  const long m = static_cast<long>(g.positions.size());
  const long s = g.threshold;
  std::vector<BigInt> f(static_cast<std::size_t>(m) + 1, BigInt(0));
  if (g.kind == GroupKind::AtLeast) {
    for (long j = s; j <= m; ++j) f[static_cast<std::size_t>(j)] = binomial(m, j);
  } else {
    f[static_cast<std::size_t>(s)] = binomial(m, s);
  }
  return f;
}

// ---- exact disjointness decision --------------------------------------
//
// Two rows share a member iff ones can be distributed over the "cells" cut
// out by overlaying both rows' groups so that every group meets its
// threshold demand. That is a transportation feasibility problem; solved as
// a max-flow with lower bounds on the (tiny) group-by-group network.

struct FlowEdge {
  int to;
  long cap;
  std::size_t rev;
};

class MaxFlow {
 public:
  explicit MaxFlow(int n) : adj_(static_cast<std::size_t>(n)) {}

  void add_edge(int u, int v, long cap) {
    adj_[static_cast<std::size_t>(u)].push_back({v, cap, adj_[static_cast<std::size_t>(v)].size()});
    adj_[static_cast<std::size_t>(v)].push_back(
        {u, 0, adj_[static_cast<std::size_t>(u)].size() - 1});
  }

  long run(int s, int t) {
    long total = 0;
    for (;;) {
      // BFS for an augmenting path (Edmonds-Karp; the graphs here are tiny).
      std::vector<int> prev_node(adj_.size(), -1);
      std::vector<std::size_t> prev_edge(adj_.size());
      std::queue<int> queue;
      queue.push(s);
      prev_node[static_cast<std::size_t>(s)] = s;
      while (!queue.empty() && prev_node[static_cast<std::size_t>(t)] < 0) {
        const int u = queue.front();
        queue.pop();
        for (std::size_t e = 0; e < adj_[static_cast<std::size_t>(u)].size(); ++e) {
          const auto& edge = adj_[static_cast<std::size_t>(u)][e];
          if (edge.cap > 0 && prev_node[static_cast<std::size_t>(edge.to)] < 0) {
            prev_node[static_cast<std::size_t>(edge.to)] = u;
            prev_edge[static_cast<std::size_t>(edge.to)] = e;
            queue.push(edge.to);
          }
        }
      }
      if (prev_node[static_cast<std::size_t>(t)] < 0) return total;
      long bottleneck = LONG_MAX;
      for (int v = t; v != s; v = prev_node[static_cast<std::size_t>(v)]) {
        const int u = prev_node[static_cast<std::size_t>(v)];
        bottleneck = std::min(
            bottleneck, adj_[static_cast<std::size_t>(u)][prev_edge[static_cast<std::size_t>(v)]].cap);
      }
      for (int v = t; v != s; v = prev_node[static_cast<std::size_t>(v)]) {
        const int u = prev_node[static_cast<std::size_t>(v)];
        auto& edge = adj_[static_cast<std::size_t>(u)][prev_edge[static_cast<std::size_t>(v)]];
        edge.cap -= bottleneck;
        adj_[static_cast<std::size_t>(edge.to)][edge.rev].cap += bottleneck;
      }
      total += bottleneck;
    }
  }

 private:
  std::vector<std::vector<FlowEdge>> adj_;
};

// Feasibility of a flow network with per-edge lower bounds.
class BoundedFlow {
 public:
  explicit BoundedFlow(int n) : n_(n), excess_(static_cast<std::size_t>(n), 0) {}

  void add_edge(int u, int v, long lower, long upper) {
    if (lower > upper) {
      infeasible_ = true;
      return;
    }
    edges_.push_back({u, v, upper - lower});
    excess_[static_cast<std::size_t>(v)] += lower;
    excess_[static_cast<std::size_t>(u)] -= lower;
  }

  bool feasible(int source, int sink) {
    if (infeasible_) return false;
    const int super_source = n_, super_sink = n_ + 1;
    MaxFlow flow(n_ + 2);
    for (const auto& [u, v, cap] : edges_) flow.add_edge(u, v, cap);
    flow.add_edge(sink, source, LONG_MAX / 2);  // close the circulation
    long need = 0;
    for (int v = 0; v < n_; ++v) {
      const long e = excess_[static_cast<std::size_t>(v)];
      if (e > 0) {
        flow.add_edge(super_source, v, e);
        need += e;
      } else if (e < 0) {
        flow.add_edge(v, super_sink, -e);
      }
    }
    return flow.run(super_source, super_sink) == need;
  }

 private:
  struct Edge {
    int u, v;
    long cap;
  };
  int n_;
  std::vector<long> excess_;
  std::vector<Edge> edges_;
  bool infeasible_ = false;
};

}  // namespace

Row::Row(const RowSpec& spec) {
  if (spec.width < 1) throw ValidationError("row width must be positive");
  cells_.assign(static_cast<std::size_t>(spec.width), kDontCare);
  auto place = [&](int pos, std::int16_t code) {
    if (pos < 0 || pos >= spec.width) throw ValidationError("row position out of range");
    auto& cell = cells_[static_cast<std::size_t>(pos)];
    if (cell != kDontCare) throw ValidationError("row position assigned twice");
    cell = code;
  };
  for (int p : spec.ones) place(p, kOne);
  for (int p : spec.zeros) place(p, kZero);

  for (const auto& g : spec.groups) {
    if (g.threshold < 1) throw ValidationError("group threshold must be >= 1");
    const int m = static_cast<int>(g.positions.size());
    if (m < g.threshold) throw ValidationError("group smaller than its threshold");
    if (m == g.threshold) {
      // "at least s of s" and "exactly s of s" both mean all ones here.
      for (int p : g.positions) place(p, kOne);
      continue;
    }
    const auto id = static_cast<std::int16_t>(groups_.size());
    ConstraintGroup stored{g.kind, g.threshold, g.positions};
    std::sort(stored.positions.begin(), stored.positions.end());
    for (int p : stored.positions) place(p, id);
    groups_.push_back(std::move(stored));
  }
}

Row Row::all_dontcare(int width) {
  return Row(RowSpec{width, {}, {}, {}});
}

bool Row::contains(std::uint64_t bits) const {
  const int w = width();
  if (w > 64) throw ValidationError("bitstring membership is limited to width 64");
  if (w < 64 && (bits >> w) != 0) throw ValidationError("bitstring wider than row");
  std::vector<int> group_ones(groups_.size(), 0);
  for (int p = 0; p < w; ++p) {
    const bool one = (bits >> p) & 1u;
    const int c = cell(p);
    if (c == kOne && !one) return false;
    if (c == kZero && one) return false;
    if (c >= 0 && one) ++group_ones[static_cast<std::size_t>(c)];
  }
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (groups_[g].kind == GroupKind::AtLeast) {
      if (group_ones[g] < groups_[g].threshold) return false;
    } else if (group_ones[g] != groups_[g].threshold) {
      return false;
    }
  }
  return true;
}

BigInt Row::cardinality() const {
  long dontcares = 0;
  for (int p = 0; p < width(); ++p) {
    if (cell(p) == kDontCare) ++dontcares;
  }
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(dontcares));
  for (const auto& g : groups_) {
    const long m = static_cast<long>(g.positions.size());
    if (g.kind == GroupKind::Exactly) {
      result *= binomial(m, g.threshold);
    } else {
      BigInt sum(0);
      for (long j = g.threshold; j <= m; ++j) sum += binomial(m, j);
      result *= sum;
    }
  }
  return result;
}

std::string Row::to_string() const {
  std::string out;
  for (int p = 0; p < width(); ++p) {
    if (p > 0) out += ' ';
    const int c = cell(p);
    if (c == kZero) {
      out += '0';
    } else if (c == kOne) {
      out += '1';
    } else if (c == kDontCare) {
      out += '2';
    } else {
      const auto& g = groups_[static_cast<std::size_t>(c)];
      out += g.kind == GroupKind::AtLeast ? 'e' : 'g';
      out += std::string(static_cast<std::size_t>(c), '\'');
      if (g.kind == GroupKind::Exactly || g.threshold > 1)
        out += "(" + std::to_string(g.threshold) + ")";
    }
  }
  return out;
}

CountPolynomial count_polynomial(const Row& row) {
  long ones = 0, dontcares = 0;
  for (int p = 0; p < row.width(); ++p) {
    if (row.cell(p) == Row::kOne) ++ones;
    if (row.cell(p) == Row::kDontCare) ++dontcares;
  }
  std::vector<BigInt> poly{BigInt(1)};
  for (const auto& g : row.groups()) poly = poly_mul(poly, group_factor(g));
  if (dontcares > 0) {
    std::vector<BigInt> dc(static_cast<std::size_t>(dontcares) + 1);
    for (long j = 0; j <= dontcares; ++j) dc[static_cast<std::size_t>(j)] = binomial(dontcares, j);
    poly = poly_mul(poly, dc);
  }
  CountPolynomial result;
  result.coefficients.assign(static_cast<std::size_t>(row.width()) + 1, BigInt(0));
  for (std::size_t i = 0; i < poly.size(); ++i)
    result.coefficients[i + static_cast<std::size_t>(ones)] = std::move(poly[i]);
  return result;
}

bool rows_disjoint(const Row& a, const Row& b) {
  if (a.width() != b.width()) throw ValidationError("rows_disjoint: width mismatch");
  const int w = a.width();
  for (int p = 0; p < w; ++p) {
    const int ca = a.cell(p), cb = b.cell(p);
    if ((ca == Row::kOne && cb == Row::kZero) || (ca == Row::kZero && cb == Row::kOne))
      return true;
  }

  const int pa = static_cast<int>(a.groups().size());
  const int pb = static_cast<int>(b.groups().size());
  // Cell capacities: positions usable as ones, bucketed by which group of
  // each row they belong to (index pa / pb = "no group on that side").
  std::vector<std::vector<long>> cap(static_cast<std::size_t>(pa) + 1,
                                     std::vector<long>(static_cast<std::size_t>(pb) + 1, 0));
  std::vector<long> forced_a(static_cast<std::size_t>(pa), 0), forced_b(static_cast<std::size_t>(pb), 0);
  for (int p = 0; p < w; ++p) {
    const int ca = a.cell(p), cb = b.cell(p);
    if (ca == Row::kZero || cb == Row::kZero) continue;  // can never be a one
    if (ca == Row::kOne || cb == Row::kOne) {
      // Forced one; counts toward any group it sits in.
      if (ca >= 0) ++forced_a[static_cast<std::size_t>(ca)];
      if (cb >= 0) ++forced_b[static_cast<std::size_t>(cb)];
      continue;
    }
    const std::size_t i = ca >= 0 ? static_cast<std::size_t>(ca) : static_cast<std::size_t>(pa);
    const std::size_t j = cb >= 0 ? static_cast<std::size_t>(cb) : static_cast<std::size_t>(pb);
    ++cap[i][j];
  }

  // Demand interval per group after accounting for forced ones.
  auto demand = [](const ConstraintGroup& g, long forced, long avail,
                   long& lo, long& hi) -> bool {
    if (g.kind == GroupKind::Exactly) {
      lo = hi = g.threshold - forced;
      if (lo < 0) return false;
    } else {
      lo = std::max(0L, static_cast<long>(g.threshold) - forced);
      hi = avail;
    }
    return lo <= avail;
  };

  const int source = 0, sink = 1;
  BoundedFlow net(2 + pa + pb);
  auto a_node = [&](int i) { return 2 + i; };
  auto b_node = [&](int j) { return 2 + pa + j; };

  for (int i = 0; i < pa; ++i) {
    long avail = 0;
    for (int j = 0; j <= pb; ++j) avail += cap[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    long lo, hi;
    if (!demand(a.groups()[static_cast<std::size_t>(i)], forced_a[static_cast<std::size_t>(i)], avail, lo, hi))
      return true;
    net.add_edge(source, a_node(i), lo, hi);
    for (int j = 0; j < pb; ++j)
      net.add_edge(a_node(i), b_node(j), 0, cap[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    net.add_edge(a_node(i), sink, 0, cap[static_cast<std::size_t>(i)][static_cast<std::size_t>(pb)]);
  }
  for (int j = 0; j < pb; ++j) {
    long avail = 0;
    for (int i = 0; i <= pa; ++i) avail += cap[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    long lo, hi;
    if (!demand(b.groups()[static_cast<std::size_t>(j)], forced_b[static_cast<std::size_t>(j)], avail, lo, hi))
      return true;
    net.add_edge(b_node(j), sink, lo, hi);
    net.add_edge(source, b_node(j), 0, cap[static_cast<std::size_t>(pa)][static_cast<std::size_t>(j)]);
  }

  return !net.feasible(source, sink);
}

}  // namespace gccp
