#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gccp/exactmath.hpp"

namespace gccp {

/// Wildcard flavours: AtLeast(s) admits bit patterns with >= s ones on the
/// group's positions, Exactly(s) admits patterns with exactly s ones.
enum class GroupKind : std::uint8_t { AtLeast, Exactly };

struct ConstraintGroup {
  GroupKind kind;
  int threshold;               // s >= 1
  std::vector<int> positions;  // sorted, pairwise disjoint across groups

  bool operator==(const ConstraintGroup&) const = default;
};

/// Construction recipe for a Row: literal positions plus constraint groups;
/// every unmentioned position is a don't-care.
struct RowSpec {
  int width = 0;
  std::vector<int> ones;
  std::vector<int> zeros;
  std::vector<ConstraintGroup> groups;
};

/// A {0,1,2,e(s),g(s)}-valued word over the coupon positions, encoding a set
/// of bitstrings of the row's width. Immutable after construction.
///
/// Construction normalizes: an AtLeast or Exactly group covering exactly its
/// threshold's worth of positions means "all ones here" and is dissolved into
/// literals. AtLeast groups with fewer positions than the threshold (never
/// satisfiable) are rejected.
class Row {
 public:
  // Per-position cell codes; values >= 0 index into groups().
  static constexpr int kZero = -1;
  static constexpr int kOne = -2;
  static constexpr int kDontCare = -3;

  explicit Row(const RowSpec& spec);
  static Row all_dontcare(int width);

  int width() const { return static_cast<int>(cells_.size()); }
  int cell(int pos) const { return cells_[static_cast<std::size_t>(pos)]; }
  const std::vector<ConstraintGroup>& groups() const { return groups_; }

  /// Membership of a bitstring (bit p of `bits` = position p). Requires
  /// width <= 64 and no bits set at or beyond width().
  bool contains(std::uint64_t bits) const;

  /// Number of bitstrings the row encodes.
  BigInt cardinality() const;

  /// Symbolic rendering, e.g. "2 e 1 e e e 2 2"; primes distinguish
  /// groups, thresholds > 1 are written e(2), g(3), ...
  std::string to_string() const;

  bool operator==(const Row&) const = default;

 private:
  Row() = default;
  std::vector<std::int16_t> cells_;
  std::vector<ConstraintGroup> groups_;
};

/// Coefficients c_0..c_w of the row's counting polynomial; c_k is the number
/// of k-element members of the row.
struct CountPolynomial {
  std::vector<BigInt> coefficients;
};

/// Product of the per-symbol factors: x for a literal one, 1+x for a
/// don't-care, sum_{j=s..m} C(m,j) x^j for an AtLeast group of size m, and
/// C(m,s) x^s for an Exactly group.
CountPolynomial count_polynomial(const Row& row);

/// True iff no bitstring is a member of both rows; decided exactly for all
/// widths and group kinds. Throws ValidationError on width mismatch.
bool rows_disjoint(const Row& a, const Row& b);

}  // namespace gccp
