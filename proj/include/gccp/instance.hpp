#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gccp/exactmath.hpp"

namespace gccp {

/// One goal: a named, nonempty set of coupon indices. Members are kept
/// sorted and duplicate-free.
struct Goal {
  std::string name;
  std::vector<int> members;

  bool operator==(const Goal&) const = default;
};

/// Per-goal multiplicity thresholds. thresholds[i] applies to goal i of the
/// instance the vector was built for; every entry is >= 1.
struct AlphaVector {
  std::vector<int> thresholds;

  bool operator==(const AlphaVector&) const = default;
};

/// A coupon universe together with its goal family. Immutable after
/// construction; coupon and goal order are significant and preserved.
class Instance {
 public:
  Instance(std::vector<std::string> coupons, std::vector<Goal> goals,
           std::optional<AlphaVector> alpha = std::nullopt);

  int width() const { return static_cast<int>(coupons_.size()); }
  int goal_count() const { return static_cast<int>(goals_.size()); }
  const std::vector<std::string>& coupons() const { return coupons_; }
  const std::vector<Goal>& goals() const { return goals_; }
  const std::optional<AlphaVector>& alpha() const { return alpha_; }

  int coupon_index(const std::string& name) const;  // -1 when unknown

  bool operator==(const Instance&) const = default;

 private:
  std::vector<std::string> coupons_;
  std::vector<Goal> goals_;
  std::optional<AlphaVector> alpha_;
};

/// Parses and validates the instance JSON document:
///   {"coupons": ["c1", ...],
///    "goals": {"G1": ["c1", "c2"], ...},
///    "alpha": {"G1": 2, ...}}          // optional, defaults to 1 per goal
/// Repeated coupons inside one goal are deduplicated; a repeated goal key
/// follows JSON last-wins. Everything else that is off-contract raises
/// ValidationError naming the offender.
Instance load_instance(const std::string& json_text);
Instance load_instance_file(const std::string& path);

/// Serializes back to the JSON document format; load_instance(serialize(x)) == x.
std::string serialize(const Instance& inst);

/// Drops duplicate goal sets and goal sets that contain another goal set.
/// The transversal family is unchanged. With alpha thresholds present, a
/// containing goal is only dropped when its threshold does not exceed the
/// contained goal's, which keeps the transversoul family intact as well.
Instance reduce_goals(const Instance& inst);

/// Models rational drawing probabilities by coupon replication: with common
/// denominator D, probability m_i/D becomes a block of m_i coupons forming
/// goal i. The result has w = D coupons and pairwise disjoint goals.
Instance build_partition_instance(const std::vector<BigRational>& probabilities);

/// The instance's alpha thresholds, or all-ones when none were given.
AlphaVector alpha_or_default(const Instance& inst);

}  // namespace gccp
