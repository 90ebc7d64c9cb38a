#include "gccp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "gccp/errors.hpp"

namespace gccp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Instance::Instance(std::vector<std::string> coupons, std::vector<Goal> goals,
                   std::optional<AlphaVector> alpha)
    : coupons_(std::move(coupons)), goals_(std::move(goals)), alpha_(std::move(alpha)) {
  std::unordered_set<std::string> seen;
  for (const auto& c : coupons_) {
    if (!seen.insert(c).second) throw ValidationError("duplicate coupon id '" + c + "'");
  }
  seen.clear();
  const int w = width();
  for (auto& g : goals_) {
    if (!seen.insert(g.name).second) throw ValidationError("duplicate goal name '" + g.name + "'");
    g.members = sorted_unique(std::move(g.members));
    if (g.members.empty()) throw ValidationError("empty goal '" + g.name + "'");
    if (g.members.front() < 0 || g.members.back() >= w)
      throw ValidationError("goal '" + g.name + "': coupon index out of range");
  }
  if (alpha_) {
    if (alpha_->thresholds.size() != goals_.size())
      throw ValidationError("alpha vector length does not match goal count");
    for (std::size_t i = 0; i < goals_.size(); ++i) {
      const int a = alpha_->thresholds[i];
      if (a < 1) throw ValidationError("goal '" + goals_[i].name + "': alpha must be >= 1");
      if (a > static_cast<int>(goals_[i].members.size()))
        throw ValidationError("goal '" + goals_[i].name +
                              "': alpha exceeds goal size, no transversoul exists");
    }
  }
}

int Instance::coupon_index(const std::string& name) const {
  const auto it = std::find(coupons_.begin(), coupons_.end(), name);
  return it == coupons_.end() ? -1 : static_cast<int>(it - coupons_.begin());
}

Instance load_instance(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("coupons") || !doc.contains("goals"))
    throw ValidationError("instance document must be an object with 'coupons' and 'goals'");
  if (!doc["coupons"].is_array()) throw ValidationError("'coupons' must be an array of strings");
  if (!doc["goals"].is_object()) throw ValidationError("'goals' must be an object");

  std::vector<std::string> coupons;
  std::unordered_map<std::string, int> index;
  for (const auto& c : doc["coupons"]) {
    if (!c.is_string()) throw ValidationError("'coupons' must be an array of strings");
    const std::string name = c.get<std::string>();
    if (!index.emplace(name, static_cast<int>(coupons.size())).second)
      throw ValidationError("duplicate coupon id '" + name + "'");
    coupons.push_back(name);
  }

  std::vector<Goal> goals;
  for (const auto& [name, value] : doc["goals"].items()) {
    if (!value.is_array()) throw ValidationError("goal '" + name + "' must be an array");
    Goal g{name, {}};
    for (const auto& member : value) {
      if (!member.is_string()) throw ValidationError("goal '" + name + "' must list coupon ids");
      const auto it = index.find(member.get<std::string>());
      if (it == index.end())
        throw ValidationError("goal '" + name + "': unknown coupon '" +
                              member.get<std::string>() + "'");
      g.members.push_back(it->second);
    }
    if (g.members.empty()) throw ValidationError("empty goal '" + name + "'");
    goals.push_back(std::move(g));
  }

  std::optional<AlphaVector> alpha;
  if (doc.contains("alpha")) {
    if (!doc["alpha"].is_object()) throw ValidationError("'alpha' must be an object");
    AlphaVector av;
    av.thresholds.assign(goals.size(), 1);
    for (const auto& [name, value] : doc["alpha"].items()) {
      const auto it = std::find_if(goals.begin(), goals.end(),
                                   [&](const Goal& g) { return g.name == name; });
      if (it == goals.end()) throw ValidationError("alpha names unknown goal '" + name + "'");
      if (!value.is_number_integer() || value.get<long>() < 1)
        throw ValidationError("alpha for goal '" + name + "' must be a positive integer");
      av.thresholds[static_cast<std::size_t>(it - goals.begin())] = value.get<int>();
    }
    alpha = std::move(av);
  }
  return Instance(std::move(coupons), std::move(goals), std::move(alpha));
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

std::string serialize(const Instance& inst) {
  ordered_json doc;
  doc["coupons"] = inst.coupons();
  ordered_json goals = ordered_json::object();
  for (const auto& g : inst.goals()) {
    ordered_json members = ordered_json::array();
    for (int m : g.members) members.push_back(inst.coupons()[static_cast<std::size_t>(m)]);
    goals[g.name] = std::move(members);
  }
  doc["goals"] = std::move(goals);
  if (inst.alpha()) {
    ordered_json alpha = ordered_json::object();
    for (std::size_t i = 0; i < inst.goals().size(); ++i)
      alpha[inst.goals()[i].name] = inst.alpha()->thresholds[i];
    doc["alpha"] = std::move(alpha);
  }
  return doc.dump(2);
}

Instance reduce_goals(const Instance& inst) {
  const auto& goals = inst.goals();
  const std::size_t h = goals.size();
  const std::vector<int> alpha =
      inst.alpha() ? inst.alpha()->thresholds : std::vector<int>(h, 1);

  // keep[i] is cleared when goal i is a duplicate of an earlier kept goal or a
  // strict superset of any other goal (with a threshold no larger than its).
  std::vector<bool> keep(h, true);
  auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h && keep[i]; ++j) {
      if (i == j) continue;
      if (goals[i].members == goals[j].members) {
        if (alpha[j] >= alpha[i] && (alpha[j] > alpha[i] || j < i)) keep[i] = false;
      } else if (contains(goals[i].members, goals[j].members) && alpha[i] <= alpha[j]) {
        keep[i] = false;
      }
    }
  }

  std::vector<Goal> kept;
  std::vector<int> kept_alpha;
  for (std::size_t i = 0; i < h; ++i) {
    if (!keep[i]) continue;
    kept.push_back(goals[i]);
    kept_alpha.push_back(alpha[i]);
  }
  std::optional<AlphaVector> alpha_out;
  if (inst.alpha()) alpha_out = AlphaVector{std::move(kept_alpha)};
  return Instance(inst.coupons(), std::move(kept), std::move(alpha_out));
}

Instance build_partition_instance(const std::vector<BigRational>& probabilities) {
  if (probabilities.empty()) throw ValidationError("no probabilities given");
  BigRational total(0);
  BigInt denom(1);
  for (const auto& p : probabilities) {
    if (p <= 0) throw ValidationError("probabilities must be positive");
    total += p;
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), p.get_den().get_mpz_t());
  }
  if (total != 1) throw ValidationError("probabilities must sum to 1");
  if (denom > 1000000) throw ResourceLimitError("common denominator too large: " + denom.get_str());

  const long w = denom.get_si();
  std::vector<std::string> coupons;
  coupons.reserve(static_cast<std::size_t>(w));
  for (long i = 1; i <= w; ++i) coupons.push_back("c" + std::to_string(i));

  std::vector<Goal> goals;
  long offset = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const BigInt count = probabilities[i].get_num() * (denom / probabilities[i].get_den());
    const long m = count.get_si();
    Goal g{"G" + std::to_string(i + 1), {}};
    for (long j = 0; j < m; ++j) g.members.push_back(static_cast<int>(offset + j));
    offset += m;
    goals.push_back(std::move(g));
  }
  return Instance(std::move(coupons), std::move(goals));
}

AlphaVector alpha_or_default(const Instance& inst) {
  if (inst.alpha()) return *inst.alpha();
  return AlphaVector{std::vector<int>(static_cast<std::size_t>(inst.goal_count()), 1)};
}

}  // namespace gccp
