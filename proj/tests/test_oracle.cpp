#include <doctest.h>

#include <cmath>

#include "gccp/errors.hpp"
#include "gccp/oracle.hpp"
#include "gccp/probability.hpp"
#include "support/oracles.hpp"

using namespace gccp;

namespace {
const std::string kFixtures = GCCP_FIXTURES_DIR;

bool within_stderr(double observed, const BigRational& exact, double se, double sigmas) {
  return std::abs(observed - exact.get_d()) <= sigmas * se;
}
}  // namespace

TEST_CASE("brute tau on the toy instance") {
  const Instance inst = load_instance_file(kFixtures + "/toy.json");
  const TauVector tau = brute_tau(inst);
  const long expected[] = {0, 0, 7, 37, 63, 55, 28, 8, 1};
  for (int k = 0; k <= 8; ++k) CHECK(tau.counts[static_cast<std::size_t>(k)] == expected[k]);
}

TEST_CASE("brute tau closed forms") {
  // single goal of size m: tau_k = C(w,k) - C(w-m,k)
  const Instance inst = load_instance(
      R"({"coupons":["a","b","c","d","e","f"],"goals":{"G":["a","b","c"]}})");
  const TauVector tau = brute_tau(inst);
  for (int k = 0; k <= 6; ++k)
    CHECK(tau.counts[static_cast<std::size_t>(k)] == binomial(6, k) - binomial(3, k));

  // no goals: every subset counts
  const Instance free = load_instance(R"({"coupons":["a","b","c"],"goals":{}})");
  const TauVector all = brute_tau(free);
  for (int k = 0; k <= 3; ++k) CHECK(all.counts[static_cast<std::size_t>(k)] == binomial(3, k));
}

TEST_CASE("brute tau width cap") {
  std::vector<std::string> coupons;
  for (int i = 0; i < 25; ++i) coupons.push_back("c" + std::to_string(i));
  const Instance inst(coupons, {Goal{"G", {0}}});
  CHECK_THROWS_AS(brute_tau(inst), ResourceLimitError);
}

TEST_CASE("brute transversoul counts") {
  const Instance inst = load_instance_file(kFixtures + "/transversoul.json");
  const TVector counts = brute_transversouls(inst, *inst.alpha());
  const long expected[] = {0, 0, 0, 1, 41, 274, 616, 699, 481, 219, 66, 12, 1};
  for (int k = 0; k <= 12; ++k) CHECK(counts.counts[static_cast<std::size_t>(k)] == expected[k]);

  // alpha_i = |G_i| forces supersets of the union of all goals
  const Instance pair = load_instance(
      R"({"coupons":["a","b","c"],"goals":{"G":["a","b"]},"alpha":{"G":2}})");
  CHECK(brute_transversouls(pair, *pair.alpha()).counts ==
        std::vector<BigInt>{BigInt(0), BigInt(0), BigInt(1), BigInt(1)});
}

TEST_CASE("simulation is reproducible and seed-sensitive") {
  const Instance inst = load_instance_file(kFixtures + "/toy.json");
  const SimSummary a = simulate(inst, false, std::nullopt, 20000, 7);
  const SimSummary b = simulate(inst, false, std::nullopt, 20000, 7);
  const SimSummary c = simulate(inst, false, std::nullopt, 20000, 8);
  CHECK(a.mean == b.mean);
  CHECK(a.sample_variance == b.sample_variance);
  CHECK(a.mean != c.mean);
  CHECK(a.trials == 20000);
  CHECK(a.standard_error == doctest::Approx(std::sqrt(a.sample_variance / 20000)));
}

TEST_CASE("simulation matches the exact expectations on the toy instance") {
  const Instance inst = load_instance_file(kFixtures + "/toy.json");
  const GccpReport report = make_report(inst, brute_tau(inst));

  const SimSummary without = simulate(inst, false, std::nullopt, 100000, 11);
  CHECK(within_stderr(without.mean, report.expected_no_replacement, without.standard_error, 4));
  CHECK(without.cap_hits == 0);

  const SimSummary with = simulate(inst, true, std::nullopt, 100000, 12);
  CHECK(within_stderr(with.mean, report.expected_with_replacement, with.standard_error, 4));
  CHECK(with.cap_hits == 0);
  // sample variance should land near the exact variance too
  CHECK(std::abs(with.sample_variance - report.variance_with_replacement.get_d()) < 0.25);
}

TEST_CASE("simulation honors alpha thresholds") {
  const Instance inst = load_instance_file(kFixtures + "/transversoul.json");
  const SimSummary sim = simulate(inst, false, inst.alpha(), 60000, 5);
  // exact expected stopping draw from the Q-vector
  const TVector counts = count_transversouls(inst, *inst.alpha());
  const QVector q = success_probabilities(counts, inst.width());
  const BigRational exact = expected_length_no_replacement(q);
  CHECK(within_stderr(sim.mean, exact, sim.standard_error, 4));

  AlphaVector excessive{{6, 1, 3}};
  CHECK_THROWS_AS(simulate(inst, false, excessive, 10, 1), ValidationError);
}

TEST_CASE("degenerate simulation: every coupon serves the only goal") {
  const Instance inst = load_instance(R"({"coupons":["a","b"],"goals":{"G":["a","b"]}})");
  const SimSummary sim = simulate(inst, true, std::nullopt, 5000, 3);
  CHECK(sim.mean == 1.0);
  CHECK(sim.sample_variance == 0.0);
}

TEST_CASE("without replacement never draws more than w coupons") {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = testing::random_instance(rng, 8, 4);
    const SimSummary sim = simulate(inst, false, std::nullopt, 4000, trial);
    CHECK(sim.mean <= inst.width());
    CHECK(sim.cap_hits == 0);
  }
}
