#include <doctest.h>

#include <random>

#include "gccp/errors.hpp"
#include "gccp/instance.hpp"
#include "gccp/oracle.hpp"
#include "gccp/probability.hpp"
#include "gccp/transversal.hpp"
#include "support/oracles.hpp"

using namespace gccp;

namespace {
const std::string kFixtures = GCCP_FIXTURES_DIR;

Instance toy() { return load_instance_file(kFixtures + "/toy.json"); }

QVector all_hit_q(int w) {  // q_k = 1 for k >= 1: every coupon fulfils every goal
  QVector q;
  q.values.assign(static_cast<std::size_t>(w) + 1, BigRational(1));
  q.values[0] = 0;
  return q;
}
}  // namespace

TEST_CASE("success probabilities of the toy instance") {
  const Instance inst = toy();
  const QVector q = success_probabilities(tau_vector(inst), inst.width());
  CHECK(q.values[0] == 0);
  CHECK(q.values[1] == 0);
  CHECK(q.values[2] == make_rational(1, 4));
  CHECK(q.values[3] == make_rational(37, 56));
  CHECK(q.values[4] == make_rational(9, 10));
  CHECK(q.values[5] == make_rational(55, 56));
  CHECK(q.values[6] == 1);
  CHECK(q.values[8] == 1);
}

TEST_CASE("probability vector validation") {
  TauVector bogus;
  bogus.counts = {BigInt(0), BigInt(5), BigInt(0)};  // tau_1 > C(2,1)
  CHECK_THROWS_AS(success_probabilities(bogus, 2), ValidationError);
}

TEST_CASE("expected lengths of the toy instance") {
  const Instance inst = toy();
  const QVector q = success_probabilities(tau_vector(inst), inst.width());
  CHECK(expected_length_no_replacement(q) == make_rational(449, 140));
  CHECK(expected_length_with_replacement(q) == make_rational(59, 15));
}

TEST_CASE("variances of the toy instance") {
  const Instance inst = toy();
  const GccpReport report = make_report(inst, tau_vector(inst));
  CHECK(report.variance_with_replacement == make_rational(836, 225));
  CHECK(report.variance_no_replacement == make_rational(18339, 19600));
}

TEST_CASE("degenerate instance where every coupon fulfils every goal") {
  const QVector q = all_hit_q(5);
  CHECK(expected_length_no_replacement(q) == 1);
  CHECK(expected_length_with_replacement(q) == 1);
  CHECK(variance_with_replacement(q, BigRational(1)) == 0);
  CHECK(variance_no_replacement(q, BigRational(1)) == 0);
}

TEST_CASE("classic full collection: singleton goals") {
  // w singleton goals: q_k = 0 below w, lengths w and wH(w)
  for (int w : {2, 5, 8}) {
    std::vector<BigRational> probs(static_cast<std::size_t>(w), make_rational(1, w));
    const Instance inst = build_partition_instance(probs);
    const GccpReport report = make_report(inst, tau_vector(inst));
    CHECK(report.expected_no_replacement == w);
    CHECK(report.variance_no_replacement == 0);
    CHECK(report.expected_with_replacement == BigRational(w) * harmonic(w));
  }
}

TEST_CASE("two-coupon classic collection has variance 2") {
  // lengths: 1 + Geometric(1/2); E = 3, Var = (1-p)/p^2 = 2
  const Instance inst = build_partition_instance({make_rational(1, 2), make_rational(1, 2)});
  const GccpReport report = make_report(inst, tau_vector(inst));
  CHECK(report.expected_with_replacement == 3);
  CHECK(report.variance_with_replacement == 2);
}

TEST_CASE("q is monotone with pinned endpoints on random instances") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance(rng, 12, 6);
    const QVector q = success_probabilities(tau_vector(inst), inst.width());
    CHECK(q.values.front() == 0);
    CHECK(q.values.back() == 1);
    for (std::size_t k = 1; k < q.values.size(); ++k) CHECK(q.values[k - 1] <= q.values[k]);
  }
}

TEST_CASE("length orderings on random instances") {
  std::mt19937_64 rng(607);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_instance(rng, 10, 5);
    const int w = inst.width();
    const QVector q = success_probabilities(tau_vector(inst), w);
    const BigRational without = expected_length_no_replacement(q);
    const BigRational with = expected_length_with_replacement(q);
    CHECK(without >= 1);
    CHECK(without <= with);
    CHECK(with <= BigRational(w) * harmonic(w));
  }
}

TEST_CASE("the three with-replacement forms agree by construction") {
  // expected_length_with_replacement throws if its three forms disagree;
  // exercising it across random instances is the regression guard.
  std::mt19937_64 rng(608);
  for (int trial = 0; trial < 150; ++trial) {
    const Instance inst = testing::random_instance(rng, 11, 5);
    const QVector q = success_probabilities(tau_vector(inst), inst.width());
    CHECK_NOTHROW(expected_length_with_replacement(q));
  }
}

TEST_CASE("series bracket encloses the closed form and tightens") {
  const Instance inst = toy();
  const TauVector tau = tau_vector(inst);
  const QVector q = success_probabilities(tau, inst.width());
  const BigRational exact = expected_length_with_replacement(q);

  BigRational previous_gap(-1);
  for (int terms : {8, 20, 50, 200}) {
    const SeriesBracket bracket = replacement_series_bracket(tau, inst.width(), terms);
    CHECK(bracket.lower <= exact);
    CHECK(exact <= bracket.upper);
    const BigRational gap = bracket.upper - bracket.lower;
    if (previous_gap >= 0) CHECK(gap < previous_gap);
    previous_gap = gap;
  }
  const SeriesBracket tight = replacement_series_bracket(tau, inst.width(), 200);
  CHECK(tight.upper - tight.lower < make_rational(1, 1000000));

  CHECK_THROWS_AS(replacement_series_bracket(tau, inst.width(), 4), ValidationError);
}

TEST_CASE("series bracket on every small random instance") {
  std::mt19937_64 rng(609);
  for (int trial = 0; trial < 25; ++trial) {
    const Instance inst = testing::random_instance(rng, 8, 4);
    const TauVector tau = tau_vector(inst);
    const QVector q = success_probabilities(tau, inst.width());
    const BigRational exact = expected_length_with_replacement(q);
    for (int terms = inst.width(); terms <= inst.width() + 40; terms += 8) {
      const SeriesBracket bracket = replacement_series_bracket(tau, inst.width(), terms);
      CHECK(bracket.lower <= exact);
      CHECK(exact <= bracket.upper);
    }
  }
}

TEST_CASE("single-coupon trials always finish immediately") {
  const Instance inst = build_partition_instance({BigRational(1)});
  const TauVector tau = tau_vector(inst);
  const QVector q = success_probabilities(tau, 1);
  CHECK(expected_length_with_replacement(q) == 1);
  const SeriesBracket bracket = replacement_series_bracket(tau, 1, 30);
  CHECK(bracket.lower <= 1);
  CHECK(bracket.upper >= 1);
}

TEST_CASE("goal expectations on the toy instance") {
  const Instance inst = toy();
  const GoalExpectations with = goal_expectations(inst, 4, true);
  // goal sizes 3, 4, 4, 5 over w = 8
  CHECK(with.per_goal[0] == 1 - make_rational(625, 4096));
  CHECK(with.per_goal[1] == make_rational(15, 16));
  CHECK(with.per_goal[3] == 1 - make_rational(81, 4096));
  CHECK(to_fixed(with.total, 1) == "3.7");

  const GoalExpectations zero = goal_expectations(inst, 0, true);
  CHECK(zero.total == 0);
  const GoalExpectations zero_nr = goal_expectations(inst, 0, false);
  CHECK(zero_nr.total == 0);

  const GoalExpectations full = goal_expectations(inst, 8, false);
  for (const auto& e : full.per_goal) CHECK(e == 1);
  CHECK(full.total == 4);
}

TEST_CASE("goal expectations without replacement agree with brute force") {
  // P(goal missed in n draws) = C(w-m, n)/C(w, n); check by enumeration
  const Instance inst = load_instance(
      R"({"coupons":["a","b","c","d","e"],"goals":{"G1":["a","b"],"G2":["c"]}})");
  for (long n = 0; n <= 5; ++n) {
    const GoalExpectations expected = goal_expectations(inst, n, false);
    for (std::size_t i = 0; i < 2; ++i) {
      long hits = 0, total = 0;
      for (std::uint64_t x = 0; x < 32; ++x) {
        if (std::popcount(x) != n) continue;
        ++total;
        std::uint64_t mask = 0;
        for (int p : inst.goals()[i].members) mask |= std::uint64_t{1} << p;
        if (x & mask) ++hits;
      }
      CHECK(expected.per_goal[i] == make_rational(hits, total));
    }
  }
}

TEST_CASE("alpha success probabilities") {
  const Instance inst = load_instance_file(kFixtures + "/transversoul.json");
  const TVector counts = count_transversouls(inst, *inst.alpha());
  const QVector q = success_probabilities(counts, inst.width());
  CHECK(q.values[3] == make_rational(1, 220));
  CHECK(to_fixed(q.values[3], 3) == "0.005");
  CHECK(q.values[6] == make_rational(2, 3));
  CHECK(to_fixed(q.values[6], 3) == "0.667");
  CHECK(to_fixed(q.values[4], 3) == "0.083");
  CHECK(to_fixed(q.values[5], 3) == "0.346");
  CHECK(to_fixed(q.values[7], 3) == "0.883");
  CHECK(to_fixed(q.values[8], 3) == "0.972");
  CHECK(to_fixed(q.values[9], 3) == "0.995");
  CHECK(q.values[10] == 1);
  CHECK(q.values[11] == 1);
  CHECK(q.values[12] == 1);

  // all-ones alpha reduces to the plain q-vector
  const AlphaVector ones{{1, 1, 1}};
  const Instance plain(inst.coupons(), inst.goals());
  CHECK(success_probabilities(count_transversouls(plain, ones), 12).values ==
        success_probabilities(tau_vector(plain), 12).values);
}

TEST_CASE("laplace distribution of distinct coupons") {
  for (int w = 1; w <= 10; ++w) {
    for (long n = 0; n <= 10; ++n) {
      BigRational total(0);
      for (int k = 0; k <= w; ++k) total += laplace_exact_count(w, n, k);
      CHECK(total == 1);
    }
  }
  CHECK(laplace_exact_count(6, 1, 1) == 1);
  CHECK(laplace_exact_count(6, 1, 0) == 0);
  CHECK(laplace_exact_count(6, 0, 0) == 1);
  CHECK(laplace_exact_count(6, 3, 7) == 0);

  // two draws from w: P(1 distinct) = 1/w, P(2 distinct) = (w-1)/w
  for (int w : {2, 5, 9}) {
    CHECK(laplace_exact_count(w, 2, 1) == make_rational(1, w));
    CHECK(laplace_exact_count(w, 2, 2) == make_rational(w - 1, w));
  }
}

TEST_CASE("report rendering shows exact fractions and decimals") {
  const Instance inst = toy();
  const GccpReport report = make_report(inst, tau_vector(inst));
  const std::string text = render_report(report, 6);
  CHECK(text.find("449/140") != std::string::npos);
  CHECK(text.find("3.207143") != std::string::npos);
  CHECK(text.find("59/15") != std::string::npos);
}
