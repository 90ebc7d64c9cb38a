#pragma once

#include <string>
#include <vector>

#include "gccp/instance.hpp"
#include "gccp/transversal.hpp"
#include "gccp/transversoul.hpp"

namespace gccp {

/// q_0..q_w: probability that a length-k trial without replacement succeeds.
struct QVector {
  std::vector<BigRational> values;

  int width() const { return static_cast<int>(values.size()) - 1; }
};

/// q_k = tau_k / C(w, k), exactly. Also applies to transversoul counts.
QVector success_probabilities(const TauVector& tau, int w);
QVector success_probabilities(const TVector& counts, int w);

/// Expected length of a sharply successful trial without replacement:
/// w - sum_{k=1}^{w-1} q_k.
BigRational expected_length_no_replacement(const QVector& q);

/// Expected length with replacement. Evaluates all three algebraically equal
/// forms (the (1-q_k)/(w-k) sum, the harmonic form, and the binomial-ratio
/// form) and insists they agree before returning the value.
BigRational expected_length_with_replacement(const QVector& q);

/// Variance of the trial length with replacement, given its expectation.
BigRational variance_with_replacement(const QVector& q, const BigRational& expected);

/// Variance of the trial length without replacement.
BigRational variance_no_replacement(const QVector& q, const BigRational& expected);

/// Partial sums of the infinite with-replacement series, with an exact
/// enclosure of the limit: lower <= expected length <= upper. The tail bound
/// uses the full-collection coupon argument, so the gap shrinks like
/// ((w-1)/w)^N.
struct SeriesBracket {
  BigRational lower;
  BigRational upper;
};
SeriesBracket replacement_series_bracket(const TauVector& tau, int w, int terms);

/// Per-goal probabilities of showing up within an n-draw trial, plus their
/// sum (the expected number of goals gathered).
struct GoalExpectations {
  std::vector<BigRational> per_goal;
  BigRational total;
};
GoalExpectations goal_expectations(const Instance& inst, long n, bool with_replacement);

/// Probability of seeing exactly k distinct coupons in n uniform draws with
/// replacement from w coupons: (k!/w^n) C(w,k) S(n,k).
BigRational laplace_exact_count(int w, long n, int k);

/// Everything the solver reports for one instance.
struct GccpReport {
  int w = 0;
  int h = 0;
  QVector q;
  BigRational expected_no_replacement;
  BigRational expected_with_replacement;
  BigRational variance_no_replacement;
  BigRational variance_with_replacement;
};

GccpReport make_report(const Instance& inst, const TauVector& tau);

/// Multi-line rendering with exact fractions and fixed-point decimals.
std::string render_report(const GccpReport& report, int decimal_places = 6);

}  // namespace gccp
