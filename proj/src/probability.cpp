#include "gccp/probability.hpp"

#include <sstream>

#include "gccp/errors.hpp"

namespace gccp {

namespace {

QVector probabilities_from_counts(const std::vector<BigInt>& counts, int w) {
  if (static_cast<int>(counts.size()) != w + 1)
    throw ValidationError("count vector length does not match width");
  QVector q;
  q.values.reserve(counts.size());
  for (int k = 0; k <= w; ++k) {
    const BigInt total = binomial(w, k);
    const BigInt& hit = counts[static_cast<std::size_t>(k)];
    if (hit > total)
      throw ValidationError("count exceeds C(w,k) at k=" + std::to_string(k));
    q.values.push_back(make_rational(hit, total));
  }
  return q;
}

}  // namespace

QVector success_probabilities(const TauVector& tau, int w) {
  return probabilities_from_counts(tau.counts, w);
}

QVector success_probabilities(const TVector& counts, int w) {
  return probabilities_from_counts(counts.counts, w);
}

BigRational expected_length_no_replacement(const QVector& q) {
  const int w = q.width();
  BigRational sum(0);
  for (int k = 1; k <= w - 1; ++k) sum += q.values[static_cast<std::size_t>(k)];
  return BigRational(w) - sum;
}

BigRational expected_length_with_replacement(const QVector& q) {
  const int w = q.width();
  const BigRational wq(w);

  BigRational first(0);
  for (int k = 0; k <= w - 1; ++k)
    first += (1 - q.values[static_cast<std::size_t>(k)]) / BigRational(w - k);
  first *= wq;

  BigRational second(0);
  for (int k = 1; k <= w - 1; ++k)
    second += q.values[static_cast<std::size_t>(k)] / BigRational(w - k);
  second = wq * (harmonic(w) - second);

  BigRational third(0);
  for (int k = 1; k <= w - 1; ++k) {
    const BigRational tau_k = q.values[static_cast<std::size_t>(k)] * BigRational(binomial(w, k));
    third += tau_k / BigRational(binomial(w - 1, k));
  }
  third = wq * harmonic(w) - third;

  if (first != second || second != third)
    throw std::logic_error("expected-length forms disagree: " + first.get_str() + " vs " +
                           second.get_str() + " vs " + third.get_str());
  return first;
}

BigRational variance_with_replacement(const QVector& q, const BigRational& expected) {
  const int w = q.width();
  const BigRational w2(BigInt(w) * BigInt(w));
  BigRational sum(0);
  for (int k = 0; k <= w - 1; ++k) {
    const BigRational miss = 1 - q.values[static_cast<std::size_t>(k)];
    if (miss == 0) continue;
    const BigRational spread = make_rational(BigInt(w) * BigInt(w + k), BigInt(w - k) * BigInt(w - k));
    const BigRational tail = 2 * w2 / BigRational(w - k) * (harmonic(w) - harmonic(w - k));
    sum += miss * (spread + tail);
  }
  return sum - expected * expected;
}

BigRational variance_no_replacement(const QVector& q, const BigRational& expected) {
  const int w = q.width();
  BigRational sum(0);
  for (int k = 0; k <= w - 1; ++k)
    sum += BigRational(2 * k + 1) * (1 - q.values[static_cast<std::size_t>(k)]);
  return sum - expected * expected;
}

SeriesBracket replacement_series_bracket(const TauVector& tau, int w, int terms) {
  if (terms < w) throw ValidationError("series bracket needs at least w terms");
  if (static_cast<int>(tau.counts.size()) != w + 1)
    throw ValidationError("count vector length does not match width");

  // q'_n = t'_n / w^n with t'_n = sum_k k! tau_k S(n,k); partial sum of
  // n (q'_n - q'_{n-1}) plus the tail floor N (1 - q'_N) gives the lower end.
  BigRational partial(0);
  BigRational previous(0);
  BigRational q_n(0);
  BigInt w_pow(1);
  std::vector<BigInt> weighted(tau.counts.size());
  for (std::size_t k = 1; k < tau.counts.size(); ++k) {
    BigInt factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(k));
    weighted[k] = factorial * tau.counts[k];
  }
  for (int n = 1; n <= terms; ++n) {
    w_pow *= w;
    BigInt successful(0);
    const int upto = std::min(n, w);
    for (int k = 1; k <= upto; ++k)
      successful += weighted[static_cast<std::size_t>(k)] * stirling2(n, k);
    previous = q_n;
    q_n = make_rational(successful, w_pow);
    partial += BigRational(n) * (q_n - previous);
  }

  SeriesBracket bracket;
  bracket.lower = partial + BigRational(terms) * (1 - q_n);
  // Tail above the floor: sum_{n>=N} P(length > n) <= w^2 ((w-1)/w)^N, since
  // the full collection dominates and misses decay geometrically per coupon.
  BigRational decay = make_rational(w - 1, w);
  BigRational tail(BigInt(w) * BigInt(w));
  for (int n = 0; n < terms; ++n) tail *= decay;
  bracket.upper = bracket.lower + tail;
  return bracket;
}

GoalExpectations goal_expectations(const Instance& inst, long n, bool with_replacement) {
  if (n < 0) throw ValidationError("trial length must be nonnegative");
  const int w = inst.width();
  GoalExpectations result;
  result.total = 0;
  for (const auto& g : inst.goals()) {
    const long m = static_cast<long>(g.members.size());
    BigRational hit;
    if (with_replacement) {
      BigInt num, den;
      mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(w - m), static_cast<unsigned long>(n));
      mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(w), static_cast<unsigned long>(n));
      hit = 1 - make_rational(num, den);
    } else if (m + n > w) {
      hit = 1;
    } else {
      hit = 1 - make_rational(binomial(w - m, n), binomial(w, n));
    }
    result.total += hit;
    result.per_goal.push_back(std::move(hit));
  }
  return result;
}

BigRational laplace_exact_count(int w, long n, int k) {
  if (w < 1) throw ValidationError("need at least one coupon");
  if (k < 0 || k > w || k > n) return BigRational(0);
  if (n == 0) return k == 0 ? BigRational(1) : BigRational(0);
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(k));
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(w), static_cast<unsigned long>(n));
  return make_rational(factorial * binomial(w, k) * stirling2(n, k), den);
}

GccpReport make_report(const Instance& inst, const TauVector& tau) {
  GccpReport report;
  report.w = inst.width();
  report.h = inst.goal_count();
  report.q = success_probabilities(tau, report.w);
  report.expected_no_replacement = expected_length_no_replacement(report.q);
  report.expected_with_replacement = expected_length_with_replacement(report.q);
  report.variance_no_replacement =
      variance_no_replacement(report.q, report.expected_no_replacement);
  report.variance_with_replacement =
      variance_with_replacement(report.q, report.expected_with_replacement);
  return report;
}

std::string render_report(const GccpReport& report, int decimal_places) {
  std::ostringstream out;
  out << "w = " << report.w << "  h = " << report.h << "\n";
  out << "ℓ_nr = " << report.expected_no_replacement.get_str() << " ≈ "
      << to_fixed(report.expected_no_replacement, decimal_places) << "\n";
  out << "ℓ_r = " << report.expected_with_replacement.get_str() << " ≈ "
      << to_fixed(report.expected_with_replacement, decimal_places) << "\n";
  out << "var_nr = " << report.variance_no_replacement.get_str() << " ≈ "
      << to_fixed(report.variance_no_replacement, decimal_places) << "\n";
  out << "var_r = " << report.variance_with_replacement.get_str() << " ≈ "
      << to_fixed(report.variance_with_replacement, decimal_places) << "\n";
  return out.str();
}

}  // namespace gccp
