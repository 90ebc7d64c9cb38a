#include "gccp/baseline.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gccp/errors.hpp"
#include "gccp/instance.hpp"
#include "gccp/probability.hpp"
#include "gccp/transversal.hpp"

namespace gccp {

BigRational incl_excl_length(const std::vector<BigRational>& probabilities, int cap) {
  const int h = static_cast<int>(probabilities.size());
  if (h < 1) throw ValidationError("no probabilities given");
  if (h > cap)
    throw ResourceLimitError("inclusion-exclusion over " + std::to_string(h) +
                             " probabilities exceeds cap " + std::to_string(cap));
  BigRational total(0);
  BigInt denom(1);
  for (const auto& p : probabilities) {
    if (p <= 0) throw ValidationError("probabilities must be positive");
    total += p;
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), p.get_den().get_mpz_t());
  }
  if (total != 1) throw ValidationError("probabilities must sum to 1");
  if (!denom.fits_slong_p())
    throw ResourceLimitError("common denominator too large for inclusion-exclusion");

  // With p_i = m_i / D every subset contributes +-D / (sum of its m_i), so
  // the alternating sum collapses to signed subset counts per denominator.
  const long d = denom.get_si();
  std::vector<long> weight(static_cast<std::size_t>(h));
  long max_sum = 0;
  for (int i = 0; i < h; ++i) {
    const BigInt m = probabilities[static_cast<std::size_t>(i)].get_num() *
                     (denom / probabilities[static_cast<std::size_t>(i)].get_den());
    weight[static_cast<std::size_t>(i)] = m.get_si();
    max_sum += weight[static_cast<std::size_t>(i)];
  }
  std::vector<long long> signed_count(static_cast<std::size_t>(max_sum) + 1, 0);

  // Gray-code walk: one weight toggled per step.
  std::vector<bool> in_set(static_cast<std::size_t>(h), false);
  long sum = 0;
  int parity = 0;
  const std::uint64_t steps = std::uint64_t{1} << h;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int bit = std::countr_zero(i);
    if (in_set[static_cast<std::size_t>(bit)]) {
      sum -= weight[static_cast<std::size_t>(bit)];
      parity ^= 1;
      in_set[static_cast<std::size_t>(bit)] = false;
    } else {
      sum += weight[static_cast<std::size_t>(bit)];
      parity ^= 1;
      in_set[static_cast<std::size_t>(bit)] = true;
    }
    signed_count[static_cast<std::size_t>(sum)] += parity ? 1 : -1;
  }

  BigRational result(0);
  for (long t = 1; t <= max_sum; ++t) {
    const long count = static_cast<long>(signed_count[static_cast<std::size_t>(t)]);
    if (count != 0) result += make_rational(BigInt(count) * d, t);
  }
  return result;
}

BigRational homogeneous_length(int h) {
  if (h < 1) throw ValidationError("need at least one goal type");
  return BigRational(h) * harmonic(h);
}

double triangular_asymptotic(int h) {
  if (h < 1) throw ValidationError("need at least one goal type");
  const double factor = 4.0 * std::numbers::pi / std::sqrt(3.0) - 6.0;
  return factor * (static_cast<double>(h) * (h + 1) / 2.0);
}

std::vector<BenchRecord> run_benchmark(const std::vector<int>& h_list, int incl_excl_cap) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (const int h : h_list) {
    if (h < 1) throw ValidationError("benchmark needs h >= 1");
    const long w = static_cast<long>(h) * (h + 1) / 2;
    std::vector<BigRational> probabilities;
    probabilities.reserve(static_cast<std::size_t>(h));
    for (int i = 1; i <= h; ++i) probabilities.push_back(make_rational(i, w));

    BenchRecord row_record{h, w, BigRational(0), BenchMethod::RowPolynomial, 0.0, false};
    const auto row_start = clock::now();
    const Instance inst = build_partition_instance(probabilities);
    const TauVector tau = tau_vector(inst);
    const QVector q = success_probabilities(tau, inst.width());
    row_record.value = expected_length_with_replacement(q);
    row_record.seconds = std::chrono::duration<double>(clock::now() - row_start).count();
    row_record.completed = true;
    records.push_back(row_record);

    BenchRecord ie_record{h, w, BigRational(0), BenchMethod::InclusionExclusion, 0.0, false};
    if (h <= incl_excl_cap) {
      const auto ie_start = clock::now();
      ie_record.value = incl_excl_length(probabilities, incl_excl_cap);
      ie_record.seconds = std::chrono::duration<double>(clock::now() - ie_start).count();
      ie_record.completed = true;
      if (ie_record.value != row_record.value)
        throw std::logic_error("benchmark methods disagree at h=" + std::to_string(h));
    }
    records.push_back(ie_record);
  }
  return records;
}

std::string benchmark_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "h,w,exact,decimal,method,seconds\n";
  for (const auto& record : records) {
    out << record.h << "," << record.w << ",";
    if (record.completed) {
      out << record.value.get_str() << "," << to_decimal(record.value, 6) << ",";
    } else {
      out << "-,-,";
    }
    out << (record.method == BenchMethod::RowPolynomial ? "row-polynomial" : "inclusion-exclusion")
        << "," << (record.completed ? std::to_string(record.seconds) : "-") << "\n";
  }
  return out.str();
}

}  // namespace gccp
