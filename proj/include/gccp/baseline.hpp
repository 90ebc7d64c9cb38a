#pragma once

#include <string>
#include <vector>

#include "gccp/exactmath.hpp"

namespace gccp {

/// Classic-CCP expected length by the alternating sum over all nonempty
/// subsets of goal types. Exponential in the number of types; refuses
/// h > cap. Probabilities must be positive and sum to 1.
BigRational incl_excl_length(const std::vector<BigRational>& probabilities, int cap = 27);

/// Homogeneous closed form h * H(h).
BigRational homogeneous_length(int h);

/// Asymptotic expected length for the p_i = i/w family:
/// (4*pi/sqrt(3) - 6) * C(h+1, 2).
double triangular_asymptotic(int h);

enum class BenchMethod { RowPolynomial, InclusionExclusion };

struct BenchRecord {
  int h = 0;
  long w = 0;
  BigRational value;
  BenchMethod method = BenchMethod::RowPolynomial;
  double seconds = 0.0;
  bool completed = false;  // false when the method was skipped (over cap)
};

/// For each h builds the triangular partition instance (p_i = i/w with
/// w = h(h+1)/2), times the row-polynomial route, and, when h is under the
/// cap, times inclusion-exclusion as well; equal exact values are asserted.
std::vector<BenchRecord> run_benchmark(const std::vector<int>& h_list, int incl_excl_cap = 27);

/// CSV rendering: h,w,exact,decimal,method,seconds. Skipped methods keep
/// their row with "-" in the value columns.
std::string benchmark_csv(const std::vector<BenchRecord>& records);

}  // namespace gccp
