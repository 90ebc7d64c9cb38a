#include "gccp/exactmath.hpp"

#include <mutex>
#include <vector>

#include "gccp/errors.hpp"

namespace gccp {

namespace {

// Triangular Pascal cache for the hot range (row polynomial factors, goal
// sizes). Larger n falls through to mpz_bin_uiui, which is fast enough for
// the denominators C(w, k) of wide instances.
constexpr long kBinomialCacheMax = 600;

std::vector<std::vector<BigInt>>& binomial_rows() {
  static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
  return rows;
}

std::vector<std::vector<BigInt>>& stirling_rows() {
  static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
  return rows;
}

std::vector<BigRational>& harmonic_prefix() {
  static std::vector<BigRational> values{BigRational(0)};  // H(0) = 0
  return values;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Rounds a/b (a >= 0, b > 0) to the nearest integer, ties to even.
BigInt round_half_even(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const BigInt twice = r * 2;
  const int c = cmp(twice, b);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

BigInt pow10(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return p;
}

}  // namespace

BigRational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  BigRational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make_rational(BigInt(text), 1);
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw ValidationError("not a rational number: '" + text + "'");
  }
}

BigInt binomial(long n, long k) {
  if (n < 0) throw ValidationError("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (n > kBinomialCacheMax) {
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& rows = binomial_rows();
  while (static_cast<long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(prev.size() + 1, BigInt(1));
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt stirling2(long n, long k) {
  if (n < 0 || k < 0) throw ValidationError("stirling2: negative argument");
  if (k > n) return 0;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& rows = stirling_rows();
  while (static_cast<long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(prev.size() + 1, BigInt(0));
    for (std::size_t j = 1; j < row.size(); ++j) {
      row[j] = BigInt(static_cast<long>(j)) * (j < prev.size() ? prev[j] : BigInt(0)) + prev[j - 1];
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt falling_factorial(long n, long k) {
  if (k < 0) return 0;
  BigInt result(1);
  for (long i = 0; i < k; ++i) result *= BigInt(n - i);
  return result;
}

BigRational harmonic(long n) {
  if (n < 1) throw ValidationError("harmonic: n must be >= 1");
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& values = harmonic_prefix();
  while (static_cast<long>(values.size()) <= n) {
    const long m = static_cast<long>(values.size());
    values.push_back(values.back() + make_rational(1, m));
  }
  return values[static_cast<std::size_t>(n)];
}

std::string to_decimal(const BigRational& value, int significant_digits) {
  if (significant_digits < 1) throw ValidationError("to_decimal: need at least one digit");
  if (value == 0) return "0";
  const bool negative = value < 0;
  BigInt num = abs(value.get_num());
  BigInt den = value.get_den();

  // Exact exponent e with 10^e <= num/den < 10^(e+1); digit counts narrow it
  // to two candidates.
  long e = static_cast<long>(num.get_str().size()) - static_cast<long>(den.get_str().size());
  const bool at_least_10e = e >= 0 ? num >= den * pow10(e) : num * pow10(-e) >= den;
  if (!at_least_10e) --e;

  long scale = significant_digits - 1 - e;
  BigInt a = num, b = den;
  if (scale >= 0)
    a *= pow10(scale);
  else
    b *= pow10(-scale);
  BigInt mantissa = round_half_even(a, b);
  if (mantissa == pow10(significant_digits)) {  // rounded up to the next power
    mantissa = pow10(significant_digits - 1);
    --scale;
  }

  std::string digits = mantissa.get_str();
  const long point = significant_digits - scale;  // digits before the decimal point
  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + digits;
  } else if (point >= static_cast<long>(digits.size())) {
    out = digits + std::string(static_cast<std::size_t>(point) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(point)) + "." +
          digits.substr(static_cast<std::size_t>(point));
  }
  return negative ? "-" + out : out;
}

std::string to_fixed(const BigRational& value, int decimal_places) {
  if (decimal_places < 0) throw ValidationError("to_fixed: negative decimal places");
  const bool negative = value < 0;
  BigInt num = abs(value.get_num());
  BigInt den = value.get_den();
  BigInt scaled = round_half_even(num * pow10(decimal_places), den);
  std::string digits = scaled.get_str();
  if (static_cast<long>(digits.size()) <= decimal_places) {
    digits.insert(0, static_cast<std::size_t>(decimal_places) - digits.size() + 1, '0');
  }
  std::string out = digits;
  if (decimal_places > 0) {
    out.insert(out.size() - static_cast<std::size_t>(decimal_places), ".");
  }
  if (negative && scaled != 0) out.insert(0, "-");
  return out;
}

}  // namespace gccp
