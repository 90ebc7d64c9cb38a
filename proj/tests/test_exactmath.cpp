#include <doctest.h>

#include "gccp/errors.hpp"
#include "gccp/exactmath.hpp"
#include "support/oracles.hpp"

using namespace gccp;

TEST_CASE("binomial basics") {
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(37, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), ValidationError);
}

TEST_CASE("binomial against the Pascal recurrence") {
  const auto triangle = testing::pascal_triangle(60);
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == triangle[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);

  // A large value must satisfy the same recurrence step, with the two
  // right-hand values coming from the multiplicative route.
  CHECK(binomial(80200, 40100) == binomial(80199, 40099) + binomial(80199, 40100));
  CHECK(binomial(700, 350) == binomial(699, 349) + binomial(699, 350));  // past the cache
}

TEST_CASE("binomial symmetry and row sums") {
  for (int n = 0; n <= 200; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
  for (int n = 0; n <= 64; ++n) {
    BigInt sum(0), expected;
    for (int k = 0; k <= n; ++k) sum += binomial(n, k);
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(n));
    CHECK(sum == expected);
  }
}

TEST_CASE("stirling2 basics") {
  CHECK(stirling2(4, 2) == 7);
  for (int n = 0; n <= 20; ++n) CHECK(stirling2(n, n) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 7) == 0);
}

TEST_CASE("stirling2 against exhaustive partition counting") {
  CHECK(stirling2(10, 4) == testing::count_set_partitions(10, 4));
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) CHECK(stirling2(n, k) == testing::count_set_partitions(n, k));
}

TEST_CASE("stirling column identity sum_k S(n,k) falling(w,k) = w^n") {
  for (int n = 0; n <= 12; ++n) {
    for (int w = 0; w <= 12; ++w) {
      BigInt sum(0), expected;
      for (int k = 0; k <= n; ++k) sum += stirling2(n, k) * falling_factorial(w, k);
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(w),
                    static_cast<unsigned long>(n));
      CHECK(sum == expected);
    }
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(6) == make_rational(49, 20));
  CHECK(BigRational(6) * harmonic(6) == make_rational(147, 10));
  CHECK_THROWS_AS(harmonic(0), ValidationError);

  // direct summation, double-checked in floating point
  BigRational sum(0);
  for (int i = 1; i <= 37; ++i) sum += make_rational(1, i);
  CHECK(harmonic(37) == sum);
  CHECK(to_decimal(harmonic(37), 6) == "4.20159");
  double approx = 0;
  for (int i = 1; i <= 37; ++i) approx += 1.0 / i;
  CHECK(std::abs(sum.get_d() - approx) < 1e-12);
}

TEST_CASE("rationals are always canonical") {
  CHECK(make_rational(4, 8) == make_rational(1, 2));
  CHECK(make_rational(3, -6).get_den() == 2);
  CHECK(make_rational(3, -6).get_num() == -1);
  CHECK_THROWS_AS(make_rational(1, 0), ValidationError);
  const BigRational q = make_rational(449, 140) + make_rational(1, 140);
  CHECK(q.get_den() == 14);  // arithmetic results stay reduced

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const long a = static_cast<long>(rng() % 2000) - 1000;
    const long b = static_cast<long>(rng() % 999) + 1;
    const BigRational r = make_rational(a, b);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    CHECK(g == 1);
    CHECK(r.get_den() > 0);
  }
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("1/6") == make_rational(1, 6));
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/4") == make_rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
}

TEST_CASE("decimal rendering, significant digits") {
  CHECK(to_decimal(make_rational(147, 10), 6) == "14.7000");
  CHECK(to_decimal(make_rational(449, 140), 6) == "3.20714");
  CHECK(to_decimal(BigRational(0), 6) == "0");
  CHECK(to_decimal(make_rational(-449, 140), 4) == "-3.207");
  CHECK(to_decimal(make_rational(1, 3), 3) == "0.333");
  CHECK(to_decimal(make_rational(1, 800), 2) == "0.0012");  // 1.25e-3 ties to even
  CHECK(to_decimal(BigRational(100667), 6) == "100667");
  CHECK(to_decimal(make_rational(999999499999, 1000000), 6) == "999999");  // ties to even
  CHECK(to_decimal(make_rational(9999995, 100), 6) == "100000");
}

TEST_CASE("decimal rendering, fixed places") {
  CHECK(to_fixed(make_rational(449, 140), 6) == "3.207143");
  CHECK(to_fixed(make_rational(2, 3), 3) == "0.667");
  CHECK(to_fixed(make_rational(1, 220), 3) == "0.005");
  CHECK(to_fixed(make_rational(5, 4), 1) == "1.2");   // half to even, down
  CHECK(to_fixed(make_rational(15, 4), 1) == "3.8");  // half to even, up
  CHECK(to_fixed(make_rational(-2, 3), 2) == "-0.67");
  CHECK(to_fixed(BigRational(5), 0) == "5");
  CHECK(to_fixed(make_rational(1, 16), 2) == "0.06");
}
