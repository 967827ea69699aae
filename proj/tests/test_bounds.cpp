#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sweepcover/bounds.hpp"
#include "sweepcover/singularity.hpp"

using namespace sweepcover;

namespace {

Composition comp(std::vector<long> parts) {
  Composition c;
  c.sum = 0;
  for (long p : parts) c.sum += p;
  c.parts = std::move(parts);
  return c;
}

}  // namespace

TEST_CASE("binomial run products") {
  CHECK(binom_run_product(2, 1) == 2);
  CHECK(binom_run_product(5, 5) == 1);
  CHECK(binom_run_product(4, 2) == 18);  // 1 * 3 * 6
  CHECK(binom_run_product(4, 1) == 24);
  CHECK_THROWS_AS(binom_run_product(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(binom_run_product(3, 0), std::invalid_argument);
}

TEST_CASE("composition products") {
  CHECK(composition_product(comp({2, 2}), 1) == 4);
  CHECK(composition_product(comp({3}), 3) == 1);
  CHECK(composition_product(comp({4, 2}), 2) == 18);
  CHECK_THROWS_AS(composition_product(comp({4, 1}), 2), std::invalid_argument);
}

TEST_CASE("closed-form bounds at small parameters") {
  const auto b = composition_product_bounds(2, 1, 1);
  CHECK(std::exp(b.log_lower) == doctest::Approx(1.91903).epsilon(1e-4));
  CHECK(std::exp(b.log_upper) == doctest::Approx(1.12838).epsilon(1e-4));
  CHECK_THROWS_AS(composition_product_bounds(3, 2, 2), std::invalid_argument);  // n < m*k
}

TEST_CASE("m = 1 reduces to the single-run bounds") {
  for (long n = 1; n <= 10; ++n) {
    for (long k = 1; k <= n; ++k) {
      const auto b = composition_product_bounds(n, 1, k);
      const double nd = static_cast<double>(n), kd = static_cast<double>(k);
      const double lower =
          kd * nd * std::log(nd / (std::numbers::e * kd)) + kd / 2 * std::log(2 * std::numbers::pi * nd);
      const double upper = (kd * nd + kd / 2 - nd / 2) * std::log(nd / kd) +
                           (kd - nd) / 2 * std::log(2 * std::numbers::pi);
      CHECK(b.log_lower == doctest::Approx(lower).epsilon(1e-12));
      CHECK(b.log_upper == doctest::Approx(upper).epsilon(1e-12));
    }
  }
}

TEST_CASE("the documented small counterexample to the upper bound") {
  const auto c = evaluate_bounds_case(2, 1, 1);
  CHECK(c.min_product == 2);
  CHECK(c.max_product == 2);
  CHECK(c.lower_holds);
  CHECK_FALSE(c.upper_holds);  // 1.128... < 2
}

TEST_CASE("lower bound holds across a sample grid") {
  for (long n = 1; n <= 12; ++n)
    for (int m = 1; m <= 3; ++m)
      for (long k = 1; k <= 4; ++k) {
        if (n < static_cast<long>(m) * k) continue;
        CHECK(evaluate_bounds_case(n, m, k).lower_holds);
      }
}

TEST_CASE("balanced compositions minimize, concentrated ones maximize") {
  const auto a = check_schur_extremes(6, 2, 2);
  CHECK(a.min_composition.parts == std::vector<long>{3, 3});
  CHECK(a.min_product == 9);
  CHECK(a.max_product == 18);
  CHECK((a.max_composition.parts == std::vector<long>{2, 4} ||
         a.max_composition.parts == std::vector<long>{4, 2}));
  CHECK(a.min_is_balanced);
  CHECK(a.max_is_concentrated);

  const auto unique = check_schur_extremes(6, 2, 3);  // only (3,3) is feasible
  CHECK(unique.min_product == unique.max_product);
  CHECK(unique.min_is_balanced);
  CHECK(unique.max_is_concentrated);

  const auto b = check_schur_extremes(8, 2, 2);
  CHECK(b.max_product == 2700);
  CHECK((b.max_composition.parts == std::vector<long>{2, 6} ||
         b.max_composition.parts == std::vector<long>{6, 2}));
  CHECK(b.max_is_concentrated);
  CHECK(b.min_composition.parts == std::vector<long>{4, 4});
}

TEST_CASE("schur claims hold on a sample grid") {
  for (long n = 1; n <= 14; ++n)
    for (int m = 1; m <= 3; ++m)
      for (long k = 1; k <= 4; ++k) {
        if (n < static_cast<long>(m) * k) continue;
        const auto verdict = check_schur_extremes(n, m, k);
        CHECK(verdict.min_is_balanced);
        CHECK(verdict.max_is_concentrated);
      }
}

TEST_CASE("powered composition sums by direct evaluation") {
  CHECK(powered_composition_sum(2, 2, 3) == 8);    // (1*2)^2 + (2*1)^2
  CHECK(powered_composition_sum(2, 1, 4) == 10);   // 3 + 4 + 3
  CHECK(powered_composition_sum(3, 2, 3) == 1);    // only 1+1+1
  CHECK(powered_composition_sum(4, 3, 4) == 1);
  CHECK(powered_composition_sum(1, 1, 5) == 5);
  CHECK_THROWS_AS(powered_composition_sum(3, 1, 2), std::invalid_argument);
}

TEST_CASE("closed form equals the dynamic programming sum") {
  CHECK(powered_composition_closed_form(2, 1, 4) == 10);
  CHECK(powered_composition_closed_form(2, 2, 3) == 8);
  CHECK(powered_composition_closed_form(1, 1, 5) == 5);
  CHECK_THROWS_AS(powered_composition_closed_form(3, 1, 2), std::invalid_argument);

  for (int parts = 1; parts <= 3; ++parts)
    for (int exponent = 1; exponent <= 3; ++exponent)
      for (long k = parts; k <= 20; ++k)
        CHECK(powered_composition_closed_form(parts, exponent, k) ==
              powered_composition_sum(parts, exponent, k));
}

TEST_CASE("doubling ratio approaches the predicted growth exponent") {
  // S(k) ~ k^{parts(exponent+1)-1}, so log2 S(2k)/S(k) approaches the exponent
  const double expected = 2 * (1 + 1) - 1;  // parts=2, exponent=1
  const double measured = (log_big(powered_composition_sum(2, 1, 400)) -
                           log_big(powered_composition_sum(2, 1, 200))) /
                          std::numbers::ln2;
  CHECK(std::fabs(measured / expected - 1.0) < 0.05);
}

TEST_CASE("binomial coefficient inequalities pinned by direction") {
  for (long k = 1; k <= 4; ++k) {
    for (long x = k; x <= 40; ++x) {
      const BigInt a = binomial(static_cast<unsigned long>(x), static_cast<unsigned long>(k));
      const BigInt b = binomial(static_cast<unsigned long>(x + 1), static_cast<unsigned long>(k));
      const BigInt c = binomial(static_cast<unsigned long>(x + 2), static_cast<unsigned long>(k));
      // the run-product log h_k is strictly convex: its increments log C(x,k) grow
      CHECK(c > b);
      // while x -> C(x,k) itself is log-concave in the upper argument
      CHECK(a * c <= b * b);
    }
  }
}
