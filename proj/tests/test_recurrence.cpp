#include <doctest.h>

#include <vector>

#include "sweepcover/recurrence.hpp"
#include "sweepcover/tree_poset.hpp"

using namespace sweepcover;

namespace {

// Literal evaluation of the sibling-group recurrence with explicit
// composition sums; exponential, but an implementation-independent oracle.
std::vector<BigInt> naive_table(int n, int kmax) {
  std::vector<BigInt> f(static_cast<std::size_t>(kmax) + 1);
  for (int k = 1; k <= kmax; ++k) {
    BigInt total(0);
    for (int u = 0; u <= n; ++u) {
      for (int kp = 0; kp <= u && kp <= k; ++kp) {
        const BigInt s = stirling2(static_cast<unsigned>(u), static_cast<unsigned>(kp));
        if (s == 0) continue;
        BigInt inner(0);
        for_each_composition(k - kp, n - u, 1, [&](const Composition& c) {
          BigInt prod(1);
          for (long part : c.parts) prod *= f[static_cast<std::size_t>(part)];
          inner += prod;
        });
        total += binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(u)) * s * inner;
      }
    }
    f[static_cast<std::size_t>(k)] = total;
  }
  return f;
}

}  // namespace

TEST_CASE("table examples") {
  CHECK(f_table(2, 1).values == std::vector<BigInt>{0, 1});
  CHECK(f_table(2, 4).values == std::vector<BigInt>{0, 1, 4, 16, 80});
  CHECK(f_table(3, 1).f(1) == 1);
}

TEST_CASE("one colour admits exactly one lower cover for every branching") {
  for (int n = 2; n <= 8; ++n) {
    const DscTable t = f_table(n, 1);
    CHECK(t.f(0) == 0);
    CHECK(t.f(1) == 1);
  }
}

TEST_CASE("rejects degenerate branching and oversized tables") {
  CHECK_THROWS_AS(f_table(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(f_table(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(f_table(2, 100, TableLimits{50}), std::invalid_argument);
}

TEST_CASE("matches the literal composition-sum recurrence") {
  for (int n = 2; n <= 4; ++n) {
    const auto naive = naive_table(n, 8);
    const DscTable fast = f_table(n, 8);
    CHECK(fast.values == naive);
  }
}

TEST_CASE("the all-children term contributes exactly S(n,k) for k <= n") {
  // with every child in the antichain there is nothing left to compose, so
  // that branch of the recurrence must reduce to a bare Stirling number
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      BigInt contribution(0);
      for (int kp = 0; kp <= n && kp <= k; ++kp) {
        BigInt inner(0);
        for_each_composition(k - kp, 0, 1, [&](const Composition&) { inner += 1; });
        contribution += stirling2(static_cast<unsigned>(n), static_cast<unsigned>(kp)) * inner;
      }
      CHECK(contribution == stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    }
  }
}

TEST_CASE("totals place the root singleton by convention") {
  const DscTable t2 = f_table(2, 4);
  CHECK(total_dsc(t2, 1) == 2);
  CHECK(total_dsc(t2, 2) == 4);
  CHECK(total_dsc(f_table(3, 1), 1) == 2);

  CHECK(total_dsc(t2, 1, TotalConvention::root_at_k0) == 1);
  CHECK(total_dsc(t2, 0, TotalConvention::root_at_k0) == 1);
  CHECK(total_dsc(t2, 0, TotalConvention::root_at_k1) == 0);
  CHECK(total_dsc(2, 1) == 2);
}

TEST_CASE("growth step verdicts") {
  CHECK(check_growth_step(f_table(2, 4)).passed);
  CHECK(check_growth_step(f_table(2, 1)).passed);  // vacuous range

  for (int n = 2; n <= 4; ++n) CHECK(check_growth_step(f_table(n, 60)).passed);

  DscTable broken;
  broken.branching = 2;
  broken.values = {BigInt(0), BigInt(1), BigInt(4), BigInt(7)};  // 7 < 2*4
  const auto verdict = check_growth_step(broken);
  CHECK_FALSE(verdict.passed);
  CHECK(verdict.first_violation == 3);
}

TEST_CASE("recurrence agrees with the brute-force census") {
  for (int n = 2; n <= 3; ++n) {
    const DscTable table = f_table(n, 4);
    for (int k = 1; k <= 4; ++k) CHECK(table.f(k) == census_lower_dsc(n, k, k + 1));
  }
}
