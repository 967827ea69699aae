#pragma once

#include <cstdint>
#include <vector>

#include "sweepcover/combinatorics.hpp"

namespace sweepcover {

/// prod_{i=k}^{x} C(i,k). The range starts at i = k: below that every factor
/// is zero and the product degenerates. Requires x >= k >= 1.
BigInt binom_run_product(long x, long k);

/// prod over parts n_j of binom_run_product(n_j, k). Every part must be >= k.
BigInt composition_product(const Composition& composition, long k);

// Closed-form bounds for the composition product, natural-log scale (the
// products overflow doubles quickly).
struct CompositionProductBounds {
  double log_lower = 0;
  double log_upper = 0;
};

/// lower = (n/(ekm))^{kn} (sqrt(2 pi n/m))^k and
/// upper = (t/k)^{kt + k/2 - t/2} (sqrt(2 pi))^{k-t} with t = n - (m-1)k,
/// evaluated in log space. Requires the feasibility condition n >= m*k.
CompositionProductBounds composition_product_bounds(long n, int m, long k);

// Exact extremal composition products for one (n, m, k) case against the
// closed-form bounds. Verdicts compare 50-digit logarithms.
struct BoundsCase {
  long n = 0;
  int m = 0;
  long k = 0;
  Composition min_composition;
  Composition max_composition;
  BigInt min_product;
  BigInt max_product;
  double log_lower = 0;
  double log_upper = 0;
  bool lower_holds = false;  // lower bound <= minimal exact product
  bool upper_holds = false;  // maximal exact product <= upper bound
};

BoundsCase evaluate_bounds_case(long n, int m, long k, std::uint64_t max_compositions = 5'000'000);

/// Every feasible case of the grid 1 <= n <= nmax, 1 <= m <= mmax,
/// 1 <= k <= kmax, in lexicographic (n, m, k) order.
std::vector<BoundsCase> bounds_grid(long nmax, int mmax, long kmax);

struct SchurVerdict {
  bool min_is_balanced = false;       // a composition with parts differing by <= 1 attains the min
  bool max_is_concentrated = false;   // a composition with one part n-(m-1)k, rest k, attains the max
  Composition min_composition;        // lexicographically first argmin
  Composition max_composition;        // lexicographically first argmax
  BigInt min_product;
  BigInt max_product;
};

/// Brute-forces every composition of n into m parts each >= k and checks the
/// extremal shape claims. Throws resource_limit_error past the budget.
SchurVerdict check_schur_extremes(long n, int m, long k, std::uint64_t max_compositions = 5'000'000);

/// S(k) = sum over compositions (k_1..k_parts) of k, parts >= 1 each, of
/// (k_1 * ... * k_parts)^exponent, by dynamic programming (the parts-fold
/// convolution of m -> m^exponent). Requires k >= parts >= 1, exponent >= 1.
BigInt powered_composition_sum(int parts, int exponent, long k);

/// The same sum via the Eulerian-coefficient closed form: with
/// P(x)^parts = sum_j a_j x^j (P the Eulerian polynomial of the exponent),
/// S(k) = sum_j a_j C(k - parts - j + M - 1, M - 1), M = parts*(exponent+1).
BigInt powered_composition_closed_form(int parts, int exponent, long k);

}  // namespace sweepcover
