#include "sweepcover/bounds.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sweepcover/errors.hpp"

namespace sweepcover {

namespace {

using real50 = boost::multiprecision::cpp_bin_float_50;

real50 log50(const BigInt& value) { return log(real50(value.get_str())); }

real50 two_pi_50() { return boost::math::constants::two_pi<real50>(); }

// Natural logs of the two closed forms, carried at 50 digits so verdicts on
// astronomically large exact products are trustworthy.
real50 log_lower_50(long n, int m, long k) {
  const real50 rn(n), rm(m), rk(k);
  return rk * rn * (log(rn) - 1 - log(rk) - log(rm)) +
         rk / 2 * log(two_pi_50() * rn / rm);
}

real50 log_upper_50(long n, int m, long k) {
  const long tilde = n - static_cast<long>(m - 1) * k;
  const real50 rt(tilde), rk(k);
  return (rk * rt + rk / 2 - rt / 2) * (log(rt) - log(rk)) +
         (rk - rt) / 2 * log(two_pi_50());
}

void require_feasible(long n, int m, long k, const char* who) {
  if (k < 1 || m < 1) throw std::invalid_argument(std::string(who) + ": require m >= 1, k >= 1");
  if (n < static_cast<long>(m) * k)
    throw std::invalid_argument(std::string(who) + ": infeasible, need n >= m*k");
}

std::uint64_t composition_count(long n, int m, long k) {
  // compositions of n into m parts each >= k: C(n - m*k + m - 1, m - 1)
  const BigInt c = binomial(static_cast<unsigned long>(n - static_cast<long>(m) * k + m - 1),
                            static_cast<unsigned long>(m - 1));
  if (!c.fits_ulong_p()) return ~0ull;
  return c.get_ui();
}

bool is_balanced(const Composition& c) {
  const auto [lo, hi] = std::minmax_element(c.parts.begin(), c.parts.end());
  return *hi - *lo <= 1;
}

bool is_concentrated(const Composition& c, long n, long k) {
  const long tilde = n - static_cast<long>(c.parts.size() - 1) * k;
  int big = 0;
  for (long p : c.parts) {
    if (p == tilde) ++big;
    else if (p != k) return false;
  }
  // tilde == k collapses to the all-k composition
  return tilde == k ? big == static_cast<int>(c.parts.size()) : big >= 1;
}

}  // namespace

BigInt binom_run_product(long x, long k) {
  if (k < 1) throw std::invalid_argument("binom_run_product: k must be >= 1");
  if (x < k) throw std::invalid_argument("binom_run_product: require x >= k");
  BigInt product(1);
  for (long i = k; i <= x; ++i)
    product *= binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k));
  return product;
}

BigInt composition_product(const Composition& composition, long k) {
  BigInt product(1);
  for (long part : composition.parts) {
    if (part < k) throw std::invalid_argument("composition_product: part below k");
    product *= binom_run_product(part, k);
  }
  return product;
}

CompositionProductBounds composition_product_bounds(long n, int m, long k) {
  require_feasible(n, m, k, "composition_product_bounds");
  CompositionProductBounds b;
  b.log_lower = static_cast<double>(log_lower_50(n, m, k));
  b.log_upper = static_cast<double>(log_upper_50(n, m, k));
  return b;
}

BoundsCase evaluate_bounds_case(long n, int m, long k, std::uint64_t max_compositions) {
  require_feasible(n, m, k, "evaluate_bounds_case");
  if (composition_count(n, m, k) > max_compositions)
    throw resource_limit_error("evaluate_bounds_case: composition budget exceeded");

  BoundsCase out;
  out.n = n;
  out.m = m;
  out.k = k;

  bool first = true;
  for_each_composition(n, m, k, [&](const Composition& c) {
    const BigInt value = composition_product(c, k);
    if (first || value < out.min_product) {
      out.min_product = value;
      out.min_composition = c;
    }
    if (first || value > out.max_product) {
      out.max_product = value;
      out.max_composition = c;
    }
    first = false;
  });

  out.log_lower = static_cast<double>(log_lower_50(n, m, k));
  out.log_upper = static_cast<double>(log_upper_50(n, m, k));
  out.lower_holds = log_lower_50(n, m, k) <= log50(out.min_product);
  out.upper_holds = log50(out.max_product) <= log_upper_50(n, m, k);
  return out;
}

std::vector<BoundsCase> bounds_grid(long nmax, int mmax, long kmax) {
  std::vector<BoundsCase> rows;
  for (long n = 1; n <= nmax; ++n)
    for (int m = 1; m <= mmax; ++m)
      for (long k = 1; k <= kmax; ++k)
        if (n >= static_cast<long>(m) * k) rows.push_back(evaluate_bounds_case(n, m, k));
  return rows;
}

SchurVerdict check_schur_extremes(long n, int m, long k, std::uint64_t max_compositions) {
  require_feasible(n, m, k, "check_schur_extremes");
  if (composition_count(n, m, k) > max_compositions)
    throw resource_limit_error("check_schur_extremes: composition budget exceeded");

  SchurVerdict verdict;
  bool first = true;
  for_each_composition(n, m, k, [&](const Composition& c) {
    const BigInt value = composition_product(c, k);
    if (first || value < verdict.min_product) {
      verdict.min_product = value;
      verdict.min_composition = c;
    }
    if (first || value > verdict.max_product) {
      verdict.max_product = value;
      verdict.max_composition = c;
    }
    first = false;
  });

  // The claims are existential: some balanced composition attains the
  // minimum, some concentrated one the maximum.
  for_each_composition(n, m, k, [&](const Composition& c) {
    if (!verdict.min_is_balanced && is_balanced(c) &&
        composition_product(c, k) == verdict.min_product)
      verdict.min_is_balanced = true;
    if (!verdict.max_is_concentrated && is_concentrated(c, n, k) &&
        composition_product(c, k) == verdict.max_product)
      verdict.max_is_concentrated = true;
  });
  return verdict;
}

BigInt powered_composition_sum(int parts, int exponent, long k) {
  if (parts < 1 || exponent < 1)
    throw std::invalid_argument("powered_composition_sum: require parts >= 1, exponent >= 1");
  if (k < parts) throw std::invalid_argument("powered_composition_sum: require k >= parts");

  // base[m] = m^exponent for m = 1..k; convolve parts times.
  const std::size_t len = static_cast<std::size_t>(k) + 1;
  std::vector<BigInt> base(len);
  for (long mval = 1; mval <= k; ++mval) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(mval),
                  static_cast<unsigned long>(exponent));
    base[static_cast<std::size_t>(mval)] = p;
  }

  std::vector<BigInt> acc(len);
  acc[0] = 1;
  for (int round = 0; round < parts; ++round) {
    std::vector<BigInt> next(len);
    for (std::size_t i = 0; i < len; ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t j = 1; i + j < len; ++j) next[i + j] += acc[i] * base[j];
    }
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(k)];
}

BigInt powered_composition_closed_form(int parts, int exponent, long k) {
  if (parts < 1 || exponent < 1)
    throw std::invalid_argument("powered_composition_closed_form: require parts >= 1, exponent >= 1");
  if (k < parts) throw std::invalid_argument("powered_composition_closed_form: require k >= parts");

  // sum_m m^p x^m = x P(x) / (1-x)^{p+1} with P the Eulerian polynomial, so
  // the parts-fold product has numerator x^parts P(x)^parts over
  // (1-x)^{parts(p+1)}; extract x^k with the negative binomial series.
  std::vector<BigInt> eul(static_cast<std::size_t>(exponent));
  for (int j = 0; j < exponent; ++j)
    eul[static_cast<std::size_t>(j)] = eulerian(static_cast<unsigned>(exponent),
                                                static_cast<unsigned>(j));
  IntPolynomial p(std::move(eul));
  IntPolynomial pn = IntPolynomial::one();
  for (int i = 0; i < parts; ++i) pn = pn * p;

  const long order = static_cast<long>(parts) * (exponent + 1);
  BigInt total(0);
  for (std::size_t j = 0; j <= pn.degree(); ++j) {
    const long t = k - parts - static_cast<long>(j);
    if (t < 0) continue;
    total += pn.coeff(j) * binomial(static_cast<unsigned long>(t + order - 1),
                                    static_cast<unsigned long>(order - 1));
  }
  return total;
}

}  // namespace sweepcover
