#include "sweepcover/series.hpp"

#include <stdexcept>

namespace sweepcover {

namespace {

void require_same_order(const IntegerSeries& a, const IntegerSeries& b, const char* who) {
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(who) + ": mismatched truncation orders");
}

}  // namespace

IntegerSeries series_add(const IntegerSeries& a, const IntegerSeries& b) {
  require_same_order(a, b, "series_add");
  IntegerSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntegerSeries series_mul(const IntegerSeries& a, const IntegerSeries& b) {
  require_same_order(a, b, "series_mul");
  const int k = a.order();
  IntegerSeries out(k);
  for (int i = 0; i <= k; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= k; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

IntegerSeries series_pow(const IntegerSeries& a, unsigned exponent) {
  IntegerSeries out = IntegerSeries::unit(a.order());
  for (unsigned e = 0; e < exponent; ++e) out = series_mul(out, a);
  return out;
}

IntegerSeries phi_apply(int branching, const IntegerSeries& y) {
  if (branching < 2) throw std::invalid_argument("phi_apply: branching must be >= 2");
  const int n = branching;
  const int k = y.order();

  IntegerSeries acc(k);
  IntegerSeries ypow = IntegerSeries::unit(k);  // y^{n-u}, u descending from n
  for (int u = n; u >= 0; --u) {
    const IntPolynomial bu = touchard(static_cast<unsigned>(u));
    const BigInt cnu = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(u));
    const int jmax = std::min<int>(static_cast<int>(bu.degree()), k);
    for (int j = 0; j <= jmax; ++j) {
      if (bu.coeff(static_cast<std::size_t>(j)) == 0) continue;
      const BigInt scale = cnu * bu.coeff(static_cast<std::size_t>(j));
      for (int i = 0; i + j <= k; ++i) {
        if (ypow[i] == 0) continue;
        acc[i + j] += scale * ypow[i];
      }
    }
    if (u > 0) ypow = series_mul(ypow, y);
  }
  return acc;
}

IntegerSeries solve_ogf(int branching, int order) {
  if (branching < 2) throw std::invalid_argument("solve_ogf: branching must be >= 2");
  if (order < 0) throw std::invalid_argument("solve_ogf: order must be >= 0");

  IntegerSeries y(order);
  for (int pass = 0; pass <= order + 1; ++pass) {
    IntegerSeries next = phi_apply(branching, y);
    if (next == y) return y;
    y = next;
  }
  throw std::logic_error("solve_ogf: fixed point not stationary within order+1 passes");
}

}  // namespace sweepcover
