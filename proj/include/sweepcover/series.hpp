#pragma once

#include <vector>

#include "sweepcover/combinatorics.hpp"

namespace sweepcover {

// Formal power series over exact integers, truncated at a fixed order K.
// Arithmetic never silently changes the truncation order.
class IntegerSeries {
 public:
  explicit IntegerSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}

  static IntegerSeries unit(int order) {
    IntegerSeries s(order);
    s[0] = 1;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const BigInt& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  BigInt& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  bool operator==(const IntegerSeries&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Coefficientwise sum. Throws std::invalid_argument on mismatched orders.
IntegerSeries series_add(const IntegerSeries& a, const IntegerSeries& b);

/// Cauchy product truncated at the common order. Throws on mismatched orders.
IntegerSeries series_mul(const IntegerSeries& a, const IntegerSeries& b);

/// e-fold product; series_pow(a, 0) is the unit series.
IntegerSeries series_pow(const IntegerSeries& a, unsigned exponent);

/// Phi(z, y) = sum_{u=0}^{n} C(n,u) B_u(z) y^{n-u} as a series in z, truncated
/// at the order of y.
IntegerSeries phi_apply(int branching, const IntegerSeries& y);

/// The unique series fixed point of y = Phi(z, y) with zero constant term,
/// i.e. the ordinary generating function of lower decorated sweep covers.
/// Fixed-point iteration from the zero series settles one further coefficient
/// per pass, so it is stationary within order+1 iterations; failing that is an
/// internal fault and throws std::logic_error.
IntegerSeries solve_ogf(int branching, int order);

}  // namespace sweepcover
