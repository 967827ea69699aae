#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

namespace sweepcover {

using BigInt = mpz_class;

// Dense polynomial with exact integer coefficients, index = power of z.
// The zero polynomial stores no coefficients; otherwise the highest stored
// coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial one();

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  // Coefficient of z^i; zero beyond the stored degree.
  const BigInt& coeff(std::size_t i) const;

  BigInt eval(const BigInt& x) const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  bool operator==(const IntPolynomial& rhs) const = default;

  const std::vector<BigInt>& coefficients() const { return coeffs_; }

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Binomial coefficient C(n,k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// Stirling number of the second kind S(u,k): partitions of a u-set into k
/// nonempty blocks. S(0,0) = 1, S(u,0) = 0 for u >= 1, S(u,k) = 0 for k > u.
BigInt stirling2(unsigned u, unsigned k);

/// The u-th Touchard polynomial B_u(z) = sum_k S(u,k) z^k.
IntPolynomial touchard(unsigned u);

/// Eulerian number A(n,j): permutations of n elements with j descents.
/// Zero when j >= n. Requires n >= 1.
BigInt eulerian(unsigned n, unsigned j);

// Ordered sequence of positive integers with a fixed sum.
struct Composition {
  std::vector<long> parts;
  long sum = 0;
};

/// Visits every ordered composition of `total` into exactly `parts` parts,
/// each >= min_part, in lexicographic order of the parts. The empty
/// composition is visited exactly when parts == 0 and total == 0. Returns the
/// number of compositions visited.
std::uint64_t for_each_composition(long total, int parts, long min_part,
                                   const std::function<void(const Composition&)>& visit);

std::vector<Composition> all_compositions(long total, int parts, long min_part);

}  // namespace sweepcover
