#include "sweepcover/combinatorics.hpp"

#include <stdexcept>
#include <utility>

namespace sweepcover {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial(std::vector<BigInt>{BigInt(1)}); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(std::size_t i) const {
  static const BigInt zero(0);
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
  BigInt acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(out));
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

namespace {

// Triangular memo tables; rows are appended on demand and never mutated
// afterwards, so each thread keeps its own copy.
const std::vector<BigInt>& stirling2_row(unsigned u) {
  thread_local std::vector<std::vector<BigInt>> rows = {{BigInt(1)}};
  while (rows.size() <= u) {
    const unsigned n = static_cast<unsigned>(rows.size());
    const auto& prev = rows.back();
    std::vector<BigInt> row(n + 1);
    for (unsigned k = 1; k < n; ++k) row[k] = BigInt(k) * prev[k] + prev[k - 1];
    row[n] = 1;
    rows.push_back(std::move(row));
  }
  return rows[u];
}

const std::vector<BigInt>& eulerian_row(unsigned n) {
  thread_local std::vector<std::vector<BigInt>> rows = {{}, {BigInt(1)}};
  while (rows.size() <= n) {
    const unsigned m = static_cast<unsigned>(rows.size());
    const auto& prev = rows.back();  // row m-1, entries j = 0..m-2
    std::vector<BigInt> row(m);
    for (unsigned j = 0; j < m; ++j) {
      BigInt v(0);
      if (j < prev.size()) v += BigInt(j + 1) * prev[j];
      if (j >= 1) v += BigInt(m - j) * prev[j - 1];
      row[j] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows[n];
}

}  // namespace

BigInt stirling2(unsigned u, unsigned k) {
  if (k > u) return BigInt(0);
  return stirling2_row(u)[k];
}

IntPolynomial touchard(unsigned u) {
  const auto& row = stirling2_row(u);
  return IntPolynomial(std::vector<BigInt>(row.begin(), row.end()));
}

BigInt eulerian(unsigned n, unsigned j) {
  if (n == 0) throw std::invalid_argument("eulerian: n must be positive");
  if (j >= n) return BigInt(0);
  return eulerian_row(n)[j];
}

std::uint64_t for_each_composition(long total, int parts, long min_part,
                                   const std::function<void(const Composition&)>& visit) {
  if (min_part < 1) throw std::invalid_argument("for_each_composition: min_part must be >= 1");
  if (total < 0 || parts < 0) return 0;

  Composition c;
  c.parts.reserve(static_cast<std::size_t>(parts));
  std::uint64_t count = 0;

  std::function<void(long, int)> rec = [&](long remaining, int slots) {
    if (slots == 0) {
      if (remaining == 0) {
        c.sum = total;
        ++count;
        visit(c);
      }
      return;
    }
    const long hi = remaining - min_part * (slots - 1);
    for (long p = min_part; p <= hi; ++p) {
      c.parts.push_back(p);
      rec(remaining - p, slots - 1);
      c.parts.pop_back();
    }
  };
  rec(total, parts);
  return count;
}

std::vector<Composition> all_compositions(long total, int parts, long min_part) {
  std::vector<Composition> out;
  for_each_composition(total, parts, min_part, [&](const Composition& c) { out.push_back(c); });
  return out;
}

}  // namespace sweepcover
