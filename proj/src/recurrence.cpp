#include "sweepcover/recurrence.hpp"

#include <stdexcept>

namespace sweepcover {

DscTable f_table(int branching, int kmax, const TableLimits& limits) {
  if (branching < 2) throw std::invalid_argument("f_table: branching must be >= 2");
  if (kmax < 0) throw std::invalid_argument("f_table: kmax must be >= 0");
  if (kmax > limits.max_kmax)
    throw std::invalid_argument("f_table: kmax exceeds the configured table budget");

  const int n = branching;
  const std::size_t len = static_cast<std::size_t>(kmax) + 1;

  DscTable table;
  table.branching = n;
  table.values.assign(len, BigInt(0));
  auto& f = table.values;

  // powers[e] = G(z)^e where G = sum_{j>=1} f(j) z^j; extended one
  // coefficient per step. powers[0] is the unit series.
  std::vector<std::vector<BigInt>> powers(static_cast<std::size_t>(n) + 1,
                                          std::vector<BigInt>(len, BigInt(0)));
  powers[0][0] = 1;

  std::vector<BigInt> choose(static_cast<std::size_t>(n) + 1);
  for (int u = 0; u <= n; ++u) choose[static_cast<std::size_t>(u)] = binomial(n, u);

  for (int k = 1; k <= kmax; ++k) {
    // Extend the convolution powers to index k. The index-k entry of G^e for
    // e >= 2 only involves f(1..k-1); G^1 is patched after f(k) is known.
    for (int e = 2; e <= n; ++e) {
      BigInt acc(0);
      const auto& lower = powers[static_cast<std::size_t>(e) - 1];
      for (int j = 1; j < k; ++j) acc += f[static_cast<std::size_t>(j)] * lower[static_cast<std::size_t>(k - j)];
      powers[static_cast<std::size_t>(e)][static_cast<std::size_t>(k)] = acc;
    }

    BigInt value(0);
    for (int u = 0; u <= n; ++u) {
      const auto& power = powers[static_cast<std::size_t>(n - u)];
      BigInt inner(0);
      for (int kp = 0; kp <= u && kp <= k; ++kp) {
        const BigInt s = stirling2(static_cast<unsigned>(u), static_cast<unsigned>(kp));
        if (s == 0) continue;  // also skips the k'=0 slot that would read G^1 at index k
        inner += s * power[static_cast<std::size_t>(k - kp)];
      }
      value += choose[static_cast<std::size_t>(u)] * inner;
    }
    f[static_cast<std::size_t>(k)] = value;
    if (n >= 1) powers[1][static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k)];
  }

  return table;
}

BigInt total_dsc(const DscTable& table, int k, TotalConvention convention) {
  if (k < 0 || k > table.kmax()) throw std::invalid_argument("total_dsc: k out of range");
  BigInt v = table.f(k);
  switch (convention) {
    case TotalConvention::root_at_k1:
      if (k == 1) v += 1;
      break;
    case TotalConvention::root_at_k0:
      if (k == 0) v += 1;
      break;
  }
  return v;
}

BigInt total_dsc(int branching, int k, TotalConvention convention) {
  return total_dsc(f_table(branching, k < 1 ? 1 : k), k, convention);
}

GrowthCheck check_growth_step(const DscTable& table) {
  GrowthCheck result;
  for (int k = 2; k <= table.kmax(); ++k) {
    if (table.f(k) < table.branching * table.f(k - 1)) {
      result.passed = false;
      result.first_violation = k;
      return result;
    }
  }
  return result;
}

}  // namespace sweepcover
