#pragma once

#include <vector>

#include "sweepcover/combinatorics.hpp"

namespace sweepcover {

// Exact table of lower decorated-sweep-cover counts f_n(0..kmax). Doubles as
// the coefficient vector of the ordinary generating function: f_n(0) = 0.
struct DscTable {
  int branching = 0;
  std::vector<BigInt> values;

  int kmax() const { return static_cast<int>(values.size()) - 1; }
  const BigInt& f(int k) const { return values[static_cast<std::size_t>(k)]; }
};

struct TableLimits {
  int max_kmax = 5000;
};

/// Exact f_n(k) for k = 0..kmax via the sibling-group recurrence
///   f_n(k) = sum_{u=0}^{n} sum_{k'=0}^{u} C(n,u) S(u,k') [z^{k-k'}] G(z)^{n-u},
/// where G is the generating function of the partial table. The inner
/// composition sums are realized as incrementally extended convolution powers
/// (O(n * kmax^2) big-integer multiplications). Requires branching >= 2: the
/// unary tree has infinitely many lower maximal antichains and the recurrence
/// becomes self-referential.
DscTable f_table(int branching, int kmax, const TableLimits& limits = {});

enum class TotalConvention {
  root_at_k1,  // the root singleton counts as the extra 1-coloured cover
  root_at_k0,  // the extra cover is booked at k = 0 instead
};

/// Count of all decorated sweep covers with exactly k colours, i.e. f_n(k)
/// plus the root singleton under the chosen convention.
BigInt total_dsc(const DscTable& table, int k,
                 TotalConvention convention = TotalConvention::root_at_k1);
BigInt total_dsc(int branching, int k, TotalConvention convention = TotalConvention::root_at_k1);

struct GrowthCheck {
  bool passed = true;
  int first_violation = -1;  // smallest k with f(k) < n * f(k-1), -1 if none
};

/// Verifies f_n(k) >= n * f_n(k-1) for every 2 <= k <= kmax.
GrowthCheck check_growth_step(const DscTable& table);

}  // namespace sweepcover
