#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sweepcover/recurrence.hpp"

namespace sweepcover {

// Numerical solution of the characteristic system Phi(z,y) = y,
// Phi_y(z,y) = 1 locating the dominant square-root singularity of the
// generating function, plus the derived asymptotic constants.
struct SingularityReport {
  int branching = 0;
  double radius = 0;            // R, dominant singularity
  double y0 = 0;                // F(R)
  double sqrt_coeff = 0;        // c in F = y0 - c*sqrt(1 - z/R) + ...
  double growth = 0;            // D = 1/R
  double asymptotic_const = 0;  // C = c / (2 sqrt(pi))
  double residual_norm = 0;
  int newton_iterations = 0;
  bool growth_exceeds_branching = false;  // D > n, reported rather than assumed
};

struct SingularityOptions {
  int max_iterations = 100;
  int seed_order = 121;  // table length backing the coefficient-ratio seed
  std::optional<std::pair<double, double>> initial_guess;  // (z, y) override
};

/// Residuals (Phi(z,y) - y, Phi_y(z,y) - 1), with Phi evaluated from exact
/// Touchard coefficients in double precision.
std::pair<double, double> characteristic_residual(int branching, double z, double y);

/// Two-dimensional Newton iteration on the characteristic system. Seeds from
/// the coefficient ratio f(K-1)/f(K) of an exact table and a damped series
/// evaluation; a coarse grid search over z in (0, 1/n) backs up a failed
/// Newton run. Throws convergence_error (with the last iterate) on failure.
SingularityReport solve_singularity(int branching, double tol = 1e-12,
                                    const SingularityOptions& options = {});

struct AsymptoticRow {
  int k = 0;
  double root_k = 0;  // f(k)^(1/k)
  double ratio = 0;   // f(k) / (k^(-3/2) D^k)
};

/// Natural log of a positive big integer, exact mantissa/exponent split.
double log_big(const BigInt& value);

/// Rows k = 1..kmax computed from the exact table via logarithms.
std::vector<AsymptoticRow> asymptotic_table(const DscTable& table, const SingularityReport& report);
std::vector<AsymptoticRow> asymptotic_table(int branching, int kmax, const SingularityReport& report);

struct GrowthVerdict {
  bool growth_exceeds_branching = false;
  double margin = 0;  // D - n
  bool ratio_band_ok = false;
  double max_band_deviation = 0;  // max |ratio/C - 1| over the last quartile
  int crossing_k = -1;            // smallest k with f(k) > n^k (exact comparison)
  SingularityReport report;
};

/// Checks D_n > n and that the ratio column has settled into the given band
/// around C_n over the last quartile of [1, kmax].
GrowthVerdict verify_exponential_growth(int branching, int kmax = 300, double band = 0.05);

}  // namespace sweepcover
