#include "sweepcover/singularity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sweepcover/errors.hpp"

namespace sweepcover {

namespace {

// Phi(z, y) = sum_u C(n,u) B_u(z) y^{n-u} and its partial derivatives,
// evaluated in double from the exact coefficient triangle.
class PhiEvaluator {
 public:
  explicit PhiEvaluator(int branching) : n_(branching) {
    scaled_.resize(static_cast<std::size_t>(n_) + 1);
    for (int u = 0; u <= n_; ++u) {
      const BigInt cnu = binomial(static_cast<unsigned long>(n_), static_cast<unsigned long>(u));
      const IntPolynomial bu = touchard(static_cast<unsigned>(u));
      auto& row = scaled_[static_cast<std::size_t>(u)];
      row.resize(static_cast<std::size_t>(u) + 1, 0.0);
      for (int j = 0; j <= u; ++j) {
        BigInt c = cnu * bu.coeff(static_cast<std::size_t>(j));
        row[static_cast<std::size_t>(j)] = c.get_d();
      }
    }
  }

  double phi(double z, double y) const {
    double acc = 0;
    for (int u = 0; u <= n_; ++u) acc += poly(u, z) * ipow(y, n_ - u);
    return acc;
  }
  double phi_z(double z, double y) const {
    double acc = 0;
    for (int u = 0; u <= n_; ++u) acc += dpoly(u, z) * ipow(y, n_ - u);
    return acc;
  }
  double phi_y(double z, double y) const {
    double acc = 0;
    for (int u = 0; u < n_; ++u) acc += poly(u, z) * (n_ - u) * ipow(y, n_ - u - 1);
    return acc;
  }
  double phi_zy(double z, double y) const {
    double acc = 0;
    for (int u = 0; u < n_; ++u) acc += dpoly(u, z) * (n_ - u) * ipow(y, n_ - u - 1);
    return acc;
  }
  double phi_yy(double z, double y) const {
    double acc = 0;
    for (int u = 0; u + 1 < n_; ++u)
      acc += poly(u, z) * (n_ - u) * (n_ - u - 1) * ipow(y, n_ - u - 2);
    return acc;
  }

 private:
  static double ipow(double x, int e) {
    double r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
  }
  double poly(int u, double z) const {
    const auto& row = scaled_[static_cast<std::size_t>(u)];
    double acc = 0;
    for (std::size_t j = row.size(); j-- > 0;) acc = acc * z + row[j];
    return acc;
  }
  double dpoly(int u, double z) const {
    const auto& row = scaled_[static_cast<std::size_t>(u)];
    double acc = 0;
    for (std::size_t j = row.size(); j-- > 1;) acc = acc * z + row[j] * static_cast<double>(j);
    return acc;
  }

  int n_;
  std::vector<std::vector<double>> scaled_;  // C(n,u) * S(u,j), indexed [u][j]
};

// Truncated series evaluation at a real point, carried in 512-bit floats so
// huge coefficients cannot overflow on the way in.
double eval_table_at(const DscTable& table, double x) {
  mpf_class acc(0, 512);
  mpf_class xf(x, 512);
  for (int k = table.kmax(); k >= 0; --k) {
    acc *= xf;
    acc += mpf_class(table.f(k), 512);
  }
  return acc.get_d();
}

struct NewtonOutcome {
  bool converged = false;
  double z = 0, y = 0, residual = 0;
  int iterations = 0;
};

NewtonOutcome newton_2d(const PhiEvaluator& phi, double z, double y, double tol,
                        int max_iterations) {
  NewtonOutcome out;
  out.z = z;
  out.y = y;
  for (int it = 0; it <= max_iterations; ++it) {
    const double r1 = phi.phi(z, y) - y;
    const double r2 = phi.phi_y(z, y) - 1.0;
    const double norm = std::max(std::fabs(r1), std::fabs(r2));
    out.z = z;
    out.y = y;
    out.residual = norm;
    out.iterations = it;
    if (norm < tol) {
      out.converged = true;
      return out;
    }
    if (it == max_iterations) break;

    const double a = phi.phi_z(z, y), b = phi.phi_y(z, y) - 1.0;
    const double c = phi.phi_zy(z, y), d = phi.phi_yy(z, y);
    const double det = a * d - b * c;
    if (!std::isfinite(det) || std::fabs(det) < 1e-300) break;
    z -= (r1 * d - r2 * b) / det;
    y -= (a * r2 - c * r1) / det;
    if (!std::isfinite(z) || !std::isfinite(y)) break;
  }
  return out;
}

// Walks z upward through (0, 1/n); for each z the fixed point y(z) of
// y <- Phi(z, y) exists below the singularity and Phi_y(z, y(z)) climbs
// toward 1. Brackets the first z where the iteration stops settling.
std::pair<double, double> grid_seed(const PhiEvaluator& phi, int branching) {
  const int steps = 4000;
  double best_z = 0, best_y = 0;
  for (int i = 1; i < steps; ++i) {
    const double z = (1.0 / branching) * i / steps;
    double y = best_y;
    bool settled = false;
    for (int it = 0; it < 20000; ++it) {
      const double next = phi.phi(z, y);
      if (!std::isfinite(next) || next > 1e12) break;
      if (std::fabs(next - y) < 1e-14 * (1.0 + std::fabs(next))) {
        y = next;
        settled = true;
        break;
      }
      y = next;
    }
    if (!settled || phi.phi_y(z, y) >= 1.0) {
      return {best_z > 0 ? best_z : z, best_z > 0 ? best_y : y};
    }
    best_z = z;
    best_y = y;
  }
  return {best_z, best_y};
}

}  // namespace

std::pair<double, double> characteristic_residual(int branching, double z, double y) {
  if (branching < 2) throw std::invalid_argument("characteristic_residual: branching must be >= 2");
  const PhiEvaluator phi(branching);
  return {phi.phi(z, y) - y, phi.phi_y(z, y) - 1.0};
}

SingularityReport solve_singularity(int branching, double tol, const SingularityOptions& options) {
  if (branching < 2) throw std::invalid_argument("solve_singularity: branching must be >= 2");
  if (!(tol > 0)) throw std::invalid_argument("solve_singularity: tol must be positive");

  const PhiEvaluator phi(branching);

  double z0, y0;
  if (options.initial_guess) {
    z0 = options.initial_guess->first;
    y0 = options.initial_guess->second;
  } else {
    const DscTable table = f_table(branching, options.seed_order);
    const int k = table.kmax();
    mpf_class ratio(0, 256);
    ratio = mpf_class(table.f(k - 1), 256) / mpf_class(table.f(k), 256);
    z0 = ratio.get_d();
    y0 = eval_table_at(table, z0 * (1.0 - 1e-3));
  }

  NewtonOutcome outcome = newton_2d(phi, z0, y0, tol, options.max_iterations);
  if (!outcome.converged) {
    const auto [gz, gy] = grid_seed(phi, branching);
    outcome = newton_2d(phi, gz, gy, tol, options.max_iterations);
  }
  if (!outcome.converged)
    throw convergence_error("solve_singularity: Newton iteration did not converge", outcome.z,
                            outcome.y, outcome.residual);

  const double r = outcome.z, y = outcome.y;
  const double pz = phi.phi_z(r, y);
  const double pyy = phi.phi_yy(r, y);
  if (!(r > 0) || !(y > 0) || !(pz > 0) || !(pyy > 0))
    throw convergence_error("solve_singularity: converged to a non-physical point", r, y,
                            outcome.residual);

  SingularityReport report;
  report.branching = branching;
  report.radius = r;
  report.y0 = y;
  report.sqrt_coeff = std::sqrt(2.0 * r * pz / pyy);
  report.growth = 1.0 / r;
  report.asymptotic_const = report.sqrt_coeff / (2.0 * std::sqrt(std::numbers::pi));
  report.residual_norm = outcome.residual;
  report.newton_iterations = outcome.iterations;
  report.growth_exceeds_branching = report.growth > static_cast<double>(branching);
  return report;
}

double log_big(const BigInt& value) {
  if (value <= 0) throw std::invalid_argument("log_big: value must be positive");
  signed long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::numbers::ln2;
}

std::vector<AsymptoticRow> asymptotic_table(const DscTable& table,
                                            const SingularityReport& report) {
  const double log_growth = std::log(report.growth);
  std::vector<AsymptoticRow> rows;
  rows.reserve(static_cast<std::size_t>(table.kmax()));
  for (int k = 1; k <= table.kmax(); ++k) {
    const double lf = log_big(table.f(k));
    AsymptoticRow row;
    row.k = k;
    row.root_k = std::exp(lf / k);
    row.ratio = std::exp(lf + 1.5 * std::log(static_cast<double>(k)) - k * log_growth);
    rows.push_back(row);
  }
  return rows;
}

std::vector<AsymptoticRow> asymptotic_table(int branching, int kmax,
                                            const SingularityReport& report) {
  return asymptotic_table(f_table(branching, kmax), report);
}

GrowthVerdict verify_exponential_growth(int branching, int kmax, double band) {
  GrowthVerdict verdict;
  verdict.report = solve_singularity(branching);
  verdict.growth_exceeds_branching = verdict.report.growth_exceeds_branching;
  verdict.margin = verdict.report.growth - branching;

  const DscTable table = f_table(branching, kmax);
  const auto rows = asymptotic_table(table, verdict.report);

  BigInt npow(1);  // n^k alongside k, for the exact crossing test
  for (int k = 1; k <= table.kmax(); ++k) {
    npow *= branching;
    if (table.f(k) > npow) {
      verdict.crossing_k = k;
      break;
    }
  }

  const int quartile_start = std::max(1, (3 * kmax) / 4);
  double worst = 0;
  for (const auto& row : rows) {
    if (row.k < quartile_start) continue;
    worst = std::max(worst, std::fabs(row.ratio / verdict.report.asymptotic_const - 1.0));
  }
  verdict.max_band_deviation = worst;
  verdict.ratio_band_ok = worst <= band;
  return verdict;
}

}  // namespace sweepcover
