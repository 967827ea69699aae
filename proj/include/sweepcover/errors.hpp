#pragma once

#include <stdexcept>
#include <string>

namespace sweepcover {

// Thrown when an enumeration or table build would exceed its configured budget.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an iterative numeric routine fails to converge. Carries the
// last iterate so callers can report diagnostics.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double z, double y, double residual)
      : std::runtime_error(what), last_z(z), last_y(y), last_residual(residual) {}

  double last_z;
  double last_y;
  double last_residual;
};

}  // namespace sweepcover
