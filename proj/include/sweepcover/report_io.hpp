#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sweepcover/bounds.hpp"
#include "sweepcover/recurrence.hpp"
#include "sweepcover/singularity.hpp"

namespace sweepcover::io {

/// Fixed 12-significant-digit rendering used by every writer, so identical
/// runs emit identical bytes.
std::string real12(double value);

std::string composition_label(const Composition& c);  // e.g. "3+3"

void enumeration_csv(std::ostream& out, const DscTable& table, bool with_totals,
                     TotalConvention convention);
void enumeration_json(std::ostream& out, const DscTable& table, bool with_totals,
                      TotalConvention convention);

void singularity_csv(std::ostream& out, const SingularityReport& report);
void singularity_json(std::ostream& out, const SingularityReport& report);

void asymptotics_csv(std::ostream& out, const SingularityReport& report,
                     const std::vector<AsymptoticRow>& rows, int crossing_k);
void asymptotics_json(std::ostream& out, const SingularityReport& report,
                      const std::vector<AsymptoticRow>& rows, int crossing_k);

/// Two-panel plot: k-th root of f(k) against the growth constant and the
/// branching factor, and the ratio of f(k) to its asymptotic shape against
/// the limit constant.
void asymptotics_svg(std::ostream& out, const SingularityReport& report,
                     const std::vector<AsymptoticRow>& rows);

struct BoundsRow {
  BoundsCase bounds;
  SchurVerdict schur;
};

void bounds_csv(std::ostream& out, long nmax, int mmax, long kmax,
                const std::vector<BoundsRow>& rows);
void bounds_json(std::ostream& out, long nmax, int mmax, long kmax,
                 const std::vector<BoundsRow>& rows);

}  // namespace sweepcover::io
