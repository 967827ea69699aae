#include "sweepcover/report_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace sweepcover::io {

using nlohmann::json;

std::string real12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string composition_label(const Composition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(c.parts[i]);
  }
  return s;
}

void enumeration_csv(std::ostream& out, const DscTable& table, bool with_totals,
                     TotalConvention convention) {
  out << (with_totals ? "k,f,total\n" : "k,f\n");
  for (int k = 1; k <= table.kmax(); ++k) {
    out << k << ',' << table.f(k).get_str();
    if (with_totals) out << ',' << total_dsc(table, k, convention).get_str();
    out << '\n';
  }
}

void enumeration_json(std::ostream& out, const DscTable& table, bool with_totals,
                      TotalConvention convention) {
  json rows = json::array();
  for (int k = 1; k <= table.kmax(); ++k) {
    json row{{"k", k}, {"f", table.f(k).get_str()}};
    if (with_totals) row["total"] = total_dsc(table, k, convention).get_str();
    rows.push_back(row);
  }
  json doc{{"n", table.branching}, {"kmax", table.kmax()}, {"rows", rows}};
  out << doc.dump(2) << '\n';
}

namespace {

json report_json(const SingularityReport& r) {
  return json{{"n", r.branching},
              {"R", r.radius},
              {"y0", r.y0},
              {"c", r.sqrt_coeff},
              {"D", r.growth},
              {"C", r.asymptotic_const},
              {"residual_norm", r.residual_norm},
              {"newton_iterations", r.newton_iterations},
              {"growth_exceeds_branching", r.growth_exceeds_branching}};
}

}  // namespace

void singularity_csv(std::ostream& out, const SingularityReport& r) {
  out << "n,R,y0,c,D,C,residual_norm,newton_iterations,growth_exceeds_branching\n";
  out << r.branching << ',' << real12(r.radius) << ',' << real12(r.y0) << ','
      << real12(r.sqrt_coeff) << ',' << real12(r.growth) << ',' << real12(r.asymptotic_const)
      << ',' << real12(r.residual_norm) << ',' << r.newton_iterations << ','
      << (r.growth_exceeds_branching ? "true" : "false") << '\n';
}

void singularity_json(std::ostream& out, const SingularityReport& r) {
  out << report_json(r).dump(2) << '\n';
}

void asymptotics_csv(std::ostream& out, const SingularityReport& report,
                     const std::vector<AsymptoticRow>& rows, int crossing_k) {
  out << "# constants: n=" << report.branching << ",D=" << real12(report.growth)
      << ",C=" << real12(report.asymptotic_const) << ",crossing_k=" << crossing_k << '\n';
  out << "k,f_root_k,ratio\n";
  for (const auto& row : rows)
    out << row.k << ',' << real12(row.root_k) << ',' << real12(row.ratio) << '\n';
}

void asymptotics_json(std::ostream& out, const SingularityReport& report,
                      const std::vector<AsymptoticRow>& rows, int crossing_k) {
  json jrows = json::array();
  for (const auto& row : rows)
    jrows.push_back(json{{"k", row.k}, {"f_root_k", row.root_k}, {"ratio", row.ratio}});
  json doc{{"constants",
            {{"n", report.branching},
             {"D", report.growth},
             {"C", report.asymptotic_const},
             {"crossing_k", crossing_k}}},
           {"rows", jrows}};
  out << doc.dump(2) << '\n';
}

namespace {

struct Panel {
  double x0, y0, width, height;  // drawing area, SVG coordinates
  double xmin, xmax, ymin, ymax;

  double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * width; }
  double py(double y) const { return y0 + height - (y - ymin) / (ymax - ymin) * height; }
};

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void axes(std::ostream& out, const Panel& p, const std::string& title) {
  out << "<rect x=\"" << coord(p.x0) << "\" y=\"" << coord(p.y0) << "\" width=\""
      << coord(p.width) << "\" height=\"" << coord(p.height)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = p.xmin + (p.xmax - p.xmin) * i / 4;
    const double yv = p.ymin + (p.ymax - p.ymin) * i / 4;
    out << "<text x=\"" << coord(p.px(xv)) << "\" y=\"" << coord(p.y0 + p.height + 16)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << real12(xv).substr(0, 6)
        << "</text>\n";
    out << "<text x=\"" << coord(p.x0 - 6) << "\" y=\"" << coord(p.py(yv) + 3)
        << "\" font-size=\"10\" text-anchor=\"end\">" << real12(yv).substr(0, 7) << "</text>\n";
  }
  out << "<text x=\"" << coord(p.x0 + p.width / 2) << "\" y=\"" << coord(p.y0 - 10)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << title << "</text>\n";
  out << "<text x=\"" << coord(p.x0 + p.width / 2) << "\" y=\"" << coord(p.y0 + p.height + 32)
      << "\" font-size=\"11\" text-anchor=\"middle\">k</text>\n";
}

void hline(std::ostream& out, const Panel& p, double y, const std::string& colour, bool dotted,
           const std::string& label) {
  out << "<line x1=\"" << coord(p.x0) << "\" y1=\"" << coord(p.py(y)) << "\" x2=\""
      << coord(p.x0 + p.width) << "\" y2=\"" << coord(p.py(y)) << "\" stroke=\"" << colour
      << "\"" << (dotted ? " stroke-dasharray=\"3,3\"" : "") << "/>\n";
  out << "<text x=\"" << coord(p.x0 + p.width + 4) << "\" y=\"" << coord(p.py(y) + 3)
      << "\" font-size=\"10\" fill=\"" << colour << "\">" << label << "</text>\n";
}

template <typename Get>
void polyline(std::ostream& out, const Panel& p, const std::vector<AsymptoticRow>& rows,
              const std::string& colour, Get get) {
  out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.2\" points=\"";
  for (const auto& row : rows) out << coord(p.px(row.k)) << ',' << coord(p.py(get(row))) << ' ';
  out << "\"/>\n";
}

}  // namespace

void asymptotics_svg(std::ostream& out, const SingularityReport& report,
                     const std::vector<AsymptoticRow>& rows) {
  const double kmax = rows.empty() ? 1.0 : rows.back().k;

  double root_lo = report.branching, root_hi = report.growth;
  double ratio_lo = report.asymptotic_const, ratio_hi = report.asymptotic_const;
  for (const auto& row : rows) {
    root_lo = std::min(root_lo, row.root_k);
    root_hi = std::max(root_hi, row.root_k);
    ratio_lo = std::min(ratio_lo, row.ratio);
    ratio_hi = std::max(ratio_hi, row.ratio);
  }

  Panel left{70, 50, 360, 300, 1, kmax, root_lo * 0.97, root_hi * 1.03};
  Panel right{560, 50, 360, 300, 1, kmax, ratio_lo * 0.97, ratio_hi * 1.03};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"420\" "
         "viewBox=\"0 0 1000 420\">\n";
  out << "<rect width=\"1000\" height=\"420\" fill=\"white\"/>\n";

  axes(out, left, "k-th root of f(k), n = " + std::to_string(report.branching));
  hline(out, left, report.growth, "#555555", false, "D");
  hline(out, left, report.branching, "#999999", true, "n");
  polyline(out, left, rows, "#1f6fb4", [](const AsymptoticRow& r) { return r.root_k; });

  axes(out, right, "f(k) / (k^(-3/2) D^k)");
  hline(out, right, report.asymptotic_const, "#555555", false, "C");
  polyline(out, right, rows, "#c23b22", [](const AsymptoticRow& r) { return r.ratio; });

  out << "</svg>\n";
}

void bounds_csv(std::ostream& out, long nmax, int mmax, long kmax,
                const std::vector<BoundsRow>& rows) {
  out << "n,m,k,min_composition,min_product,max_composition,max_product,log_lower,log_upper,"
         "lower_holds,upper_holds,min_is_balanced,max_is_concentrated\n";
  for (const auto& row : rows) {
    const auto& b = row.bounds;
    const auto& s = row.schur;
    out << b.n << ',' << b.m << ',' << b.k << ',' << composition_label(b.min_composition) << ','
        << b.min_product.get_str() << ',' << composition_label(b.max_composition) << ','
        << b.max_product.get_str() << ',' << real12(b.log_lower) << ',' << real12(b.log_upper)
        << ',' << (b.lower_holds ? "true" : "false") << ',' << (b.upper_holds ? "true" : "false")
        << ',' << (s.min_is_balanced ? "true" : "false") << ','
        << (s.max_is_concentrated ? "true" : "false") << '\n';
  }

  // validity summary per (m, k) slice
  std::size_t lower_ok = 0, upper_ok = 0;
  for (const auto& row : rows) {
    lower_ok += row.bounds.lower_holds;
    upper_ok += row.bounds.upper_holds;
  }
  out << "# grid: n<=" << nmax << ",m<=" << mmax << ",k<=" << kmax << '\n';
  out << "# lower_holds: " << lower_ok << "/" << rows.size() << ", upper_holds: " << upper_ok
      << "/" << rows.size() << '\n';
  for (int m = 1; m <= mmax; ++m) {
    for (long k = 1; k <= kmax; ++k) {
      long feasible = 0, holds = 0, contiguous_from = -1;
      for (const auto& row : rows) {
        if (row.bounds.m != m || row.bounds.k != k) continue;
        ++feasible;
        if (row.bounds.upper_holds) {
          ++holds;
          if (contiguous_from < 0) contiguous_from = row.bounds.n;
        } else {
          contiguous_from = -1;
        }
      }
      if (feasible == 0) continue;
      out << "# upper m=" << m << " k=" << k << ": holds " << holds << "/" << feasible;
      if (contiguous_from > 0)
        out << ", holds for all feasible n >= " << contiguous_from;
      else
        out << ", no contiguous validity tail";
      out << '\n';
    }
  }
}

void bounds_json(std::ostream& out, long nmax, int mmax, long kmax,
                 const std::vector<BoundsRow>& rows) {
  json jrows = json::array();
  std::size_t lower_ok = 0, upper_ok = 0;
  for (const auto& row : rows) {
    const auto& b = row.bounds;
    lower_ok += b.lower_holds;
    upper_ok += b.upper_holds;
    jrows.push_back(json{{"n", b.n},
                         {"m", b.m},
                         {"k", b.k},
                         {"min_composition", composition_label(b.min_composition)},
                         {"min_product", b.min_product.get_str()},
                         {"max_composition", composition_label(b.max_composition)},
                         {"max_product", b.max_product.get_str()},
                         {"log_lower", b.log_lower},
                         {"log_upper", b.log_upper},
                         {"lower_holds", b.lower_holds},
                         {"upper_holds", b.upper_holds},
                         {"min_is_balanced", row.schur.min_is_balanced},
                         {"max_is_concentrated", row.schur.max_is_concentrated}});
  }
  json doc{{"grid", {{"nmax", nmax}, {"mmax", mmax}, {"kmax", kmax}}},
           {"summary",
            {{"cases", rows.size()}, {"lower_holds", lower_ok}, {"upper_holds", upper_ok}}},
           {"rows", jrows}};
  out << doc.dump(2) << '\n';
}

}  // namespace sweepcover::io
