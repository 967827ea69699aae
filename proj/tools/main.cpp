#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "sweepcover/bounds.hpp"
#include "sweepcover/errors.hpp"
#include "sweepcover/recurrence.hpp"
#include "sweepcover/report_io.hpp"
#include "sweepcover/series.hpp"
#include "sweepcover/singularity.hpp"
#include "sweepcover/tree_poset.hpp"

namespace {

using namespace sweepcover;

constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;      // caps exceeded or no numeric convergence
constexpr int kExitInconsistent = 3;  // independent engines disagree

int write_to(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return kExitUsage;
  }
  write(file);
  return file.good() ? 0 : kExitUsage;
}

// The recurrence table must be an exact fixed point of the generating
// function equation; this cross-checks the two engines on every run.
bool table_satisfies_ogf(const DscTable& table) {
  IntegerSeries y(table.kmax());
  for (int k = 0; k <= table.kmax(); ++k) y[k] = table.f(k);
  return phi_apply(table.branching, y) == y;
}

struct EnumerateConfig {
  int n = 2;
  int kmax = 20;
  std::string format = "csv";
  std::string out;
  bool totals = false;
  std::string convention = "k1";
};

int run_enumerate(const EnumerateConfig& cfg) {
  const DscTable table = f_table(cfg.n, cfg.kmax);
  if (!table_satisfies_ogf(table)) {
    std::cerr << "error: recurrence table is not a fixed point of the generating function\n";
    return kExitInconsistent;
  }
  const TotalConvention conv =
      cfg.convention == "k0" ? TotalConvention::root_at_k0 : TotalConvention::root_at_k1;
  return write_to(cfg.out, [&](std::ostream& os) {
    if (cfg.format == "json")
      io::enumeration_json(os, table, cfg.totals, conv);
    else
      io::enumeration_csv(os, table, cfg.totals, conv);
  });
}

struct OracleConfig {
  int n = 2;
  int k = 2;
  int depth = 3;
  std::string format = "text";
  std::string out;
  std::size_t max_nodes = 1'000'000;
  std::uint64_t max_antichains = 10'000'000;
};

int run_oracle(const OracleConfig& cfg) {
  CensusOptions opts;
  opts.max_nodes = cfg.max_nodes;
  opts.max_antichains = cfg.max_antichains;

  const BigInt census = census_lower_dsc(cfg.n, cfg.k, cfg.depth, opts);
  const BigInt census_next = census_lower_dsc(cfg.n, cfg.k, cfg.depth + 1, opts);
  const BigInt recurrence = f_table(cfg.n, cfg.k).f(cfg.k);
  const bool stabilized = census == census_next;
  const bool match = census == recurrence;

  const int rc = write_to(cfg.out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      nlohmann::json doc{{"n", cfg.n},
                         {"k", cfg.k},
                         {"depth", cfg.depth},
                         {"census", census.get_str()},
                         {"census_depth_plus_1", census_next.get_str()},
                         {"recurrence", recurrence.get_str()},
                         {"stabilized", stabilized},
                         {"match", match}};
      os << doc.dump(2) << '\n';
    } else {
      os << "n=" << cfg.n << '\n'
         << "k=" << cfg.k << '\n'
         << "depth=" << cfg.depth << '\n'
         << "census=" << census.get_str() << '\n'
         << "census_depth_plus_1=" << census_next.get_str() << '\n'
         << "recurrence=" << recurrence.get_str() << '\n'
         << "stabilized=" << (stabilized ? "true" : "false") << '\n'
         << "match=" << (match ? "true" : "false") << '\n';
    }
  });
  if (rc != 0) return rc;
  if (!match || !stabilized) {
    std::cerr << "error: oracle census disagrees with the recurrence engine\n";
    return kExitInconsistent;
  }
  return 0;
}

struct SingularityConfig {
  int n = 2;
  double tol = 1e-12;
  std::string format = "csv";
  std::string out;
};

int run_singularity(const SingularityConfig& cfg) {
  const SingularityReport report = solve_singularity(cfg.n, cfg.tol);
  return write_to(cfg.out, [&](std::ostream& os) {
    if (cfg.format == "json")
      io::singularity_json(os, report);
    else
      io::singularity_csv(os, report);
  });
}

struct AsymptoticsConfig {
  int n = 2;
  int kmax = 300;
  std::string format = "csv";
  std::string out;
};

int run_asymptotics(const AsymptoticsConfig& cfg) {
  const DscTable table = f_table(cfg.n, cfg.kmax);
  if (!table_satisfies_ogf(table)) {
    std::cerr << "error: recurrence table is not a fixed point of the generating function\n";
    return kExitInconsistent;
  }
  const SingularityReport report = solve_singularity(cfg.n);
  const auto rows = asymptotic_table(table, report);

  int crossing = -1;
  BigInt npow(1);
  for (int k = 1; k <= table.kmax(); ++k) {
    npow *= cfg.n;
    if (table.f(k) > npow) {
      crossing = k;
      break;
    }
  }

  return write_to(cfg.out, [&](std::ostream& os) {
    if (cfg.format == "svg")
      io::asymptotics_svg(os, report, rows);
    else if (cfg.format == "json")
      io::asymptotics_json(os, report, rows, crossing);
    else
      io::asymptotics_csv(os, report, rows, crossing);
  });
}

struct BoundsConfig {
  std::string grid = "24:3:4";
  std::string format = "csv";
  std::string out;
};

bool parse_grid(const std::string& spec, long& nmax, int& mmax, long& kmax) {
  std::istringstream in(spec);
  char c1 = 0, c2 = 0;
  if (!(in >> nmax >> c1 >> mmax >> c2 >> kmax)) return false;
  if (c1 != ':' || c2 != ':') return false;
  if (!in.eof()) {
    in >> std::ws;
    if (!in.eof()) return false;
  }
  return nmax >= 1 && mmax >= 1 && kmax >= 1;
}

int run_bounds(const BoundsConfig& cfg) {
  long nmax = 0, kmax = 0;
  int mmax = 0;
  if (!parse_grid(cfg.grid, nmax, mmax, kmax)) {
    std::cerr << "error: malformed grid spec '" << cfg.grid
              << "' (expected NMAX:MMAX:KMAX, e.g. 24:3:4)\n";
    return kExitUsage;
  }

  std::vector<io::BoundsRow> rows;
  for (long n = 1; n <= nmax; ++n)
    for (int m = 1; m <= mmax; ++m)
      for (long k = 1; k <= kmax; ++k)
        if (n >= static_cast<long>(m) * k)
          rows.push_back(io::BoundsRow{evaluate_bounds_case(n, m, k),
                                       check_schur_extremes(n, m, k)});

  return write_to(cfg.out, [&](std::ostream& os) {
    if (cfg.format == "json")
      io::bounds_json(os, nmax, mmax, kmax, rows);
    else
      io::bounds_csv(os, nmax, mmax, kmax, rows);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration, asymptotics and bound validation for decorated sweep covers "
               "in n-ary tree posets"};
  app.require_subcommand(1);

  EnumerateConfig ecfg;
  auto* enumerate = app.add_subcommand("enumerate", "Exact counts f_n(k) for k = 1..kmax");
  enumerate->add_option("--n", ecfg.n, "branching factor")->check(CLI::Range(2, 64))->required();
  enumerate->add_option("--kmax", ecfg.kmax, "largest colour count")->check(CLI::Range(1, 2000));
  enumerate->add_option("--format", ecfg.format)->check(CLI::IsMember({"csv", "json"}));
  enumerate->add_option("--out", ecfg.out, "output path (default stdout)");
  enumerate->add_flag("--totals", ecfg.totals, "add the total count column (root singleton included)");
  enumerate->add_option("--total-convention", ecfg.convention,
                        "where the root singleton is booked: k1 (one colour) or k0")
      ->check(CLI::IsMember({"k1", "k0"}));

  OracleConfig ocfg;
  auto* oracle = app.add_subcommand(
      "oracle", "Brute-force census on a depth-truncated tree, checked against the recurrence");
  oracle->add_option("--n", ocfg.n, "branching factor")->check(CLI::Range(2, 16))->required();
  oracle->add_option("--k", ocfg.k, "colour count")->check(CLI::Range(1, 16))->required();
  oracle->add_option("--depth", ocfg.depth, "truncation depth (depth >= k+1 matches the infinite tree)")
      ->check(CLI::Range(1, 32))
      ->required();
  oracle->add_option("--format", ocfg.format)->check(CLI::IsMember({"text", "json"}));
  oracle->add_option("--out", ocfg.out);
  oracle->add_option("--max-nodes", ocfg.max_nodes, "tree size cap");
  oracle->add_option("--max-antichains", ocfg.max_antichains, "enumeration cap");

  SingularityConfig scfg;
  auto* singularity = app.add_subcommand(
      "singularity", "Dominant square-root singularity and growth constants");
  singularity->add_option("--n", scfg.n, "branching factor")->check(CLI::Range(2, 64))->required();
  singularity->add_option("--tol", scfg.tol, "Newton residual tolerance")
      ->check(CLI::PositiveNumber);
  singularity->add_option("--format", scfg.format)->check(CLI::IsMember({"csv", "json"}));
  singularity->add_option("--out", scfg.out);

  AsymptoticsConfig acfg;
  auto* asymptotics = app.add_subcommand(
      "asymptotics", "k-th roots and asymptotic-shape ratios, as CSV/JSON or a two-panel SVG");
  asymptotics->add_option("--n", acfg.n, "branching factor")->check(CLI::Range(2, 64))->required();
  asymptotics->add_option("--kmax", acfg.kmax, "table length")->check(CLI::Range(1, 400));
  asymptotics->add_option("--format", acfg.format)->check(CLI::IsMember({"csv", "json", "svg"}));
  asymptotics->add_option("--out", acfg.out);

  BoundsConfig bcfg;
  auto* bounds = app.add_subcommand(
      "bounds", "Exact extremal composition products against the closed-form bounds");
  bounds->add_option("--grid", bcfg.grid, "grid spec NMAX:MMAX:KMAX (default 24:3:4)");
  bounds->add_option("--format", bcfg.format)->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--out", bcfg.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(ecfg);
    if (oracle->parsed()) return run_oracle(ocfg);
    if (singularity->parsed()) return run_singularity(scfg);
    if (asymptotics->parsed()) return run_asymptotics(acfg);
    if (bounds->parsed()) return run_bounds(bcfg);
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const convergence_error& e) {
    std::cerr << "error: " << e.what() << " (last iterate z=" << e.last_z << ", y=" << e.last_y
              << ", residual=" << e.last_residual << ")\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return kExitUsage;
}
