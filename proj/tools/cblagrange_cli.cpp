// cblagrange: nodes, coefficients, checkerboard grids, Lagrange bases and
// interpolation from the command line.
//
// Exit codes: 0 success, 1 validation failure, 2 numerical failure, 64 usage.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cblagrange/errors.hpp"
#include "cblagrange/interp.hpp"
#include "cblagrange/io.hpp"
#include "cblagrange/presets.hpp"
#include "cblagrange/verify.hpp"

namespace {

using namespace cblagrange;
using io::json;

constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitUsage = 64;

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

// The grid in a grid file, plus its point set when the file carries one.
struct LoadedGrid {
  std::shared_ptr<const GridInstance> grid;
  std::optional<CheckerboardSet> set;
};

LoadedGrid load_grid(const std::string& path) {
  const auto j = io::read_json(path);
  LoadedGrid out{std::make_shared<const GridInstance>(io::grid_from_json(j)), std::nullopt};
  if (j.contains("points")) out.set = io::checkerboard_from_json(j);
  return out;
}

// Points stored in the file are used when their tau matches; otherwise S_tau
// is rebuilt from the grid.
CheckerboardSet select_set(const LoadedGrid& g, std::optional<int> tau) {
  if (g.set && (!tau || *tau == g.set->tau)) return *g.set;
  return build_checkerboard(*g.grid, tau.value_or(0));
}

struct NodesArgs {
  std::string coeffs;
  std::string out = "-";
};

int run_nodes(const NodesArgs& a) {
  const auto c = io::coeffs_from_json(io::read_json(a.coeffs));
  io::write_json(a.out, io::to_json(nodes_from_coeffs(c)));
  return 0;
}

struct CoeffsArgs {
  std::string nodes;
  bool normalize_a0 = false;
  std::string out = "-";
};

int run_coeffs(const CoeffsArgs& a) {
  const auto nodes = io::nodes_from_json(io::read_json(a.nodes));
  InverseMapOptions opts;
  // Even n leaves a one-parameter family; without --normalize-a0 keep the a_0
  // of the affinely mapped reference family.
  if (!a.normalize_a0 && nodes.n() >= 2 && nodes.n() % 2 == 0) {
    opts.even_a0 = reference_coeffs(nodes).a(0);
  }
  io::write_json(a.out, io::to_json(coeffs_from_nodes(nodes, opts)));
  return 0;
}

struct GridArgs {
  std::string preset;
  int n = -1;
  std::string xcoeffs;
  std::string ycoeffs;
  int sigma = -1;
  bool random = false;
  std::uint64_t seed = 0;
  int tau = 0;
  std::string out = "-";
};

GridInstance make_grid(const GridArgs& a) {
  if (!a.preset.empty()) {
    if (a.n < 0) throw CLI::ValidationError("--preset requires --n");
    if (a.preset == "padua") return padua_grid(a.n);
    return chebyshev_grid(a.n);
  }
  if (a.random) {
    if (a.n < 1 || a.sigma < 0) throw CLI::ValidationError("--random requires --n >= 1 and --sigma");
    return random_grid(a.n, a.sigma, a.seed);
  }
  if (a.xcoeffs.empty() || a.ycoeffs.empty()) {
    throw CLI::ValidationError("give --preset, --random, or both --xcoeffs and --ycoeffs");
  }
  auto xc = io::coeffs_from_json(io::read_json(a.xcoeffs));
  auto yc = io::coeffs_from_json(io::read_json(a.ycoeffs));
  if (a.sigma >= 0 && yc.n() != xc.n() + a.sigma) {
    throw ValidationError("y coefficients have length " + std::to_string(yc.n()) + ", expected n + sigma = " +
                          std::to_string(xc.n() + a.sigma));
  }
  return GridInstance::from_coeffs(std::move(xc), std::move(yc));
}

int run_grid(const GridArgs& a) {
  const auto grid = make_grid(a);
  auto j = io::to_json(grid);
  const auto set = io::to_json(build_checkerboard(grid, a.tau));
  j["tau"] = set["tau"];
  j["points"] = set["points"];
  io::write_json(a.out, j);
  return 0;
}

struct BasisArgs {
  std::string grid;
  std::optional<int> tau;
  int lattice = 0;
  std::string out = "-";
};

int run_basis(const BasisArgs& a) {
  const auto g = load_grid(a.grid);
  const auto set = select_set(g, a.tau);
  require_on_grid(*g.grid, set);
  const auto bases = build_bases(g.grid, set);
  const auto& xs = g.grid->xnodes();
  const auto& ys = g.grid->ynodes();
  const auto coord = [&](double lo, double hi, int i) {
    return a.lattice == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (a.lattice - 1);
  };
  std::ostringstream csv;
  csv << "s,v,x,y,L\n";
  for (const auto& b : bases) {
    for (int iy = 0; iy < a.lattice; ++iy) {
      const double y = coord(ys[ys.size() - 1], ys[0], iy);
      for (int ix = 0; ix < a.lattice; ++ix) {
        const double x = coord(xs[xs.size() - 1], xs[0], ix);
        csv << b.anchor().r << ',' << b.anchor().u << ',' << io::format_double(x) << ','
            << io::format_double(y) << ',' << io::format_double(b(x, y)) << '\n';
      }
    }
  }
  write_text(a.out, csv.str());
  return 0;
}

struct VerifyArgs {
  std::string grid;
  std::optional<int> tau;
  bool no_oracle = false;
  std::string out = "-";
};

int run_verify(const VerifyArgs& a) {
  const auto g = load_grid(a.grid);
  const auto set = select_set(g, a.tau);
  const auto report = verify_instance(*g.grid, set, {!a.no_oracle});
  io::write_json(a.out, io::to_json(report));
  return report.passed() ? 0 : kExitValidation;
}

struct InterpArgs {
  std::string grid;
  std::optional<int> tau;
  std::string samples;
  std::string points;
  std::string out = "-";
};

int run_interp(const InterpArgs& a) {
  const auto g = load_grid(a.grid);
  const int tau = a.tau.value_or(g.set ? g.set->tau : 0);
  const auto p = interpolate(g.grid, tau, io::read_samples_csv(a.samples));
  std::ostringstream csv;
  csv << "x,y,p\n";
  for (const auto& [x, y] : io::read_points_csv(a.points)) {
    csv << io::format_double(x) << ',' << io::format_double(y) << ','
        << io::format_double(p(x, y)) << '\n';
  }
  write_text(a.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrange interpolation on checkerboard grids built from reflected recurrences"};
  app.require_subcommand(1);
  const auto tau_check = CLI::IsMember({0, 1});

  NodesArgs nodes;
  auto* c_nodes = app.add_subcommand("nodes", "coefficients -> node sequence");
  c_nodes->add_option("--coeffs", nodes.coeffs, "coefficient file")->required();
  c_nodes->add_option("--out", nodes.out, "output file ('-' = stdout)");

  CoeffsArgs coeffs;
  auto* c_coeffs = app.add_subcommand("coeffs", "node sequence -> coefficients");
  c_coeffs->add_option("--nodes", coeffs.nodes, "node file")->required();
  c_coeffs->add_flag("--normalize-a0", coeffs.normalize_a0, "even n: pick the member with a_0 = 1");
  c_coeffs->add_option("--out", coeffs.out, "output file ('-' = stdout)");

  GridArgs grid;
  auto* c_grid = app.add_subcommand("grid", "build a grid and its checkerboard set");
  auto* o_preset = c_grid->add_option("--preset", grid.preset, "padua | chebyshev")
                       ->check(CLI::IsMember({"padua", "chebyshev"}));
  c_grid->add_option("--n", grid.n, "degree parameter for --preset or --random");
  auto* o_x = c_grid->add_option("--xcoeffs", grid.xcoeffs, "x-axis coefficient file");
  auto* o_y = c_grid->add_option("--ycoeffs", grid.ycoeffs, "y-axis coefficient file");
  c_grid->add_option("--sigma", grid.sigma, "y-axis excess; checked against --ycoeffs")
      ->check(CLI::NonNegativeNumber);
  auto* o_random = c_grid->add_flag("--random", grid.random, "random coefficients (needs --n, --sigma)");
  c_grid->add_option("--seed", grid.seed, "seed for --random");
  c_grid->add_option("--tau", grid.tau, "checkerboard parity")->check(tau_check);
  c_grid->add_option("--out", grid.out, "output file ('-' = stdout)");
  o_preset->excludes(o_x)->excludes(o_y)->excludes(o_random);
  o_random->excludes(o_x)->excludes(o_y);
  o_x->needs(o_y);
  o_y->needs(o_x);

  BasisArgs basis;
  auto* c_basis = app.add_subcommand("basis", "basis values on a lattice (CSV s,v,x,y,L)");
  c_basis->add_option("--grid", basis.grid, "grid file")->required();
  c_basis->add_option("--tau", basis.tau, "checkerboard parity")->check(tau_check);
  c_basis->add_option("--eval-lattice", basis.lattice, "lattice size M (M x M points)")
      ->required()
      ->check(CLI::PositiveNumber);
  c_basis->add_option("--out", basis.out, "output file ('-' = stdout)");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "uniqueness and delta checks (JSON report)");
  c_verify->add_option("--grid", verify.grid, "grid file")->required();
  c_verify->add_option("--tau", verify.tau, "checkerboard parity")->check(tau_check);
  c_verify->add_flag("--no-oracle", verify.no_oracle, "skip the least-squares oracle comparison");
  c_verify->add_option("--out", verify.out, "output file ('-' = stdout)");

  InterpArgs interp;
  auto* c_interp = app.add_subcommand("interp", "evaluate the interpolant (CSV x,y,p)");
  c_interp->add_option("--grid", interp.grid, "grid file")->required();
  c_interp->add_option("--tau", interp.tau, "checkerboard parity")->check(tau_check);
  c_interp->add_option("--samples", interp.samples, "CSV r,u,value")->required();
  c_interp->add_option("--points", interp.points, "CSV x,y")->required();
  c_interp->add_option("--out", interp.out, "output file ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_nodes->parsed()) return run_nodes(nodes);
    if (c_coeffs->parsed()) return run_coeffs(coeffs);
    if (c_grid->parsed()) return run_grid(grid);
    if (c_basis->parsed()) return run_basis(basis);
    if (c_verify->parsed()) return run_verify(verify);
    if (c_interp->parsed()) return run_interp(interp);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "validation failure: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}
