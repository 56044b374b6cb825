#include "aristotle/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "aristotle/coadjoint.hpp"
#include "aristotle/dynamics.hpp"
#include "aristotle/format.hpp"
#include "aristotle/trajectory_io.hpp"
#include "aristotle/verify.hpp"

namespace aristotle::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_finite(std::initializer_list<std::pair<const char*, double>> values) {
  for (const auto& [name, v] : values)
    if (!std::isfinite(v)) throw UsageError(std::string("--") + name + " must be a finite number");
}

struct VerifyArgs {
  std::int64_t seed = 42;
  int cases = 1000;
  double tol = 1e-9;
};

struct SimulateArgs {
  SimulationConfig cfg;
  std::string integrator = "exact";
  std::string format = "csv";
  std::string out_path;
};

struct OrbitArgs {
  double m = 0.0, g = 0.0, e = 0.0, p = 0.0;
};

struct ActArgs {
  double mass = 0.0, g = 0.0, t = 0.0, h = 0.0, p = 0.0, q = 0.0;
};

int do_verify(const VerifyArgs& args, std::ostream& out) {
  if (args.cases < 1) throw UsageError("--cases must be at least 1");
  if (!(args.tol > 0.0) || !std::isfinite(args.tol)) throw UsageError("--tol must be positive");
  const auto report = run_verify(static_cast<std::uint64_t>(args.seed), args.cases, args.tol);
  print_report(out, report);
  return report.passed() ? kSuccess : kVerificationFailed;
}

int do_simulate(SimulateArgs args, std::ostream& out) {
  auto& cfg = args.cfg;
  require_finite({{"mass", cfg.m}, {"g", cfg.g}, {"p0", cfg.p0}, {"q0", cfg.q0},
                  {"t-max", cfg.t_max}, {"dt", cfg.dt}});
  cfg.integrator = parse_integrator(args.integrator);
  const auto format = parse_trajectory_format(args.format);
  const auto samples = simulate(cfg);

  if (args.out_path.empty()) {
    write_trajectory(out, samples, format);
    return kSuccess;
  }
  std::ofstream file(args.out_path);
  if (!file) throw UsageError("cannot open output file: " + args.out_path);
  write_trajectory(file, samples, format);
  file.close();
  if (!file) throw UsageError("failed writing output file: " + args.out_path);
  return kSuccess;
}

int do_orbit(const OrbitArgs& args, std::ostream& out) {
  require_finite({{"m", args.m}, {"g", args.g}, {"e", args.e}, {"p", args.p}});
  const OrbitContext ctx{args.m, args.g};
  const auto pt = to_chart(ctx, CoadjointPoint{args.m, args.e, args.p});
  out << "p=" << format_real(pt.p) << " q=" << format_real(pt.q) << '\n';
  return kSuccess;
}

int do_act(const ActArgs& args, std::ostream& out) {
  require_finite({{"mass", args.mass}, {"g", args.g}, {"t", args.t}, {"h", args.h},
                  {"p", args.p}, {"q", args.q}});
  const OrbitContext ctx{args.mass, args.g};
  const auto pt = canonical_act(ctx, {args.t, args.h}, {args.p, args.q});
  out << "p=" << format_real(pt.p) << " q=" << format_real(pt.q) << '\n';
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic model of the one-dimensional Aristotle group", "aristotle"};
  app.require_subcommand(1);
  // -h would collide with the --h translation flag of `act`.
  app.set_help_flag("--help", "Print this help message and exit");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check every algebraic identity on random inputs");
  verify->add_option("--seed", verify_args.seed, "Generator seed")->capture_default_str();
  verify->add_option("--cases", verify_args.cases, "Random cases per property")->capture_default_str();
  verify->add_option("--tol", verify_args.tol, "Maximum allowed violation")->capture_default_str();

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Integrate H = m g q and write the trajectory");
  sim->add_option("--mass", sim_args.cfg.m, "Orbit invariant m")->required();
  sim->add_option("--g", sim_args.cfg.g, "Gravitational acceleration")->required();
  sim->add_option("--p0", sim_args.cfg.p0, "Initial momentum")->required();
  sim->add_option("--q0", sim_args.cfg.q0, "Initial position")->required();
  sim->add_option("--t-max", sim_args.cfg.t_max, "Final time")->required();
  sim->add_option("--dt", sim_args.cfg.dt, "Time step")->required();
  sim->add_option("--integrator", sim_args.integrator, "exact | symplectic_euler")
      ->capture_default_str();
  sim->add_option("--format", sim_args.format, "csv | json")->capture_default_str();
  sim->add_option("--out", sim_args.out_path, "Output path (default: standard output)");

  OrbitArgs orbit_args;
  auto* orbit = app.add_subcommand("orbit", "Map a dual point (m, e, p) to the chart (p, q)");
  orbit->add_option("--m", orbit_args.m, "Mass")->required();
  orbit->add_option("--g", orbit_args.g, "Gravitational acceleration")->required();
  orbit->add_option("--e", orbit_args.e, "Energy coordinate")->required();
  orbit->add_option("--p", orbit_args.p, "Momentum coordinate")->required();

  ActArgs act_args;
  auto* act = app.add_subcommand("act", "Apply the translation (t, h) to a chart point");
  act->add_option("--mass", act_args.mass, "Mass")->required();
  act->add_option("--g", act_args.g, "Gravitational acceleration")->required();
  act->add_option("--t", act_args.t, "Time translation")->required();
  act->add_option("--h", act_args.h, "Space translation")->required();
  act->add_option("--p", act_args.p, "Momentum")->required();
  act->add_option("--q", act_args.q, "Position")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*verify) return do_verify(verify_args, out);
    if (*sim) return do_simulate(sim_args, out);
    if (*orbit) return do_orbit(orbit_args, out);
    if (*act) return do_act(act_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace aristotle::cli
