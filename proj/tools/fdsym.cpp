#include <iostream>

#include <CLI11.hpp>

#include "fockdarwin/cli/commands.hpp"
#include "fockdarwin/cli/config.hpp"

namespace cli = fockdarwin::cli;

namespace {

void add_common(CLI::App* sub, cli::RunConfig& c) {
  sub->add_option("-g,--gamma", c.gamma, "gamma as a decimal, g=<decimal> or p/q");
  sub->add_option("--ratio", c.ratio, "frequency ratio p/q");
  sub->add_option("--out", c.out, "output CSV path (stdout when omitted)");
  sub->add_option("--seed", c.seed, "RNG seed");
  sub->add_option("--tol", c.tol, "rationalization tolerance");
}

void add_motion(CLI::App* sub, cli::RunConfig& c) {
  sub->add_option("--alpha0", c.alpha0, "|alpha+| at t=0");
  sub->add_option("--beta0", c.beta0, "|beta+| at t=0");
  sub->add_option("--theta1", c.theta1, "phase of alpha+ at t=0");
  sub->add_option("--theta2", c.theta2, "phase of beta+ at t=0");
  sub->add_option("--t-end", c.t_end, "end time, 0 for one period");
  sub->add_option("--dt", c.dt, "time step");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fock-Darwin spectra, orbits, flows and coherent states"};
  app.require_subcommand(1);
  cli::RunConfig c;

  auto* spectrum = app.add_subcommand("spectrum", "degenerate multiplets up to --eps-max");
  add_common(spectrum, c);
  spectrum->add_option("--eps-max", c.eps_max, "energy cutoff");

  auto* sweep = app.add_subcommand("sweep", "levels against gamma and B");
  add_common(sweep, c);
  sweep->add_option("--eps-max", c.eps_max, "energy cutoff");

  auto* trajectory = app.add_subcommand("trajectory", "classical motion and constants");
  add_common(trajectory, c);
  add_motion(trajectory, c);

  auto* orbit = app.add_subcommand("orbit", "rho(phi) from the closed-form orbit");
  add_common(orbit, c);
  add_motion(orbit, c);

  auto* flow = app.add_subcommand("flow", "orbit family generated by S, S1, S2 or A2");
  add_common(flow, c);
  add_motion(flow, c);
  flow->add_option("--generator", c.generator, "S, S1, S2 or A2");
  flow->add_option("--eta-max", c.eta_max, "largest flow parameter");
  flow->add_option("--deta", c.deta, "spacing of family members");
  flow->add_option("--c1", c.c1, "A2 constant c1");
  flow->add_option("--c2", c.c2, "A2 constant c2");

  auto* coherent = app.add_subcommand("coherent", "coherent-state density and Ehrenfest path");
  add_common(coherent, c);
  add_motion(coherent, c);
  coherent->add_option("--grid-rho", c.grid_rho, "radial nodes");
  coherent->add_option("--grid-phi", c.grid_phi, "angular nodes");

  auto* verify = app.add_subcommand("verify", "run every numerical check, JSON report");
  add_common(verify, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  c.command = cli::command_from_name(app.get_subcommands().front()->get_name());
  return cli::run(c, std::cout, std::cerr);
}
