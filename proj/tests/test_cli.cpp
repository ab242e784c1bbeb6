#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockdarwin/cli/commands.hpp"
#include "fockdarwin/cli/config.hpp"
#include "fockdarwin/cli/csv.hpp"

using namespace fockdarwin;
using namespace fockdarwin::cli;
namespace fs = std::filesystem;

namespace {

int exit_status(const std::string& args) {
  const std::string cmd = std::string(FDSYM_EXE) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string run_capture(RunConfig c, int* code = nullptr) {
  std::ostringstream out, err;
  const int rc = run(c, out, err);
  if (code) *code = rc;
  return out.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::vector<double> split_numbers(const std::string& row) {
  std::vector<double> out;
  std::istringstream is(row);
  for (std::string cell; std::getline(is, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "fdsym_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse_gamma") {
  const GammaSpec a = parse_gamma("2/1");
  REQUIRE(a.ratio);
  CHECK(*a.ratio == RationalRatio(2, 1));
  CHECK(a.gamma == doctest::Approx(1.0 / 3.0));

  const GammaSpec b = parse_gamma("g=0");
  CHECK(*b.ratio == RationalRatio(1, 1));

  CHECK(*parse_gamma("0.333333333", 1e-6).ratio == RationalRatio(2, 1));
  CHECK_FALSE(parse_gamma("0.7071067811865476").ratio.has_value());

  CHECK_THROWS_AS(parse_gamma("abc"), UsageError);
  CHECK_THROWS_AS(parse_gamma("1.5"), UsageError);
  CHECK(*parse_gamma("2/4").ratio == RationalRatio(1, 2));
  CHECK_THROWS_AS(parse_gamma("0/0"), UsageError);
}

TEST_CASE("command names") {
  for (Command c : {Command::Spectrum, Command::Sweep, Command::Trajectory, Command::Orbit, Command::Flow, Command::Coherent,
                    Command::Verify}) {
    CHECK(command_from_name(command_name(c)) == c);
  }
  CHECK_THROWS_AS(command_from_name("plot"), UsageError);
}

TEST_CASE("validate") {
  RunConfig c;
  c.command = Command::Trajectory;
  c.gamma = "1/3";
  CHECK_NOTHROW(validate(c));
  c.dt = -1.0;
  CHECK_THROWS_AS(validate(c), UsageError);
  c.dt = 0.01;
  c.ratio = "2/1";
  CHECK_THROWS_AS(resolve_gamma(c), UsageError);
}

TEST_CASE("csv formatting") {
  std::ostringstream os;
  {
    CsvWriter csv(os, "note", {"a", "b"});
    csv << 0.1 << -0.0;
    csv.end_row();
    CHECK(csv.rows() == 1);
  }
  const auto ls = lines(os.str());
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "# note");
  CHECK(ls[1] == "a,b");
  CHECK(ls[2] == "0.10000000000000001,0");
  CHECK(std::stod(ls[2].substr(0, ls[2].find(','))) == 0.1);
}

TEST_CASE("spectrum output") {
  RunConfig c;
  c.command = Command::Spectrum;
  c.ratio = "2/1";
  c.eps_max = 4.0;
  int rc = -1;
  const auto ls = lines(run_capture(c, &rc));
  CHECK(rc == kOk);
  REQUIRE(ls.size() > 4);
  CHECK(ls[0].rfind("# ", 0) == 0);
  CHECK(ls[1] == "key,energy_num,energy_den,energy,degeneracy,members");
  CHECK(ls[4].rfind("2,", 0) == 0);
  CHECK(ls[4].find(",2,") != std::string::npos);
}

TEST_CASE("deterministic output") {
  for (Command cmd : {Command::Spectrum, Command::Trajectory, Command::Flow, Command::Orbit}) {
    RunConfig c;
    c.command = cmd;
    c.gamma = "1/3";
    c.alpha0 = 1.0;
    c.beta0 = 1.5;
    c.dt = 0.05;
    CHECK(run_capture(c) == run_capture(c));
  }
}

TEST_CASE("trajectory of the three-lobe orbit") {
  const fs::path out = scratch_dir() / "traj.csv";
  RunConfig c;
  c.command = Command::Trajectory;
  c.gamma = "0.3333333333333333";
  c.out = out.string();
  std::ostringstream sink, err;
  REQUIRE(run(c, sink, err) == kOk);
  CHECK(sink.str().empty());

  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto ls = lines(buf.str());
  REQUIRE(ls.size() > 100);
  CHECK(ls[1] == "t,x,y,px,py,eps,ell,abs_S,arg_S");
  std::vector<double> rho;
  for (std::size_t i = 2; i < ls.size(); ++i) {
    const auto v = split_numbers(ls[i]);
    CHECK(v[6] == doctest::Approx(96.0));
    rho.push_back(std::hypot(v[1], v[2]));
  }
  // lobes = local maxima of rho over one period, cyclically
  int maxima = 0;
  const std::size_t n = rho.size() - 1;  // last sample repeats the first
  for (std::size_t i = 0; i < n; ++i) {
    if (rho[i] > rho[(i + n - 1) % n] && rho[i] >= rho[(i + 1) % n]) ++maxima;
  }
  CHECK(maxima == 3);

  for (const char* ext : {".summary.json", ".veff.csv"}) CHECK(fs::exists(out.string() + ext));
  std::ifstream js(out.string() + ".summary.json");
  const auto doc = nlohmann::json::parse(js);
  CHECK(doc["turning_points"] == 6);
  CHECK(doc["closed"] == true);
}

TEST_CASE("sweep crossings at gamma = 1/3") {
  const fs::path out = scratch_dir() / "sweep.csv";
  RunConfig c;
  c.command = Command::Sweep;
  c.gamma = "1/3";
  c.out = out.string();
  std::ostringstream sink, err;
  REQUIRE(run(c, sink, err) == kOk);
  std::ifstream js(out.string() + ".summary.json");
  const auto doc = nlohmann::json::parse(js);
  CHECK(doc["crossings_consistent"] == true);
}

TEST_CASE("exit codes") {
  CHECK(exit_status("spectrum --ratio 2/1") == kOk);
  CHECK(exit_status("") == kUsage);
  CHECK(exit_status("bogus") == kUsage);
  CHECK(exit_status("spectrum") == kUsage);
  CHECK(exit_status("spectrum --ratio 2/1 --gamma 0.1") == kUsage);
  CHECK(exit_status("trajectory --gamma 0.3 --alpha0 -2") == kUsage);
  CHECK(exit_status("trajectory --gamma 0.7071067811865476") == kNumerical);
  CHECK(exit_status("spectrum --ratio 1/0") == kNumerical);
  CHECK(exit_status("flow --ratio 2/1 --generator Q") == kUsage);
}

TEST_CASE("flow family") {
  for (const char* gen : {"S", "S1", "S2", "A2"}) {
    RunConfig c;
    c.command = Command::Flow;
    c.ratio = "2/1";
    c.generator = gen;
    c.alpha0 = 0.6;
    c.beta0 = 0.8;
    c.dt = 0.05;
    int rc = -1;
    const auto ls = lines(run_capture(c, &rc));
    CHECK(rc == kOk);
    REQUIRE(ls.size() > 10);
    CHECK(ls[1] == "eta,t,x,y,px,py,h,L");
    // every family member carries the same energy
    const auto first = split_numbers(ls[2]);
    const auto later = split_numbers(ls[ls.size() / 2]);
    CHECK(later[6] == doctest::Approx(first[6]).epsilon(1e-8));
  }
}

TEST_CASE("coherent output") {
  RunConfig c;
  c.command = Command::Coherent;
  c.ratio = "2/1";
  c.grid_rho = 20;
  c.grid_phi = 16;
  int rc = -1;
  const auto ls = lines(run_capture(c, &rc));
  CHECK(rc == kOk);
  CHECK(ls[1] == "rho,phi,density");
  CHECK(ls.size() == 2 + 20 * 16);
}
