// Copyright 2026 The vdw-images Authors
// SPDX-License-Identifier: Apache-2.0

// vdw: single-point energies, parameter scans and the validation report.
//
// Exit codes: 0 success, 1 failed validation or numerical failure,
// 2 invalid arguments, 3 atom outside the physical region, 4 output not
// writable.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vdw/vdw.hpp"

namespace {

using namespace vdw;

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kInvalidArgs = 2,
  kRegion = 3,
  kUnwritable = 4,
};

struct ScenarioArgs {
  std::string geometry = "plane";
  double radius = 1.0;
  double z0 = 1.0;
  double rho0 = 0.0;
  double phi0 = 0.0;
  std::vector<double> variances;
  std::optional<double> isotropic;
  std::string frame = "auto";
  std::string units = "reduced";
  std::string method = "closed";
  double base_step = DiffSettings{}.base_step;
  int levels = DiffSettings{}.richardson_levels;
};

struct Scenario {
  GeometryConfig geometry;
  Position r0;
  DipoleVariances variances;
  UnitSystem units;
  std::string method;
  DiffSettings diff;
};

const std::map<std::string, GeometryKind> kGeometries{{"plane", GeometryKind::Plane},
                                                      {"gsphere", GeometryKind::GroundedSphere},
                                                      {"isphere", GeometryKind::IsolatedSphere},
                                                      {"bosshat", GeometryKind::BossHat}};

Scenario make_scenario(const ScenarioArgs &a) {
  Scenario s;
  s.geometry = GeometryConfig::make(kGeometries.at(a.geometry), a.radius);
  s.r0 = from_cylindrical(a.rho0, a.phi0, a.z0);
  s.units = a.units == "si" ? UnitSystem::si() : UnitSystem::reduced();
  s.method = a.method;
  s.diff = {a.base_step, a.levels};
  s.diff.validate();

  Frame frame = s.geometry.kind == GeometryKind::BossHat ? Frame::cylindrical_local
                                                         : Frame::cartesian;
  if (a.frame == "cartesian")
    frame = Frame::cartesian;
  else if (a.frame == "cylindrical")
    frame = Frame::cylindrical_local;

  if (a.isotropic && !a.variances.empty())
    throw InvalidArgument("use either --isotropic or --variances");
  if (a.isotropic)
    s.variances = DipoleVariances::isotropic(*a.isotropic, frame);
  else if (a.variances.size() == 3)
    s.variances = DipoleVariances(frame, a.variances[0], a.variances[1], a.variances[2]);
  else
    throw InvalidArgument("--variances needs three values (or give --isotropic)");
  return s;
}

DipoleVariances as_local(const DipoleVariances &v) {
  if (v.frame == Frame::cylindrical_local)
    return v;
  if (v.is_isotropic())
    return {Frame::cylindrical_local, v.m1, v.m2, v.m3};
  throw InvalidArgument("boss-hat closed form needs cylindrical variances or an isotropic atom");
}

double require_isotropic_total(const DipoleVariances &v) {
  if (!v.is_isotropic())
    throw InvalidArgument("sphere closed forms assume an isotropic atom");
  return v.total();
}

EnergyResult evaluate(const Scenario &s) {
  const auto &g = s.geometry;
  if (!physical_region(g, s.r0))
    throw RegionError("atom outside the physical region");
  const auto cyl = to_cylindrical(s.r0);
  const AtomSpec atom(s.variances);

  if (s.method == "numeric")
    return energy_numeric(g, atom, s.r0, s.diff, s.units);
  if (s.method == "oracle")
    return extrapolated_energy(g, atom, s.r0, {}, s.units);

  if (s.method == "expansion3") {
    if (cyl.rho != 0.0)
      throw InvalidArgument("expansions are defined on the axis (rho0 = 0)");
    const double total = require_isotropic_total(s.variances);
    if (g.kind == GeometryKind::GroundedSphere)
      return u_sphere_expansion3(total, s.r0.z, g.radius, s.units);
    if (g.kind == GeometryKind::BossHat)
      return u_bosshat_expansion3(total, s.r0.z, g.radius, s.units);
    throw InvalidArgument("expansion3 is available for gsphere and bosshat");
  }

  // closed / closed-literature
  switch (g.kind) {
  case GeometryKind::Plane: return u_plane(s.variances, s.r0.z, s.units);
  case GeometryKind::GroundedSphere:
    return u_grounded_sphere(require_isotropic_total(s.variances), norm(s.r0), g.radius, s.units);
  case GeometryKind::IsolatedSphere:
    return u_isolated_sphere(require_isotropic_total(s.variances), norm(s.r0), g.radius, s.units);
  case GeometryKind::BossHat:
    if (s.method == "closed-literature")
      return u_bosshat(as_local(s.variances), cyl.rho, cyl.z, g.radius, s.units);
    return u_bosshat_from_images(as_local(s.variances), cyl.rho, cyl.z, g.radius, s.units);
  }
  return {};
}

void add_scenario_options(CLI::App &app, ScenarioArgs &a) {
  const std::vector<std::string> geometries{"plane", "gsphere", "isphere", "bosshat"};
  app.add_option("--geometry", a.geometry, "Conducting surface")
      ->check(CLI::IsMember(geometries))
      ->capture_default_str();
  app.add_option("--radius", a.radius, "Sphere / hemisphere radius R")->capture_default_str();
  app.add_option("--z0", a.z0, "Atom height z0")->capture_default_str();
  app.add_option("--rho0", a.rho0, "Atom cylindrical radius rho0")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--phi0", a.phi0, "Atom azimuth phi0 (rad)")->capture_default_str();
  app.add_option("--variances", a.variances, "Three dipole variances <d_m^2>")
      ->expected(3)
      ->delimiter(',');
  app.add_option("--isotropic", a.isotropic, "Total variance <d^2> of an isotropic atom");
  app.add_option("--frame", a.frame, "Frame of --variances (default: cylindrical for bosshat)")
      ->check(CLI::IsMember({"auto", "cartesian", "cylindrical"}))
      ->capture_default_str();
  app.add_option("--units", a.units, "Unit system")
      ->check(CLI::IsMember({"si", "reduced"}))
      ->capture_default_str();
  app.add_option("--method", a.method, "Evaluation path")
      ->check(CLI::IsMember({"closed", "closed-literature", "numeric", "oracle", "expansion3"}))
      ->capture_default_str();
  app.add_option("--base-step", a.base_step, "Initial finite-difference step fraction")
      ->capture_default_str();
  app.add_option("--levels", a.levels, "Richardson levels")->capture_default_str();
  app.add_option("--config", "key=value file mirroring the flags (flags win)");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------

int run_energy(const ScenarioArgs &args) {
  const Scenario s = make_scenario(args);
  const EnergyResult r = evaluate(s);
  nlohmann::ordered_json out;
  out["energy"] = r.value;
  out["err_estimate"] = r.err_estimate;
  out["method"] = s.method == "expansion3" ? "expansion3" : std::string(to_string(r.method));
  out["units"] = std::string(to_string(r.units));
  out["inputs"] = {{"geometry", args.geometry},
                   {"radius", s.geometry.radius},
                   {"z0", args.z0},
                   {"rho0", args.rho0},
                   {"phi0", args.phi0},
                   {"frame", s.variances.frame == Frame::cartesian ? "cartesian" : "cylindrical"},
                   {"variances", {s.variances.m1, s.variances.m2, s.variances.m3}},
                   {"method", s.method}};
  std::cout << out.dump(2) << '\n';
  return kOk;
}

struct ScanArgs {
  std::string var = "z0";
  double from = 1.05;
  double to = 5.0;
  int points = 200;
  bool log = false;
  std::string normalize = "none";
  std::string out = "-";
};

unsigned scan_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("VDW_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0)
      n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

int run_scan(const ScenarioArgs &args, const ScanArgs &scan) {
  if (scan.points < 1)
    throw InvalidArgument("--points must be at least 1");
  if (scan.log && !(scan.from > 0.0 && scan.to > 0.0))
    throw InvalidArgument("--log needs positive bounds");
  const Scenario base = make_scenario(args);

  std::vector<double> xs(static_cast<std::size_t>(scan.points));
  for (int i = 0; i < scan.points; ++i) {
    const double t = scan.points == 1 ? 0.0 : static_cast<double>(i) / (scan.points - 1);
    xs[i] = scan.log ? scan.from * std::pow(scan.to / scan.from, t)
                     : scan.from + (scan.to - scan.from) * t;
  }

  std::ofstream file;
  if (scan.out != "-") {
    file.open(scan.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "vdw scan: cannot write " << scan.out << '\n';
      return kUnwritable;
    }
  }

  std::vector<EnergyResult> results(xs.size());
  std::vector<std::exception_ptr> errors(xs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < xs.size(); i = next++) {
      try {
        Scenario s = base;
        auto c = to_cylindrical(s.r0);
        (scan.var == "z0" ? c.z : c.rho) = xs[i];
        s.r0 = from_cylindrical(c);
        results[i] = evaluate(s);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(scan_threads(), static_cast<unsigned>(xs.size()));
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);

  const std::string method =
      base.method == "expansion3" ? "expansion3" : std::string(to_string(results[0].method));
  std::ostringstream csv;
  csv << "x,value,err,method\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double factor = 1.0;
    if (scan.normalize == "R3") {
      factor = std::pow(base.geometry.radius, 3);
    } else if (scan.normalize == "a3") {
      Scenario s = base;
      auto c = to_cylindrical(s.r0);
      (scan.var == "z0" ? c.z : c.rho) = xs[i];
      factor = std::pow(distance_to_surface(s.geometry, from_cylindrical(c)), 3);
    }
    csv << fmt17(xs[i]) << ',' << fmt17(results[i].value * factor) << ','
        << fmt17(results[i].err_estimate * factor) << ',' << method << '\n';
  }

  if (scan.out == "-") {
    std::cout << csv.str();
    return kOk;
  }
  file << csv.str();
  file.flush();
  if (!file) {
    std::cerr << "vdw scan: write failed for " << scan.out << '\n';
    return kUnwritable;
  }
  return kOk;
}

int run_validate(const std::string &suite, std::uint64_t seed) {
  using namespace vdw::validation;
  std::vector<CheckResult> checks;
  const auto add = [&](std::vector<CheckResult> v) {
    checks.insert(checks.end(), v.begin(), v.end());
  };
  const bool all = suite == "all";
  if (all || suite == "bc")
    add(check_boundary(seed));
  if (all || suite == "symmetry")
    add(check_symmetry(seed));
  if (all || suite == "limits")
    add(check_limits());
  if (all || suite == "threeway")
    add(check_threeway());
  if (all || suite == "expansion")
    add(check_expansion());

  bool ok = true;
  for (const auto &c : checks) {
    ok = ok && c.passed;
    std::printf("%-4s  %-40s max_residual=%.3e  tol=%.1e%s%s\n", c.passed ? "PASS" : "FAIL",
                c.name.c_str(), c.max_residual, c.tolerance, c.note.empty() ? "" : "  # ",
                c.note.c_str());
  }
  std::printf("%s: %zu checks, suite=%s, seed=%llu\n", ok ? "OK" : "FAILED", checks.size(),
              suite.c_str(), static_cast<unsigned long long>(seed));
  return ok ? kOk : kFailed;
}

bool flag_given(const std::vector<std::string> &args, const std::string &flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string &a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

/// Appends "--key value" for each line of the --config file whose flag is not
/// already on the command line.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size())
      path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0)
      path = args[i].substr(9);
  }
  if (path.empty())
    return args;
  std::ifstream in(path);
  if (!in)
    throw CLI::FileError::Missing(path);
  std::vector<std::string> extra;
  std::string line;
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[')
      continue;
    const auto eq = line.find('=');
    const std::string key = trim(line.substr(0, eq));
    const std::string flag = "--" + key;
    if (flag_given(args, flag))
      continue;
    extra.push_back(flag);
    if (eq != std::string::npos) {
      std::string value = trim(line.substr(eq + 1));
      if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
        value = value.substr(1, value.size() - 2);
      if (value != "true")
        extra.push_back(value);
    }
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Non-retarded atom-conductor dispersion energies via image charges"};
  app.require_subcommand(1);

  ScenarioArgs energy_args;
  auto *energy = app.add_subcommand("energy", "Energy at one atom position (JSON on stdout)");
  add_scenario_options(*energy, energy_args);

  ScenarioArgs scan_args;
  ScanArgs scan;
  auto *scan_cmd = app.add_subcommand("scan", "Sweep z0 or rho0 and write CSV");
  add_scenario_options(*scan_cmd, scan_args);
  scan_cmd->add_option("--var", scan.var, "Scanned coordinate")
      ->check(CLI::IsMember({"z0", "rho0"}))
      ->capture_default_str();
  scan_cmd->add_option("--from", scan.from, "First value")->capture_default_str();
  scan_cmd->add_option("--to", scan.to, "Last value")->capture_default_str();
  scan_cmd->add_option("--points", scan.points, "Number of points")->capture_default_str();
  scan_cmd->add_flag("--log", scan.log, "Logarithmic spacing");
  scan_cmd->add_option("--normalize", scan.normalize, "Multiply U by R^3 or a^3")
      ->check(CLI::IsMember({"none", "R3", "a3"}))
      ->capture_default_str();
  scan_cmd->add_option("--out", scan.out, "Output CSV file ('-' for stdout)")
      ->capture_default_str();

  std::string suite = "all";
  std::uint64_t seed = 42;
  auto *validate = app.add_subcommand("validate", "Run the property checks");
  validate->add_option("--suite", suite, "Check group")
      ->check(CLI::IsMember({"bc", "symmetry", "limits", "threeway", "expansion", "all"}))
      ->capture_default_str();
  validate->add_option("--seed", seed, "Random seed")->capture_default_str();

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kInvalidArgs;
  }

  try {
    if (energy->parsed())
      return run_energy(energy_args);
    if (scan_cmd->parsed())
      return run_scan(scan_args, scan);
    return run_validate(suite, seed);
  } catch (const InvalidArgument &e) {
    std::cerr << "vdw: " << e.what() << '\n';
    return kInvalidArgs;
  } catch (const RegionError &e) {
    std::cerr << "vdw: " << e.what() << '\n';
    return kRegion;
  } catch (const OutOfWindow &e) {
    std::cerr << "vdw: " << e.what() << '\n';
    return kRegion;
  } catch (const std::exception &e) {
    std::cerr << "vdw: " << e.what() << '\n';
    return kFailed;
  }
}
