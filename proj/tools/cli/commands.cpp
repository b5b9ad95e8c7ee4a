#include "cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "qns/errors.hpp"
#include "qns/format.hpp"
#include "qns/semiclassic.hpp"
#include "qns/snapshot.hpp"

namespace qns::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
  if (!out) throw ConfigError("write failed for " + path.string());
}

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
}

std::string snapshot_name(std::size_t step) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "snapshot_%06zu.qnsf", step);
  return buf;
}

VelocityField starting_field(const RunConfig& rc) {
  const SolverConfig& c = rc.solver;
  if (rc.input_snapshot.empty()) return initial_field(c);
  auto fields = load_snapshot(rc.input_snapshot);
  if (static_cast<int>(fields.size()) != c.d) throw ConfigError("input snapshot must hold d velocity components");
  if (!(fields.front().grid() == c.grid()) || !(fields.front().theta() == c.theta)) {
    throw ConfigError("input snapshot grid or theta differs from the config");
  }
  return leray_project(VelocityField(std::move(fields)));
}

std::string record_table(const std::vector<BatteryRecord>& records) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-36s %8s %8s %14s  %s\n", "check", "passes", "trials", "worst_ratio", "kind");
  out += line;
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%-36s %8d %8d %14.6g  %s\n", r.name.c_str(), r.passes, r.trials, r.worst_ratio,
                  r.hard ? (r.passes == r.trials ? "hard PASS" : "hard FAIL") : "report");
    out += line;
  }
  return out;
}

}  // namespace

int cmd_solve(const RunConfig& rc, std::ostream& log) {
  if (rc.solver.scheme == Scheme::Picard) return cmd_picard(rc, log);
  prepare_dir(rc.out_dir);
  const VelocityField u0 = starting_field(rc);
  const Trajectory traj = solve(rc.solver, u0);
  write_text(rc.out_dir / "diagnostics.csv", traj.diagnostics_csv());
  std::size_t snap = 0;
  for (std::size_t i = 0; i < traj.series.size(); ++i) {
    if (!traj.recorded[i]) continue;
    save_snapshot(rc.out_dir / snapshot_name(i), traj.snapshots[snap++].components());
  }
  const json summary{{"status", to_string(traj.status)},
                     {"message", traj.message},
                     {"steps", traj.series.size() - 1},
                     {"monitor_exponent", traj.monitor_p},
                     {"monitor_surrogate", traj.monitor_surrogate},
                     {"monitor_value", traj.monitor_value},
                     {"energy_identity_expected", traj.energy_identity_expected},
                     {"max_energy_residual", energy_report(traj).max_residual}};
  write_text(rc.out_dir / "summary.json", summary.dump(2) + "\n");
  log << "solve: " << to_string(traj.status) << " after " << traj.series.size() - 1 << " steps";
  if (!traj.message.empty()) log << " (" << traj.message << ")";
  log << '\n';
  return exit_code(traj.status);
}

int cmd_picard(const RunConfig& rc, std::ostream& log) {
  prepare_dir(rc.out_dir);
  const VelocityField u0 = starting_field(rc);
  const PicardReport rep = picard_iterate(rc.solver, u0);
  std::string csv = "iteration,distance,ratio\n";
  for (std::size_t m = 0; m < rep.distances.size(); ++m) {
    csv += std::to_string(m + 1) + "," + format_double(rep.distances[m]) + ",";
    if (m > 0) csv += format_double(rep.ratios[m - 1]);
    csv += "\n";
  }
  write_text(rc.out_dir / "picard.csv", csv);
  if (!rep.limit.empty()) save_snapshot(rc.out_dir / "picard_limit.qnsf", rep.limit.back().components());
  log << "picard: " << to_string(rep.status) << ", " << rep.distances.size() << " iterates";
  if (!rep.message.empty()) log << " (" << rep.message << ")";
  log << '\n';
  return exit_code(rep.status);
}

int cmd_verify(const RunConfig& rc, std::ostream& log, const Projector& projector) {
  prepare_dir(rc.out_dir);
  std::vector<BatteryRecord> records;
  json doc = json::object();
  for (const auto& suite : rc.verify.suites) {
    std::vector<BatteryRecord> part;
    if (suite == "battery") {
      BatteryOptions opt;
      opt.projector = projector;
      const auto rep = inequality_battery(rc.verify.seed, rc.verify.trials, opt);
      part = rep.records;
      doc["battery"] = json::parse(rep.to_json());
    } else {
      part = suite == "algebra" ? algebra_suite(rc.verify.seed, rc.verify.trials)
                                : flow_suite(rc.verify.seed, rc.verify.trials, projector);
      BatteryReport rep{part};
      doc[suite] = json::parse(rep.to_json());
    }
    records.insert(records.end(), part.begin(), part.end());
  }
  bool ok = true;
  for (const auto& r : records) {
    if (r.hard && r.passes != r.trials) {
      ok = false;
      log << "verify: hard check failed: " << r.name << '\n';
    }
  }
  doc["seed"] = rc.verify.seed;
  doc["trials"] = rc.verify.trials;
  doc["all_hard_passed"] = ok;
  write_text(rc.out_dir / "verify.json", doc.dump(2) + "\n");
  log << record_table(records);
  return ok ? 0 : 1;
}

int cmd_sweep_theta(const RunConfig& rc, std::ostream& log) {
  if (rc.sweep_thetas.empty()) throw ConfigError("sweep.thetas: empty theta list");
  prepare_dir(rc.out_dir);
  SolverConfig classical = rc.solver;
  classical.theta = ThetaMatrix(classical.d);
  std::vector<SymbolField> phi0;
  const VelocityField u0 = initial_field(classical);
  for (const auto& c : u0.components()) phi0.push_back(to_symbol(c));
  ConvergenceTable table;
  try {
    table = theta_sweep(rc.solver, rc.sweep_thetas, phi0);
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
  write_text(rc.out_dir / "sweep.csv", table.to_csv());
  log << table.to_csv();
  int code = 0;
  for (const auto& r : table.rows) code = std::max(code, exit_code(r.status));
  return code;
}

int cmd_norms(const RunConfig& rc, std::ostream& log) {
  if (rc.input_snapshot.empty()) throw ConfigError("norms: input_snapshot is required");
  prepare_dir(rc.out_dir);
  const auto fields = load_snapshot(rc.input_snapshot);
  json arr = json::array();
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %14s %14s %14s %14s %14s %14s %12s\n", "field", "S2", "S4", "coeff_l4/3",
                "H1dot", "B0_22", "opnorm_est", "edge_mass");
  log << line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto& x = fields[i];
    const double s2 = schatten_norm(x, 2);
    const double s4 = schatten_norm(x, 4);
    const double hy = coeff_lp_norm(x, 4.0 / 3.0);
    const double h1 = sobolev_norm(x, 1.0, 2, true);
    const double b0 = besov_norm(x, {});
    const double op = opnorm_estimate(x, 20);
    const double em = edge_mass(x);
    arr.push_back({{"field", i},
                   {"s2", s2},
                   {"s4", s4},
                   {"coeff_l4_3", hy},
                   {"h1dot", h1},
                   {"besov_0_2_2", b0},
                   {"opnorm_estimate", op},
                   {"edge_mass", em},
                   {"self_adjoint_defect", self_adjoint_defect(x)}});
    std::snprintf(line, sizeof line, "%-6zu %14.6g %14.6g %14.6g %14.6g %14.6g %14.6g %12.3g\n", i, s2, s4, hy, h1, b0,
                  op, em);
    log << line;
    if (em > kEdgeMassWarn) log << "warning: field " << i << " has edge mass " << em << '\n';
  }
  json doc{{"fields", arr}};
  if (static_cast<int>(fields.size()) == fields.front().grid().dim()) {
    doc["divergence_defect"] = divergence_defect(VelocityField(fields));
  }
  write_text(rc.out_dir / "norms.json", doc.dump(2) + "\n");
  return 0;
}

}  // namespace qns::cli
