#include <cmath>
#include <limits>
#include <sstream>

#include "qns/errors.hpp"
#include "qns/format.hpp"
#include "qns/semiclassic.hpp"

namespace qns {
namespace {

std::vector<std::vector<SymbolField>> symbol_path(const Trajectory& traj) {
  std::vector<std::vector<SymbolField>> out;
  for (const auto& u : traj.snapshots) {
    std::vector<SymbolField> s;
    for (const auto& c : u.components()) s.push_back(to_symbol(c));
    out.push_back(std::move(s));
  }
  return out;
}

double path_gap(const std::vector<std::vector<SymbolField>>& a, const std::vector<std::vector<SymbolField>>& b) {
  double worst = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      const double e = l2_norm(a[i][k] - b[i][k]);
      s += e * e;
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

Trajectory run(SolverConfig cfg, double s, const std::vector<SymbolField>& phi0) {
  cfg.theta = ThetaMatrix::planar(s);
  std::vector<QElement> comps;
  for (const auto& phi : phi0) comps.push_back(from_symbol(phi, cfg.theta));
  return solve(cfg, VelocityField(std::move(comps)));
}

}  // namespace

std::vector<SymbolField> vortex_pair_symbol(const SolverConfig& config) {
  SolverConfig c = config;
  c.theta = ThetaMatrix(2);
  c.initial.type = "gaussian_vortex_pair";
  c.initial.self_adjoint = true;
  const VelocityField u = initial_field(c);
  std::vector<SymbolField> out;
  for (const auto& x : u.components()) out.push_back(to_symbol(x));
  return out;
}

ConvergenceTable theta_sweep(const SolverConfig& base, const std::vector<double>& thetas,
                             const std::vector<SymbolField>& phi0) {
  if (thetas.empty()) throw PreconditionError("theta_sweep: empty theta list");
  if (base.d != 2) throw PreconditionError("theta_sweep: planar sweeps need d = 2");
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!(thetas[i] >= 0.0)) throw PreconditionError("theta_sweep: theta values must be >= 0");
    if (i > 0 && !(thetas[i] < thetas[i - 1])) throw PreconditionError("theta_sweep: theta list must strictly decrease");
  }
  if (static_cast<int>(phi0.size()) != base.d) throw PreconditionError("theta_sweep: phi0 needs d components");

  const Trajectory classical = run(base, 0.0, phi0);
  const auto ref = symbol_path(classical);
  ConvergenceTable table;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    ConvergenceRow row;
    row.theta_norm = thetas[i];
    if (thetas[i] == 0.0) {
      row.e_theta = 0.0;
      row.status = classical.status;
    } else {
      const Trajectory q = run(base, thetas[i], phi0);
      row.status = q.status != RunStatus::Completed ? q.status : classical.status;
      row.e_theta = path_gap(symbol_path(q), ref);
    }
    row.empirical_order = std::numeric_limits<double>::quiet_NaN();
    if (i > 0 && row.theta_norm > 0.0 && row.e_theta > 0.0) {
      const auto& prev = table.rows.back();
      row.empirical_order = std::log(prev.e_theta / row.e_theta) / std::log(prev.theta_norm / row.theta_norm);
    }
    table.rows.push_back(row);
  }
  return table;
}

std::string ConvergenceTable::to_csv() const {
  std::ostringstream os;
  os << "theta_norm,e_theta,empirical_order,run_status\n";
  for (const auto& r : rows) {
    os << format_double(r.theta_norm) << ',' << format_double(r.e_theta) << ','
       << (std::isnan(r.empirical_order) ? std::string() : format_double(r.empirical_order)) << ','
       << to_string(r.status) << '\n';
  }
  return os.str();
}

}  // namespace qns
