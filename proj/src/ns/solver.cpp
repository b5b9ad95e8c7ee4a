#include <cmath>
#include <sstream>

#include "qns/errors.hpp"
#include "qns/exec.hpp"
#include "qns/format.hpp"
#include "qns/ns.hpp"

namespace qns {
namespace {

// Past this |z| the closed forms of phi1, phi2 lose fewer digits than the series.
constexpr double kSeriesCutoff = 1e-4;

double phi1(double z) {
  if (std::abs(z) < kSeriesCutoff) return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
  return std::expm1(z) / z;
}

double phi2(double z) {
  if (std::abs(z) < kSeriesCutoff) return 0.5 + z / 6.0 + z * z / 24.0 + z * z * z / 120.0;
  return (std::expm1(z) - z) / (z * z);
}

VelocityField minus_projected(const VelocityField& f) { return Complex(-1.0) * leray_project(f); }

// out_k(xi) = a(xi) x_k(xi) + b(xi) y_k(xi)
VelocityField combine(const std::vector<double>& a, const VelocityField& x, const std::vector<double>& b,
                      const VelocityField& y) {
  std::vector<QElement> out;
  for (int k = 0; k < x.dim(); ++k) {
    std::vector<Complex> c(x.grid().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] * x[k][i] + b[i] * y[k][i];
    out.emplace_back(x.grid(), x.theta(), std::move(c));
  }
  return VelocityField(std::move(out));
}

struct StepTables {
  std::vector<double> e, hphi1, hphi2;
};

StepTables tables(const FrequencyGrid& g, double nu, double h) {
  const auto& sq = g.squared_norms();
  StepTables t;
  t.e.resize(g.size());
  t.hphi1.resize(g.size());
  t.hphi2.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double z = -nu * h * sq[i];
    t.e[i] = std::exp(z);
    t.hphi1[i] = h * phi1(z);
    t.hphi2[i] = h * phi2(z);
  }
  return t;
}

VelocityField advance(const VelocityField& u, const VelocityField& nu_u, const StepTables& t,
                      const SolverConfig& c) {
  const VelocityField a = combine(t.e, u, t.hphi1, nu_u);
  const VelocityField na = minus_projected(nonlinear(a, c.form, c.divergence_form));
  const std::vector<double> one(t.e.size(), 1.0);
  return combine(one, a, t.hphi2, na - nu_u);
}

double field_edge_mass(const VelocityField& u) {
  double num = 0.0, den = 0.0;
  for (const auto& c : u.components()) {
    const double n = schatten_norm(c, 2);
    num += edge_mass(c) * n * n;
    den += n * n;
  }
  return den > 0.0 ? num / den : 0.0;
}

double h1dot(const VelocityField& u) {
  double s = 0.0;
  for (const auto& c : u.components()) {
    for (const auto& g : gradient(c)) {
      const double n = schatten_norm(g, 2);
      s += n * n;
    }
  }
  return std::sqrt(s);
}

}  // namespace

std::string to_string(Nonlinearity f) { return f == Nonlinearity::A ? "A" : "S"; }
std::string to_string(Scheme s) { return s == Scheme::ETDRK2 ? "ETDRK2" : "Picard"; }

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Completed: return "completed";
    case RunStatus::NormGrowth: return "norm_growth";
    case RunStatus::NumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

int exit_code(RunStatus s) {
  switch (s) {
    case RunStatus::Completed: return 0;
    case RunStatus::NormGrowth: return 2;
    case RunStatus::NumericalFailure: return 3;
  }
  return 3;
}

void SolverConfig::validate() const {
  auto fail = [](const std::string& m) { throw PreconditionError("config: " + m); };
  if (d < 2) fail("d must be >= 2");
  if (K < 1) fail("K must be >= 1");
  if (!(L > 0.0) || !std::isfinite(L)) fail("L must be positive");
  if (theta.dim() != d) fail("theta dimension differs from d");
  if (!(viscosity > 0.0) || !std::isfinite(viscosity)) fail("viscosity must be positive");
  if (!(dt > 0.0) || !std::isfinite(dt)) fail("dt must be positive");
  if (!(T >= 0.0) || !std::isfinite(T)) fail("T must be >= 0");
  if (T > 0.0 && dt > T) fail("dt must not exceed T");
  if (picard_iters < 1) fail("picard_iters must be >= 1");
  if (snapshot_stride < 1) fail("snapshot_stride must be >= 1");
  if (!(norm_ceiling > 0.0)) fail("norm_ceiling must be positive");
}

int SolverConfig::steps() const {
  if (T == 0.0) return 0;
  return static_cast<int>(std::ceil(T / dt - 1e-12));
}

double SolverConfig::step_size() const {
  const int n = steps();
  return n == 0 ? dt : T / n;
}

int monitor_exponent(int d) { return (d % 2 == 0) ? d + 2 : d + 3; }

double suggested_dt(const SolverConfig& c) {
  const double xi_max = std::sqrt(static_cast<double>(c.d)) * c.K * 2.0 * 3.14159265358979323846 / c.L;
  return 0.5 / (c.viscosity * xi_max * xi_max);
}

VelocityField step_etdrk2(const VelocityField& u, double dt, const SolverConfig& config) {
  if (!(dt > 0.0)) throw PreconditionError("step_etdrk2: dt must be positive");
  const auto t = tables(u.grid(), config.viscosity, dt);
  return advance(u, minus_projected(nonlinear(u, config.form, config.divergence_form)), t, config);
}

Trajectory solve(const SolverConfig& config, const VelocityField& u0) {
  config.validate();
  if (!(u0.grid() == config.grid()) || !(u0.theta() == config.theta)) {
    throw PreconditionError("solve: initial field does not match the configured grid and theta");
  }
  set_summation(config.deterministic ? Summation::Deterministic : Summation::Parallel);

  const int n = config.steps();
  const double h = config.step_size();
  const int p = monitor_exponent(config.d);
  const auto tab = tables(u0.grid(), config.viscosity, h);

  Trajectory traj;
  traj.monitor_p = p;
  traj.monitor_surrogate = (config.d % 2 != 0);
  traj.energy_identity_expected = config.form == Nonlinearity::S && u0.is_self_adjoint();

  auto diagnose = [&](const VelocityField& u, double t) {
    StepDiagnostics s;
    s.t = t;
    s.l2 = l2_norm(u);
    s.h1dot = h1dot(u);
    s.s4 = schatten_norm(u, p);
    s.edge_mass = field_edge_mass(u);
    return s;
  };
  auto record = [&](const VelocityField& u, double t) {
    traj.times.push_back(t);
    traj.snapshots.push_back(u);
  };

  VelocityField u = u0;
  StepDiagnostics cur = diagnose(u, 0.0);
  const double e0 = 0.5 * cur.l2 * cur.l2;
  double dissipated = 0.0;
  double monitor_acc = 0.0;
  traj.series.push_back(cur);
  traj.recorded.push_back(true);
  record(u, 0.0);

  for (int step = 1; step <= n; ++step) {
    const VelocityField f = nonlinear(u, config.form, config.divergence_form);
    traj.series.back().production = energy_production(u, f);
    VelocityField next = advance(u, minus_projected(f), tab, config);
    const double t = step * h;
    if (has_nonfinite(next)) {
      traj.status = RunStatus::NumericalFailure;
      traj.message = "non-finite coefficient at t=" + format_double(t);
      if (!traj.recorded.back()) {
        traj.recorded.back() = true;
        record(u, traj.series.back().t);
      }
      return traj;
    }
    u = std::move(next);
    StepDiagnostics s = diagnose(u, t);
    dissipated += config.viscosity * 0.5 * h * (cur.h1dot * cur.h1dot + s.h1dot * s.h1dot);
    s.energy_residual = std::abs(0.5 * s.l2 * s.l2 + dissipated - e0);
    monitor_acc += 0.5 * h * (std::pow(cur.s4, p) + std::pow(s.s4, p));
    traj.monitor_value = std::pow(monitor_acc, 1.0 / p);
    const bool growth = !(traj.monitor_value <= config.norm_ceiling);
    const bool keep = growth || step == n || step % config.snapshot_stride == 0;
    traj.series.push_back(s);
    traj.recorded.push_back(keep);
    if (keep) record(u, t);
    cur = s;
    if (growth) {
      traj.status = RunStatus::NormGrowth;
      traj.message = "running L" + std::to_string(p) + " norm " + format_double(traj.monitor_value) +
                     " exceeded ceiling " + format_double(config.norm_ceiling) + " at t=" + format_double(t);
      return traj;
    }
  }
  traj.series.back().production = energy_production(u, nonlinear(u, config.form, config.divergence_form));
  return traj;
}

std::string Trajectory::diagnostics_csv() const {
  std::ostringstream os;
  os << "t,l2,h1dot,s4,energy_residual,edge_mass,status\n";
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (!recorded[i]) continue;
    const auto& s = series[i];
    const std::string st = (i + 1 == series.size()) ? to_string(status) : "ok";
    os << format_double(s.t) << ',' << format_double(s.l2) << ',' << format_double(s.h1dot) << ','
       << format_double(s.s4) << ',' << format_double(s.energy_residual) << ',' << format_double(s.edge_mass) << ','
       << st << '\n';
  }
  return os.str();
}

}  // namespace qns
