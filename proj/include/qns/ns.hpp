/// @file ns.hpp
/// @brief Navier-Stokes on the quantum Euclidean space: nonlinear terms,
/// exponential time stepping of the mild form, Picard iteration and diagnostics.
///
/// The equation is du/dt = nu Delta u - P F(u), with F the A-form
/// sum_j u_j * d_j u_k or its symmetrization (S-form).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qns/flow.hpp"

namespace qns {

enum class Nonlinearity { A, S };
enum class Scheme { ETDRK2, Picard };
enum class RunStatus { Completed, NormGrowth, NumericalFailure };

std::string to_string(Nonlinearity f);
std::string to_string(Scheme s);
std::string to_string(RunStatus s);
/// 0 completed, 2 norm growth, 3 numerical failure.
int exit_code(RunStatus s);

struct InitialCondition {
  /// taylor_green, gaussian_vortex_pair or random_bandlimited.
  std::string type = "taylor_green";
  double amplitude = 1.0;
  /// random_bandlimited only: modes with |k_j| <= band.
  int band = 3;
  std::uint64_t seed = 1;
  bool self_adjoint = true;
};

struct SolverConfig {
  int d = 2;
  int K = 16;
  double L = 2.0 * 3.14159265358979323846;
  ThetaMatrix theta{2};
  double viscosity = 1.0;
  Nonlinearity form = Nonlinearity::S;
  Scheme scheme = Scheme::ETDRK2;
  double dt = 1e-2;
  double T = 1.0;
  int picard_iters = 8;
  int snapshot_stride = 1;
  bool deterministic = false;
  std::uint64_t seed = 0;
  InitialCondition initial;
  /// Ceiling on the running L_p([0,t]; S_p) norm, p the monitor exponent.
  double norm_ceiling = 1e6;
  /// Evaluate F as sum_j d_j(u_j * u_k) (or its symmetrization) instead.
  bool divergence_form = false;

  FrequencyGrid grid() const { return FrequencyGrid(d, K, L); }
  /// Throws PreconditionError on any out-of-range field.
  void validate() const;
  /// Number of steps ceil(T / dt); the step actually used is T / steps.
  int steps() const;
  double step_size() const;
};

/// d + 2 when even, else d + 3.
int monitor_exponent(int d);
/// Conservative explicit-scale step 0.5 / (nu xi_max^2); the exponential scheme does not need it.
double suggested_dt(const SolverConfig& config);

/// Divergence-free initial field built from the configured symbol, projected
/// and, if requested, made self-adjoint.
VelocityField initial_field(const SolverConfig& config);

/// F(u) in the requested form, derivatives taken before products.
VelocityField nonlinear(const VelocityField& u, Nonlinearity form, bool divergence_form = false);
/// p = |xi|^{-2} div F(u), p(0) = 0.
QElement pressure(const VelocityField& u, Nonlinearity form);

/// Re sum_k tau(F(u)_k * u_k).
double energy_production(const VelocityField& u, const VelocityField& f);

/// One exponential Runge-Kutta step of size dt.
VelocityField step_etdrk2(const VelocityField& u, double dt, const SolverConfig& config);

struct StepDiagnostics {
  double t = 0.0;
  double l2 = 0.0;
  double h1dot = 0.0;
  /// Schatten norm at the monitor exponent.
  double s4 = 0.0;
  double energy_residual = 0.0;
  double edge_mass = 0.0;
  double production = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<VelocityField> snapshots;
  /// One entry per step including t = 0.
  std::vector<StepDiagnostics> series;
  /// Flags which series entries fall on the snapshot stride (always true for t = 0 and the last step).
  std::vector<bool> recorded;
  RunStatus status = RunStatus::Completed;
  std::string message;
  int monitor_p = 4;
  bool monitor_surrogate = false;
  double monitor_value = 0.0;
  bool energy_identity_expected = false;

  /// Columns t, l2, h1dot, s4, energy_residual, edge_mass, status; rows for recorded steps >= 1.
  std::string diagnostics_csv() const;
};

/// Steps to T; stops early on norm growth or non-finite coefficients.
Trajectory solve(const SolverConfig& config, const VelocityField& u0);

struct PicardReport {
  std::vector<double> times;
  /// distances[m] = d(u^{(m+1)}, u^{(m)}).
  std::vector<double> distances;
  /// ratios[m] = distances[m+1] / distances[m].
  std::vector<double> ratios;
  std::vector<VelocityField> limit;
  RunStatus status = RunStatus::Completed;
  int failed_iterate = -1;
  std::string message;
};

/// Discrete L_p([0,T]; S_p) distance (trapezoid in time) between sampled paths.
double path_distance(const std::vector<VelocityField>& a, const std::vector<VelocityField>& b, double dt, int p);

/// Iterates u -> H u0 - int H(t-s) P F(u(s)) ds on the fixed grid ceil(T/dt).
PicardReport picard_iterate(const SolverConfig& config, const VelocityField& u0);

/// ||limit_dt - limit_{dt/2}|| * 4/3 in the path metric.
double picard_quadrature_bound(const SolverConfig& config, const VelocityField& u0);

struct EnergyReport {
  std::vector<double> times;
  std::vector<double> residual;
  double max_residual = 0.0;
  bool identity_expected = false;
  std::string label;
};

EnergyReport energy_report(const Trajectory& traj);
/// max residual of the coarse run over that of the fine run.
double energy_scaling(const Trajectory& coarse, const Trajectory& fine);

}  // namespace qns
