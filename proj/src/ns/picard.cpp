#include <cmath>

#include "qns/errors.hpp"
#include "qns/ns.hpp"

namespace qns {

double path_distance(const std::vector<VelocityField>& a, const std::vector<VelocityField>& b, double dt, int p) {
  if (a.size() != b.size() || a.empty()) throw PreconditionError("path_distance: paths differ in length");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double wgt = (i == 0 || i + 1 == a.size()) ? 0.5 * dt : dt;
    acc += wgt * std::pow(schatten_norm(a[i] - b[i], p), p);
  }
  if (a.size() == 1) acc = std::pow(schatten_norm(a[0] - b[0], p), p);
  return std::pow(acc, 1.0 / p);
}

PicardReport picard_iterate(const SolverConfig& config, const VelocityField& u0) {
  config.validate();
  const int n = config.steps();
  const double h = config.step_size();
  const int p = monitor_exponent(config.d);
  auto drive = [&](const VelocityField& u) {
    return Complex(-1.0) * leray_project(nonlinear(u, config.form, config.divergence_form));
  };

  PicardReport rep;
  std::vector<VelocityField> base;
  for (int i = 0; i <= n; ++i) {
    rep.times.push_back(i * h);
    base.push_back(heat(i * h, u0));
  }
  std::vector<VelocityField> cur = base;
  for (int m = 0; m < config.picard_iters; ++m) {
    std::vector<VelocityField> next{base.front()};
    VelocityField integral = VelocityField::zero(u0.grid(), u0.theta());
    VelocityField f_prev = drive(cur.front());
    for (int i = 1; i <= n; ++i) {
      VelocityField f = drive(cur[static_cast<std::size_t>(i)]);
      // trapezoid recursion: I_i = H(h) (I_{i-1} + h/2 f_{i-1}) + h/2 f_i
      integral = heat(h, integral + Complex(0.5 * h) * f_prev) + Complex(0.5 * h) * f;
      next.push_back(base[static_cast<std::size_t>(i)] + integral);
      f_prev = std::move(f);
    }
    for (const auto& v : next) {
      if (has_nonfinite(v)) {
        rep.status = RunStatus::NumericalFailure;
        rep.failed_iterate = m + 1;
        rep.message = "non-finite coefficient in iterate " + std::to_string(m + 1);
        rep.limit = cur;
        return rep;
      }
    }
    rep.distances.push_back(path_distance(next, cur, h, p));
    cur = std::move(next);
  }
  for (std::size_t m = 1; m < rep.distances.size(); ++m) {
    rep.ratios.push_back(rep.distances[m - 1] > 0.0 ? rep.distances[m] / rep.distances[m - 1] : 0.0);
  }
  rep.limit = std::move(cur);
  return rep;
}

double picard_quadrature_bound(const SolverConfig& config, const VelocityField& u0) {
  const auto coarse = picard_iterate(config, u0);
  SolverConfig fine_cfg = config;
  fine_cfg.dt = config.step_size() / 2.0;
  const auto fine = picard_iterate(fine_cfg, u0);
  if (coarse.status != RunStatus::Completed || fine.status != RunStatus::Completed) {
    throw EvaluationError("picard_quadrature_bound: Picard iteration failed");
  }
  std::vector<VelocityField> sub;
  for (std::size_t i = 0; i < fine.limit.size(); i += 2) sub.push_back(fine.limit[i]);
  return path_distance(coarse.limit, sub, config.step_size(), monitor_exponent(config.d)) * 4.0 / 3.0;
}

}  // namespace qns
