#include <cmath>
#include <numbers>
#include <random>

#include "qns/errors.hpp"
#include "qns/ns.hpp"
#include "qns/symbol.hpp"

namespace qns {
namespace {

// At theta = 0 an element is (2 pi)^d times its symbol; rescale so the element is the classical field.
QElement classical_field(const SymbolField& phi, const ThetaMatrix& theta) {
  return Complex(std::pow(2.0 * std::numbers::pi, -phi.grid().dim())) * from_symbol(phi, theta);
}

VelocityField taylor_green(const SolverConfig& c, const FrequencyGrid& g) {
  if (c.d != 2) throw PreconditionError("taylor_green: needs d = 2");
  const double k0 = 2.0 * std::numbers::pi / c.L;
  const double a = c.initial.amplitude;
  const auto u1 = SymbolField::sample(g, [&](std::span<const double> x) {
    return Complex(a * std::cos(k0 * x[0]) * std::sin(k0 * x[1]));
  });
  const auto u2 = SymbolField::sample(g, [&](std::span<const double> x) {
    return Complex(-a * std::sin(k0 * x[0]) * std::cos(k0 * x[1]));
  });
  return VelocityField({classical_field(u1, c.theta), classical_field(u2, c.theta)});
}

// Counter-rotating Gaussian vortices from a stream function psi: u = (d_y psi, -d_x psi).
VelocityField vortex_pair(const SolverConfig& c, const FrequencyGrid& g) {
  if (c.d != 2) throw PreconditionError("gaussian_vortex_pair: needs d = 2");
  const double L = c.L;
  const double sigma = L / 10.0;
  const double cx1 = 0.5 * L - L / 8.0;
  const double cx2 = 0.5 * L + L / 8.0;
  const double cy = 0.5 * L;
  auto bump = [&](double x, double y, double px, double py) {
    const double dx = periodic_offset(x - px, L);
    const double dy = periodic_offset(y - py, L);
    return std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
  };
  const auto psi = SymbolField::sample(g, [&](std::span<const double> x) {
    return Complex(c.initial.amplitude * (bump(x[0], x[1], cx1, cy) - bump(x[0], x[1], cx2, cy)));
  });
  const QElement p = classical_field(psi, c.theta);
  return VelocityField({partial_derivative(1, p), Complex(-1.0) * partial_derivative(0, p)});
}

VelocityField random_field(const SolverConfig& c, const FrequencyGrid& g) {
  const int band = c.initial.band;
  if (band < 1 || band > c.K) throw PreconditionError("random_bandlimited: band must lie in [1, K]");
  std::mt19937_64 rng(c.initial.seed);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<QElement> comps;
  std::vector<int> k(static_cast<std::size_t>(g.dim()));
  for (int j = 0; j < c.d; ++j) {
    std::vector<Complex> f(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      g.lattice(i, k);
      bool inside = true;
      for (int v : k) inside = inside && std::abs(v) <= band;
      if (!inside || i == g.origin()) continue;
      const double re = n(rng);
      const double im = n(rng);
      f[i] = Complex(re, im);
    }
    comps.emplace_back(g, c.theta, std::move(f));
  }
  return VelocityField(std::move(comps));
}

}  // namespace

VelocityField initial_field(const SolverConfig& config) {
  config.validate();
  const FrequencyGrid g = config.grid();
  const auto& type = config.initial.type;
  VelocityField u = VelocityField::zero(g, config.theta);
  if (type == "taylor_green") {
    u = taylor_green(config, g);
  } else if (type == "gaussian_vortex_pair") {
    u = vortex_pair(config, g);
  } else if (type == "random_bandlimited") {
    u = random_field(config, g);
  } else if (type == "zero") {
    return u;
  } else {
    throw PreconditionError("initial_condition: unknown type '" + type + "'");
  }
  u = leray_project(u);
  if (config.initial.self_adjoint) u = symmetrized(u);
  if (type == "random_bandlimited") {
    const double n = l2_norm(u);
    if (n > 0.0) u = Complex(config.initial.amplitude / n) * u;
  }
  return u;
}

}  // namespace qns
