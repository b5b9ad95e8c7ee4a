#include "qns/symbol.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include "qns/errors.hpp"

namespace qns {
namespace {

// fftw planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

// In-place unnormalized DFT of a row-major M^d array.
void dft(std::vector<Complex>& data, const FrequencyGrid& g, int sign) {
  std::vector<int> dims(static_cast<std::size_t>(g.dim()), g.nodes_per_axis());
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft(g.dim(), dims.data(), buf, buf, sign, FFTW_ESTIMATE));
  }
  if (!plan) throw std::runtime_error("fftw: plan creation failed");
  fftw_execute(plan.get());
}

// Flat DFT index of grid node i (k_j mod M along each axis).
std::size_t dft_index(const FrequencyGrid& g, std::size_t grid_flat) {
  const std::size_t m = static_cast<std::size_t>(g.nodes_per_axis());
  const std::size_t K = static_cast<std::size_t>(g.half_width());
  std::size_t out = 0;
  std::size_t scale = 1;
  for (int j = g.dim() - 1; j >= 0; --j) {
    const std::size_t gi = grid_flat % m;  // k + K
    grid_flat /= m;
    out += ((gi + m - K) % m) * scale;
    scale *= m;
  }
  return out;
}

void require_same_lattice(const SymbolField& a, const SymbolField& b, const char* where) {
  if (!(a.grid() == b.grid())) throw PreconditionError(std::string(where) + ": symbols sampled on different lattices");
}

}  // namespace

SymbolField::SymbolField(FrequencyGrid grid, std::vector<Complex> samples)
    : grid_(std::move(grid)), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size()) {
    throw PreconditionError("SymbolField: expected " + std::to_string(grid_.size()) + " samples, got " +
                            std::to_string(samples_.size()));
  }
}

SymbolField SymbolField::sample(FrequencyGrid grid, const std::function<Complex(std::span<const double>)>& phi) {
  const int d = grid.dim();
  const double h = grid.box_length() / grid.nodes_per_axis();
  const std::size_t m = static_cast<std::size_t>(grid.nodes_per_axis());
  std::vector<Complex> s(grid.size());
  std::vector<double> t(static_cast<std::size_t>(d));
  for (std::size_t f = 0; f < grid.size(); ++f) {
    std::size_t r = f;
    for (int j = d - 1; j >= 0; --j) {
      t[static_cast<std::size_t>(j)] = h * static_cast<double>(r % m);
      r /= m;
    }
    s[f] = phi(t);
  }
  return SymbolField(std::move(grid), std::move(s));
}

SymbolField SymbolField::constant(FrequencyGrid grid, Complex value) {
  std::vector<Complex> s(grid.size(), value);
  return SymbolField(std::move(grid), std::move(s));
}

double SymbolField::position(std::size_t flat, int axis) const {
  const std::size_t m = static_cast<std::size_t>(grid_.nodes_per_axis());
  const std::size_t n = (flat / grid_.stride(axis)) % m;
  return grid_.box_length() * static_cast<double>(n) / static_cast<double>(m);
}

double SymbolField::sample_volume() const {
  return std::pow(grid_.box_length() / grid_.nodes_per_axis(), grid_.dim());
}

SymbolField operator+(const SymbolField& a, const SymbolField& b) {
  require_same_lattice(a, b, "SymbolField +");
  std::vector<Complex> s(a.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
  return SymbolField(a.grid(), std::move(s));
}

SymbolField operator-(const SymbolField& a, const SymbolField& b) {
  require_same_lattice(a, b, "SymbolField -");
  std::vector<Complex> s(a.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] - b[i];
  return SymbolField(a.grid(), std::move(s));
}

SymbolField operator*(const SymbolField& a, const SymbolField& b) {
  require_same_lattice(a, b, "SymbolField *");
  std::vector<Complex> s(a.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] * b[i];
  return SymbolField(a.grid(), std::move(s));
}

SymbolField operator*(Complex c, const SymbolField& a) {
  std::vector<Complex> s(a.samples().begin(), a.samples().end());
  for (auto& v : s) v *= c;
  return SymbolField(a.grid(), std::move(s));
}

double l2_norm(const SymbolField& phi) {
  double s = 0.0;
  for (const auto& v : phi.samples()) s += std::norm(v);
  return std::sqrt(phi.sample_volume() * s);
}

double max_abs_difference(const SymbolField& a, const SymbolField& b) {
  require_same_lattice(a, b, "max_abs_difference");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double imaginary_fraction(const SymbolField& phi) {
  double im = 0.0;
  double mx = 0.0;
  for (const auto& v : phi.samples()) {
    im = std::max(im, std::abs(v.imag()));
    mx = std::max(mx, std::abs(v));
  }
  return mx > 0.0 ? im / mx : 0.0;
}

double periodic_offset(double x, double L) {
  double r = std::fmod(x + 0.5 * L, L);
  if (r < 0.0) r += L;
  return r - 0.5 * L;
}

QElement from_symbol(const SymbolField& phi, const ThetaMatrix& theta) {
  const auto& g = phi.grid();
  if (theta.dim() != g.dim()) throw PreconditionError("from_symbol: theta dimension differs from the symbol lattice");
  std::vector<Complex> buf(phi.samples().begin(), phi.samples().end());
  dft(buf, g, FFTW_FORWARD);
  const double weight = phi.sample_volume();
  std::vector<Complex> f(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = weight * buf[dft_index(g, i)];
  return QElement(g, theta, std::move(f));
}

SymbolField to_symbol(const QElement& x) {
  const auto& g = x.grid();
  std::vector<Complex> buf(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) buf[dft_index(g, i)] = x[i];
  dft(buf, g, FFTW_BACKWARD);
  const double scale = 1.0 / std::pow(g.box_length(), g.dim());
  for (auto& v : buf) v *= scale;
  return SymbolField(g, std::move(buf));
}

}  // namespace qns
