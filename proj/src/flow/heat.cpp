#include <cmath>
#include <string>

#include "qns/errors.hpp"
#include "qns/flow.hpp"

namespace qns {

VelocityField::VelocityField(std::vector<QElement> components) : components_(std::move(components)) {
  if (components_.empty()) throw PreconditionError("VelocityField: no components");
  for (const auto& c : components_) require_compatible(components_.front(), c, "VelocityField");
  if (static_cast<int>(components_.size()) != components_.front().grid().dim()) {
    throw PreconditionError("VelocityField: component count must equal the dimension");
  }
}

double VelocityField::self_adjoint_defect() const {
  double m = 0.0;
  for (const auto& c : components_) m = std::max(m, qns::self_adjoint_defect(c));
  return m;
}

VelocityField VelocityField::zero(const FrequencyGrid& grid, const ThetaMatrix& theta) {
  return VelocityField(std::vector<QElement>(static_cast<std::size_t>(grid.dim()), QElement(grid, theta)));
}

VelocityField operator+(const VelocityField& a, const VelocityField& b) {
  std::vector<QElement> c;
  for (int j = 0; j < a.dim(); ++j) c.push_back(a[j] + b[j]);
  return VelocityField(std::move(c));
}

VelocityField operator-(const VelocityField& a, const VelocityField& b) {
  std::vector<QElement> c;
  for (int j = 0; j < a.dim(); ++j) c.push_back(a[j] - b[j]);
  return VelocityField(std::move(c));
}

VelocityField operator*(Complex s, const VelocityField& a) {
  std::vector<QElement> c;
  for (int j = 0; j < a.dim(); ++j) c.push_back(s * a[j]);
  return VelocityField(std::move(c));
}

VelocityField symmetrized(const VelocityField& u) {
  std::vector<QElement> c;
  for (const auto& x : u.components()) c.push_back(self_adjoint_part(x));
  return VelocityField(std::move(c));
}

double l2_norm(const VelocityField& u) {
  double s = 0.0;
  for (const auto& c : u.components()) {
    const double n = schatten_norm(c, 2);
    s += n * n;
  }
  return std::sqrt(s);
}

double schatten_norm(const VelocityField& u, int p) {
  if (p == 2) return l2_norm(u);
  double s = 0.0;
  for (const auto& c : u.components()) s += std::pow(schatten_norm(c, p), p);
  return std::pow(s, 1.0 / p);
}

bool has_nonfinite(const VelocityField& u) {
  for (const auto& c : u.components()) {
    for (const auto& v : c.coeffs()) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return true;
    }
  }
  return false;
}

QElement heat(double t, const QElement& x) {
  if (!(t >= 0.0)) throw PreconditionError("heat: t must be >= 0, got " + std::to_string(t));
  if (t == 0.0) return x;
  const auto& sq = x.grid().squared_norms();
  std::vector<Complex> out(x.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::exp(-t * sq[i]) * x[i];
  return QElement(x.grid(), x.theta(), std::move(out));
}

VelocityField heat(double t, const VelocityField& u) {
  std::vector<QElement> c;
  for (const auto& x : u.components()) c.push_back(heat(t, x));
  return VelocityField(std::move(c));
}

QElement duhamel(const std::vector<QElement>& samples, double ds, double t) {
  if (samples.empty()) throw PreconditionError("duhamel: no samples");
  if (!(ds > 0.0)) throw PreconditionError("duhamel: ds must be positive");
  const std::size_t n = samples.size() - 1;
  const double span = static_cast<double>(n) * ds;
  if (std::abs(span - t) > 1e-9 * std::max(1.0, std::abs(t))) {
    throw PreconditionError("duhamel: samples cover [0, " + std::to_string(span) + "], not [0, " + std::to_string(t) +
                            "]");
  }
  QElement acc(samples.front().grid(), samples.front().theta());
  if (n == 0) return acc;
  for (std::size_t i = 0; i <= n; ++i) {
    const double wgt = (i == 0 || i == n) ? 0.5 * ds : ds;
    acc += Complex(wgt) * heat(static_cast<double>(n - i) * ds, samples[i]);
  }
  return acc;
}

VelocityField duhamel(const std::vector<VelocityField>& samples, double ds, double t) {
  if (samples.empty()) throw PreconditionError("duhamel: no samples");
  std::vector<QElement> out;
  for (int j = 0; j < samples.front().dim(); ++j) {
    std::vector<QElement> comp;
    comp.reserve(samples.size());
    for (const auto& s : samples) comp.push_back(s[j]);
    out.push_back(duhamel(comp, ds, t));
  }
  return VelocityField(std::move(out));
}

}  // namespace qns
