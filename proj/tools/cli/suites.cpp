#include <algorithm>
#include <cmath>
#include <random>

#include "cli/commands.hpp"
#include "qns/flow.hpp"

namespace qns::cli {
namespace {

class Checks {
 public:
  void add(const std::string& name, double err, double tol) {
    auto it = std::find_if(records_.begin(), records_.end(), [&](const BatteryRecord& r) { return r.name == name; });
    if (it == records_.end()) {
      records_.push_back({name, 0, 0, 0.0, "hard: relative error <= " + std::to_string(tol), true});
      it = records_.end() - 1;
    }
    ++it->trials;
    const double ratio = err / tol;
    if (ratio <= 1.0) ++it->passes;
    if (!(ratio <= it->worst_ratio)) it->worst_ratio = ratio;
  }

  std::vector<BatteryRecord> finish() {
    std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return records_;
  }

 private:
  std::vector<BatteryRecord> records_;
};

QElement random_element(const FrequencyGrid& g, const ThetaMatrix& th, int band, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Complex> c(g.size());
  std::vector<int> k(static_cast<std::size_t>(g.dim()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    g.lattice(i, k);
    if (std::abs(k[0]) > band || std::abs(k[1]) > band) continue;
    const double re = n(rng);
    const double im = n(rng);
    c[i] = Complex(re, im);
  }
  return QElement(g, th, std::move(c));
}

double rel(const QElement& err, const QElement& ref) {
  const double r = schatten_norm(ref, 2);
  return schatten_norm(err, 2) / (r > 0.0 ? r : 1.0);
}

}  // namespace

std::vector<BatteryRecord> algebra_suite(std::uint64_t seed, int trials) {
  const FrequencyGrid g(2, 8, 2.0 * 3.14159265358979323846);
  const ThetaMatrix th = ThetaMatrix::planar(0.8);
  Checks checks;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(t));
    const QElement x = random_element(g, th, 2, rng);
    const QElement y = random_element(g, th, 2, rng);
    const QElement z = random_element(g, th, 2, rng);
    const QElement xy = x * y;
    const double scale = schatten_norm(x, 2) * schatten_norm(y, 2);
    checks.add("algebra.trace_cyclicity", std::abs(trace(xy) - trace(y * x)) / scale, 1e-12);
    checks.add("algebra.adjoint_antihomomorphism", rel(adjoint(xy) - adjoint(y) * adjoint(x), xy), 1e-12);
    const QElement dxy = partial_derivative(0, xy);
    checks.add("algebra.leibniz", rel(dxy - partial_derivative(0, x) * y - x * partial_derivative(0, y), dxy), 1e-12);
    const QElement left = xy * z;
    checks.add("algebra.associativity", rel(left - x * (y * z), left), 1e-12);
  }
  return checks.finish();
}

std::vector<BatteryRecord> flow_suite(std::uint64_t seed, int trials, const Projector& projector) {
  const FrequencyGrid g(2, 10, 2.0 * 3.14159265358979323846);
  const ThetaMatrix th = ThetaMatrix::planar(0.5);
  const Projector project = projector ? projector : [](const std::vector<QElement>& u) { return leray_project(u); };
  Checks checks;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed * 7919ULL + static_cast<std::uint64_t>(t));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const QElement x = random_element(g, th, 10, rng);
    const double s = unit(rng);
    const double r = unit(rng);
    checks.add("flow.heat_semigroup", rel(heat(s, heat(r, x)) - heat(s + r, x), x), 1e-13);
    const VelocityField u({random_element(g, th, 10, rng), random_element(g, th, 10, rng)});
    const VelocityField pu(project(u.components()));
    const VelocityField ppu(project(pu.components()));
    checks.add("flow.leray_idempotent", l2_norm(ppu - pu) / l2_norm(u), 1e-13);
    checks.add("flow.leray_divergence_free", divergence_defect(pu), 1e-12);
  }
  return checks.finish();
}

}  // namespace qns::cli
