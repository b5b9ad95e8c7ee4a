#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "json.hpp"

#include "qns/errors.hpp"
#include "qns/flow.hpp"
#include "qns/harmonic.hpp"

namespace qns {
namespace {

// Multiplicative slack for the constant-one inequalities: covers round-off only.
constexpr double kHardSlack = 1e-12;

class Tally {
 public:
  void add(const std::string& name, bool hard, double ratio, const std::string& notes) {
    auto& r = records_[name];
    r.name = name;
    r.hard = hard;
    r.notes = notes;
    ++r.trials;
    const bool ok = std::isfinite(ratio) && ratio <= 1.0 + kHardSlack;
    if (!hard || ok) ++r.passes;
    if (r.trials == 1 || !(ratio <= r.worst_ratio)) r.worst_ratio = ratio;
  }

  BatteryReport finish() const {
    BatteryReport out;
    for (const auto& [name, r] : records_) out.records.push_back(r);
    return out;
  }

 private:
  std::map<std::string, BatteryRecord> records_;
};

QElement random_element(const FrequencyGrid& g, const ThetaMatrix& th, int band, std::mt19937_64& rng,
                        bool zero_mean) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Complex> c(g.size());
  std::vector<int> k(static_cast<std::size_t>(g.dim()));
  for (std::size_t i = 0; i < g.size(); ++i) {
    g.lattice(i, k);
    const bool inside = std::all_of(k.begin(), k.end(), [&](int v) { return std::abs(v) <= band; });
    if (!inside) continue;
    const double re = n(rng);
    const double im = n(rng);
    c[i] = Complex(re, im);
  }
  if (zero_mean) c[g.origin()] = 0.0;
  return QElement(g, th, std::move(c));
}

QElement restrict_to_disk(const QElement& x, double radius) {
  const auto& sq = x.grid().squared_norms();
  std::vector<Complex> c(x.coeffs().begin(), x.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sq[i] > radius * radius) c[i] = 0.0;
  }
  return QElement(x.grid(), x.theta(), std::move(c));
}

double gradient_l2(const QElement& x) { return l2_norm(VelocityField(gradient(x))); }

}  // namespace

bool BatteryReport::all_hard_passed() const {
  return std::all_of(records.begin(), records.end(), [](const BatteryRecord& r) { return !r.hard || r.passes == r.trials; });
}

std::string BatteryReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"name", r.name}, {"trials", r.trials}, {"passes", r.passes}, {"worst_ratio", r.worst_ratio},
                   {"notes", r.notes}});
  }
  return arr.dump(2);
}

BatteryReport inequality_battery(std::uint64_t seed, int trials, const BatteryOptions& options) {
  if (trials < 1) throw PreconditionError("inequality_battery: trials must be >= 1");
  if (options.band < 1 || 2 * options.band > options.K) {
    throw PreconditionError("inequality_battery: band must lie in [1, K/2]");
  }
  const FrequencyGrid g(2, options.K, options.L);
  const ThetaMatrix th = ThetaMatrix::planar(options.theta12);
  const auto project = options.projector ? options.projector
                                         : [](const std::vector<QElement>& u) { return leray_project(u); };
  const DyadicPartition part(g);
  const double dxi = g.spacing();
  const std::string hard_note = "hard: constant 1";
  const std::string soft_note = "report-only: constant not explicit";

  Tally tally;
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const QElement x = random_element(g, th, options.band, rng, false);

    // Hausdorff-Young 4/3 -> 4
    tally.add("HY", true, schatten_norm(x, 4) / coeff_lp_norm(x, 4.0 / 3.0), hard_note);

    const double t = unit(rng);
    const QElement hx = heat(t, x);
    tally.add("HeatContract_p2", true, schatten_norm(hx, 2) / schatten_norm(x, 2), hard_note);
    tally.add("HeatContract_p4", true, schatten_norm(hx, 4) / schatten_norm(x, 4), hard_note);

    // trial 0 pins t = 0, where both sides agree
    const double tb = trial == 0 ? 0.0 : t;
    const QElement hb = heat(tb, x);
    double worst = 0.0;
    for (int j = part.j_min(); j <= part.j_max(); ++j) {
      const double rhs = std::exp(-tb * std::ldexp(1.0, 2 * (j - 1))) * schatten_norm(lp_block(x, j), 2);
      if (rhs == 0.0) continue;
      worst = std::max(worst, schatten_norm(lp_block(hb, j), 2) / rhs);
    }
    tally.add("BlockDecay", true, worst, hard_note + "; exact ring bound exp(-t 4^(j-1))");

    std::vector<QElement> u{random_element(g, th, options.band, rng, false),
                            random_element(g, th, options.band, rng, false)};
    tally.add("Leray", true, l2_norm(VelocityField(project(u))) / l2_norm(VelocityField(u)), hard_note);

    // Bernstein: frequency support in |xi| <= r gives ||x||_4 <= C r^{d/4} ||x||_2
    const double r = dxi * (2.0 + (options.band - 2.0) * unit(rng));
    const QElement xb = restrict_to_disk(random_element(g, th, options.band, rng, false), r);
    tally.add("Bernstein", false, schatten_norm(xb, 4) / (std::sqrt(r) * schatten_norm(xb, 2)),
              soft_note + "; ratio ||x||_4 / (r^(1/2) ||x||_2)");

    const QElement z = random_element(g, th, options.band, rng, true);
    const double z2 = schatten_norm(z, 2);
    const double z4 = schatten_norm(z, 4);
    tally.add("GagliardoNirenberg", false, z4 / std::sqrt(z2 * gradient_l2(z)),
              soft_note + "; ratio ||x||_4 / (||x||_2 ||grad x||_2)^(1/2)");

    const double b_half = besov_norm(z, {0.5, 2, 2.0, true});
    tally.add("BesovEmbedding_ii", false, besov_norm(z, {0.0, 4, 2.0, true}) / b_half,
              soft_note + "; ratio B^0_{4,2} / B^{1/2}_{2,2}");
    tally.add("BesovEmbedding_iii", false, z4 / b_half, soft_note + "; ratio ||x||_4 / B^{1/2}_{2,2}");
    tally.add("BesovEmbedding_iv", false, besov_norm(z, {0.0, 2, 2.0, true}) / z2,
              soft_note + "; ratio B^0_{2,2} / ||x||_2");

    const int half = std::max(1, options.band / 2);
    const QElement a = random_element(g, th, half, rng, false);
    const QElement b = random_element(g, th, half, rng, false);
    const BesovSpec s1{1.0, 2, 2.0, false};
    const double rhs = besov_norm(a, s1) * opnorm_estimate(b, 12) + opnorm_estimate(a, 12) * besov_norm(b, s1);
    tally.add("ProductEstimate", false, besov_norm(a * b, s1) / rhs,
              soft_note + "; ratio B^1_{2,2}(ab) / (B(a) |b|_inf + |a|_inf B(b)), sup norms estimated");
  }
  return tally.finish();
}

}  // namespace qns
