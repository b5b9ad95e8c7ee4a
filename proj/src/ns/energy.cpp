#include <algorithm>

#include "qns/ns.hpp"

namespace qns {

EnergyReport energy_report(const Trajectory& traj) {
  EnergyReport r;
  r.identity_expected = traj.energy_identity_expected;
  r.label = r.identity_expected ? "energy identity" : "identity not expected";
  for (const auto& s : traj.series) {
    r.times.push_back(s.t);
    r.residual.push_back(s.energy_residual);
    r.max_residual = std::max(r.max_residual, s.energy_residual);
  }
  return r;
}

double energy_scaling(const Trajectory& coarse, const Trajectory& fine) {
  return energy_report(coarse).max_residual / energy_report(fine).max_residual;
}

}  // namespace qns
