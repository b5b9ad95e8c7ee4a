#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "cli/config.hpp"
#include "qns/harmonic.hpp"

namespace qns::cli {

using Projector = std::function<std::vector<QElement>(const std::vector<QElement>&)>;

/// Structural invariant checks for the algebra and flow layers, as battery-style records.
std::vector<BatteryRecord> algebra_suite(std::uint64_t seed, int trials);
std::vector<BatteryRecord> flow_suite(std::uint64_t seed, int trials, const Projector& projector);

/// Each command writes into rc.out_dir and returns the process exit status.
int cmd_solve(const RunConfig& rc, std::ostream& log);
int cmd_picard(const RunConfig& rc, std::ostream& log);
/// projector replaces the Leray projection under test (empty: the library one).
int cmd_verify(const RunConfig& rc, std::ostream& log, const Projector& projector = {});
int cmd_sweep_theta(const RunConfig& rc, std::ostream& log);
int cmd_norms(const RunConfig& rc, std::ostream& log);

}  // namespace qns::cli
