/// @file semiclassic.hpp
/// @brief Moyal product of symbols and theta -> 0 convergence sweeps.
#pragma once

#include <string>
#include <vector>

#include "qns/ns.hpp"
#include "qns/symbol.hpp"

namespace qns {

/// (2 pi)^{-d} to_symbol(from_symbol(phi) *_theta from_symbol(psi)); the plain product at theta = 0.
SymbolField moyal_product(const SymbolField& phi, const SymbolField& psi, const ThetaMatrix& theta);
/// (phi * psi + psi * phi) / 2.
SymbolField symmetric_moyal_product(const SymbolField& phi, const SymbolField& psi, const ThetaMatrix& theta);

struct ConvergenceRow {
  double theta_norm = 0.0;
  /// max over recorded times of the L2 distance between the symbol paths.
  double e_theta = 0.0;
  /// log(e_prev / e) / log(theta_prev / theta); NaN on the first row.
  double empirical_order = 0.0;
  RunStatus status = RunStatus::Completed;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::string to_csv() const;
};

/// Runs base with theta = s J for every s (strictly decreasing, >= 0) and with
/// theta = 0, all from u0 = from_symbol(phi0), and tabulates the symbol distances.
ConvergenceTable theta_sweep(const SolverConfig& base, const std::vector<double>& thetas,
                             const std::vector<SymbolField>& phi0);

/// The divergence-free vortex-pair symbol used by sweeps (d = 2).
std::vector<SymbolField> vortex_pair_symbol(const SolverConfig& config);

}  // namespace qns
