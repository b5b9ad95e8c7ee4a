#include <cmath>
#include <numbers>

#include "qns/semiclassic.hpp"

namespace qns {

SymbolField moyal_product(const SymbolField& phi, const SymbolField& psi, const ThetaMatrix& theta) {
  const QElement prod = from_symbol(phi, theta) * from_symbol(psi, theta);
  const double scale = std::pow(2.0 * std::numbers::pi, -phi.grid().dim());
  return Complex(scale) * to_symbol(prod);
}

SymbolField symmetric_moyal_product(const SymbolField& phi, const SymbolField& psi, const ThetaMatrix& theta) {
  return Complex(0.5) * (moyal_product(phi, psi, theta) + moyal_product(psi, phi, theta));
}

}  // namespace qns
