#include "gme/su_basis.hpp"

#include <cmath>
#include <stdexcept>

namespace gme {

GeneratorBasis gellmann_basis(int d) {
  if (d < 2) throw std::invalid_argument("gellmann_basis: d must be >= 2");

  GeneratorBasis basis;
  basis.d = d;
  basis.generators.reserve(static_cast<std::size_t>(d) * d - 1);

  const Complex i_unit(0.0, 1.0);

  // symmetric: E_jk + E_kj, j < k
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      basis.generators.push_back(std::move(m));
    }

  // antisymmetric: -i E_jk + i E_kj, j < k
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = -i_unit;
      m(k, j) = i_unit;
      basis.generators.push_back(std::move(m));
    }

  // diagonal: sqrt(2/(l(l+1))) (sum_{m<=l} E_mm - l E_{l+1,l+1}), l = 1..d-1
  for (int l = 1; l < d; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int mm = 0; mm < l; ++mm) m(mm, mm) = norm;
    m(l, l) = -norm * l;
    basis.generators.push_back(std::move(m));
  }

  return basis;
}

}  // namespace gme
