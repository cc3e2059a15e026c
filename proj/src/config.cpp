#include "radmom/config.hpp"

#include <stdexcept>

namespace radmom {

void RunConfig::validate() const {
  if (l_max < 1) throw std::invalid_argument("l_max >= 1 required");
  if (theta_count() < std::size_t(l_max + 1))
    throw std::invalid_argument("n_theta below the minimum implied by l_max");
  if (phi_count() < std::size_t(2 * l_max + 1))
    throw std::invalid_argument("n_phi below the minimum implied by l_max");
  if (gamma_points < 3 || gamma_points % 2 == 0)
    throw std::invalid_argument("gamma_points must be odd (grid must contain 0)");
  if (gamma_max <= 0.0) throw std::invalid_argument("gamma_max > 0 required");
  if (tolerance_scale <= 0.0) throw std::invalid_argument("tolerance_scale > 0 required");
}

} // namespace radmom
