#include "hwlod/market.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hwlod {

void MarketParams::validate() const {
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("MarketParams.rho: must lie in [0,1), got " + std::to_string(rho));
    if (!(xi > 0.0))
        throw std::invalid_argument("MarketParams.xi: must be positive, got " + std::to_string(xi));
    if (!(beta >= 0.0))
        throw std::invalid_argument("MarketParams.beta: must be nonnegative, got " + std::to_string(beta));
    if (!std::isfinite(r) || !std::isfinite(mu))
        throw std::invalid_argument("MarketParams: r and mu must be finite");
}

void DomainBox::validate() const {
    if (!(X > 0.0))
        throw std::invalid_argument("DomainBox.X: must be positive, got " + std::to_string(X));
    if (!(zeta >= 0.0 && zeta < Y))
        throw std::invalid_argument("DomainBox: requires 0 <= zeta < Y, got zeta=" + std::to_string(zeta) +
                                    " Y=" + std::to_string(Y));
    if (!(T > 0.0))
        throw std::invalid_argument("DomainBox.T: must be positive, got " + std::to_string(T));
}

}  // namespace hwlod
