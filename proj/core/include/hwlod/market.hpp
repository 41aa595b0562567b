#pragma once

namespace hwlod {

/// Constants of the two-factor pricing model. `y` is the variance of the
/// underlying, so the instantaneous volatility is sqrt(y).
struct MarketParams {
    double r = 0.0;     ///< risk-free rate
    double xi = 1.0;    ///< volatility of variance
    double mu = 0.0;    ///< variance drift
    double rho = 0.0;   ///< asset/variance correlation, in [0,1)
    double beta = 0.0;  ///< exponential shift applied to the unknown, >= 0

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Truncated solution box [0,X] x [zeta,Y] x [0,T]. Time runs forward from
/// the payoff (t = 0 is expiry after reversal), so t = T is "today".
struct DomainBox {
    double X = 1.0;     ///< asset-price cap
    double Y = 1.0;     ///< variance cap
    double T = 1.0;     ///< horizon
    double zeta = 0.0;  ///< variance floor, 0 <= zeta < Y

    void validate() const;
};

}  // namespace hwlod
