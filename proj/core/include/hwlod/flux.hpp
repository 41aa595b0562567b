#pragma once

namespace hwlod {

/// Below this exponent magnitude the fitted weights switch to their
/// vanishing-convection limit; x^alpha differences cancel catastrophically
/// near alpha = 0.
inline constexpr double kAlphaLimitSwitch = 1e-7;

/// Two-point flux approximation at a cell face: flux ~ w_hi * u_hi + w_lo * u_lo.
struct FluxWeights {
    double w_lo;
    double w_hi;
};

/// Fitted weights on an interior face of [x_lo, x_hi], 0 < x_lo < x_hi,
/// obtained from the exact solution of (a x v' + b v)' = 0 with alpha = b/a:
///   w_hi =  b x_hi^alpha / (x_hi^alpha - x_lo^alpha)
///   w_lo = -b x_lo^alpha / (x_hi^alpha - x_lo^alpha)
/// For |alpha| < kAlphaLimitSwitch the analytic limit a / ln(x_hi/x_lo) is
/// used. Requires a > 0.
FluxWeights interior_flux_weights(double a, double b, double x_lo, double x_hi);

/// Same weights with the fitting exponent supplied by the caller; this is the
/// entry point when the diffusion factor degenerates and alpha comes from the
/// large-exponent fallback. Both sweep directions evaluate powers through one
/// shared exp(alpha ln ratio) path, so their faces are bit-identical.
FluxWeights interior_flux_weights(double a, double b, double alpha, double x_lo, double x_hi);

/// Degenerate face touching x = 0, from the one-sided problem with a free
/// constant: flux ~ ((a+b) u_hi - (a-b) u_lo) / 2.
FluxWeights origin_flux_weights(double a, double b);

}  // namespace hwlod
