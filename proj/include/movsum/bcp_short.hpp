#pragma once

#include <cstdint>
#include <optional>

namespace movsum {

// Time change carrying the unit-window segment of the limiting process onto
// Brownian motion: Z = T/(2-T) for the horizon T in window lengths.
struct ShortHorizonGeometry {
    double T;
    double Z;

    static ShortHorizonGeometry from_T(double T);
};

// Durbin approximation h*T*phi(h). Deliberately returned unclamped: the
// expression may exceed 1 for small h (it is not a probability).
double durbin_bcp(double h, double T);

// Poisson-clumping approximation 1 - exp(-h*phi(h)*T).
double pch_bcp(double h, double T);

// Crossing probability of the limiting process on one window,
// 1 - Phi^2(h) + phi(h) [h Phi(h) + phi(h)].
double diffusion_bcp_unit(double h);

// Diffusion approximation for T in (0,1]: the general-T formula with
// Z = T/(2-T); the one-dimensional integral over the initial value is done
// by adaptive quadrature to 1e-10. T > 1 belongs to the long-horizon branch.
double diffusion_bcp_short(double h, double T);

// Conditional crossing probability Q_{h,rho}(M, x0) of the discretized
// process started at x0 < h, for M <= L. rho_override replaces the
// overshoot correction (0 recovers the continuous-time Q_h).
double q_conditional(double h, double x0, std::int64_t M, std::int64_t L,
                     std::optional<double> rho_override = std::nullopt);

// Corrected diffusion approximation for the BCP, M <= L: the integral of
// Q_{h,rho} against the standard normal density plus the atom 1 - Phi(h).
double cda_bcp_short(double h, std::int64_t M, std::int64_t L);

// One-window corrected BCP with an explicit overshoot parameter rho > 0:
// 1 - Phi(h+rho)Phi(h) + phi(h+rho)Phi(h)/rho - phi(h)e^{-2h rho}Phi(h-rho)/rho.
double cda_window_bcp(double h, double rho);

// The M = L closed form of the corrected diffusion approximation,
// cda_window_bcp at rho = 0.5826/sqrt(L).
double cda_window_explicit(double h, std::int64_t L);

namespace detail {

// Continuous-in-t extension of cda_bcp_short with M = t*L treated as real,
// t in (0, 1]. Used by the first-passage distribution.
double cda_bcp_short_real(double h, double t, std::int64_t L);

}  // namespace detail

}  // namespace movsum
