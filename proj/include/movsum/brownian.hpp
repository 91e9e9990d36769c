#pragma once

#include <cstdint>

namespace movsum {

// Expected overshoot of a standard-normal random walk over a distant
// boundary (Siegmund's constant, rounded as used throughout).
inline constexpr double kSiegmundRho = 0.5826;

// Linear barrier a + b*t on the horizon [0, R].
struct SlopedBoundary {
    double a;  // intercept, > 0
    double b;  // slope
    double R;  // horizon, > 0

    void validate() const;
};

// P{ W(t) > a + b*t for some t in [0, R] } for standard Brownian motion.
double bcp_sloped(const SlopedBoundary& boundary);

// F_{R,mu}(z, y) = P{ W_mu(R) <= z, sup_{[0,R]} W_mu <= y } for Brownian
// motion with drift mu. Constant in z above y.
double drift_survival_cdf(double z, double y, double R, double mu);

// Non-normalised density of W(R) on { W(t) < a + b*t for all t in [0,R] };
// integrates to 1 - bcp_sloped over (-inf, a + b*R], zero above.
double survival_density(double x, const SlopedBoundary& boundary);

// The stored constant 0.5826.
double siegmund_rho();

// Evaluates rho = -pi^{-1} * int_0^inf lambda^{-2}
// log{ 2(1 - exp(-lambda^2/2)) / lambda^2 } dlambda to the given absolute
// tolerance. Throws unsupported_tolerance below 1e-12.
double siegmund_rho_numeric(double tolerance);

// Overshoot correction for a Brownian motion observed on an M-point grid
// spanning [0, Z]: 0.5826 / sqrt(M/Z).
double rho_scaled(double M_over_Z);

// Boundary crossing probability of the discretized Brownian motion on the
// grid {Z/M, 2Z/M, ..., Z}: the continuous formula with the barrier raised
// by rho_scaled(M/Z).
double discretized_bcp(double Z, std::int64_t M, double a, double b);

}  // namespace movsum
