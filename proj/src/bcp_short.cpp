#include "movsum/bcp_short.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "movsum/brownian.hpp"
#include "movsum/normal.hpp"
#include "movsum/quadrature.hpp"

namespace movsum {

namespace {

// P_W(Z; a, b) with the intercept already shifted by the caller.
double crossing_prob(double Z, double a, double b) {
    const double sz = std::sqrt(Z);
    return 1.0 - std_normal_cdf((b * Z + a) / sz) +
           std::exp(-2.0 * a * b) * std_normal_cdf((b * Z - a) / sz);
}

// Lower truncation for integrals of f(x)*phi(x) over (-inf, h]:
// the omitted mass is below Phi(-8) < 7e-16.
double lower_cut(double h) { return std::min(-8.0, h - 2.0); }

}  // namespace

ShortHorizonGeometry ShortHorizonGeometry::from_T(double T) {
    if (!(T > 0.0) || T > 1.0)
        throw std::domain_error("ShortHorizonGeometry: T must lie in (0,1]");
    return ShortHorizonGeometry{T, T / (2.0 - T)};
}

double durbin_bcp(double h, double T) {
    if (!(T > 0.0)) throw std::invalid_argument("durbin_bcp: T must be > 0");
    return h * T * std_normal_pdf(h);
}

double pch_bcp(double h, double T) {
    if (!(T > 0.0)) throw std::invalid_argument("pch_bcp: T must be > 0");
    return std::clamp(-std::expm1(-h * std_normal_pdf(h) * T), 0.0, 1.0);
}

double diffusion_bcp_unit(double h) {
    const double F = std_normal_cdf(h);
    const double f = std_normal_pdf(h);
    return std::clamp(1.0 - F * F + f * (h * F + f), 0.0, 1.0);
}

double diffusion_bcp_short(double h, double T) {
    if (!(T > 0.0) || T > 1.0)
        throw std::domain_error(
            "diffusion_bcp_short: T must lie in (0,1]; use the long-horizon "
            "branch for T > 1");
    const double Z = T / (2.0 - T);
    const double sz = std::sqrt(Z);
    auto integrand = [&](double x) {
        return std_normal_cdf((h * (Z + 1.0) - x * (1.0 - Z)) / (2.0 * sz)) *
               std_normal_pdf(x);
    };
    const double I = integrate(integrand, lower_cut(h), h, 1e-10);
    const double hz = h * sz;
    const double closed = (2.0 * sz / (Z + 1.0)) * std_normal_pdf(h) *
                          (hz * std_normal_cdf(hz) + std_normal_pdf(hz));
    return std::clamp(1.0 - I + closed, 0.0, 1.0);
}

double q_conditional(double h, double x0, std::int64_t M, std::int64_t L,
                     std::optional<double> rho_override) {
    if (!(x0 < h))
        throw std::invalid_argument("q_conditional: requires x0 < h");
    if (M < 1 || L < 1)
        throw std::invalid_argument("q_conditional: M and L must be >= 1");
    if (M > L)
        throw std::domain_error("q_conditional: defined for M <= L only");
    const double T = static_cast<double>(M) / static_cast<double>(L);
    const double Z = T / (2.0 - T);
    // M/Z = L(2 - T) = 2L - M exactly.
    const double rho =
        rho_override ? *rho_override : rho_scaled(static_cast<double>(2 * L - M));
    if (rho < 0.0) throw std::invalid_argument("q_conditional: rho must be >= 0");
    const double a_hat = 0.5 * (h - x0) + rho;
    const double b = 0.5 * (h + x0);
    return std::clamp(crossing_prob(Z, a_hat, b), 0.0, 1.0);
}

namespace detail {

double cda_bcp_short_real(double h, double t, std::int64_t L) {
    const double Z = t / (2.0 - t);
    const double rho = kSiegmundRho / std::sqrt(static_cast<double>(L) * (2.0 - t));
    auto integrand = [&](double x0) {
        const double a_hat = 0.5 * (h - x0) + rho;
        const double b = 0.5 * (h + x0);
        return crossing_prob(Z, a_hat, b) * std_normal_pdf(x0);
    };
    const double I = integrate(integrand, lower_cut(h), h, 1e-10);
    return std::clamp(I + 1.0 - std_normal_cdf(h), 0.0, 1.0);
}

}  // namespace detail

double cda_bcp_short(double h, std::int64_t M, std::int64_t L) {
    if (M < 1 || L < 1)
        throw std::invalid_argument("cda_bcp_short: M and L must be >= 1");
    if (M > L)
        throw std::domain_error("cda_bcp_short: defined for M <= L; use cda_bcp_long");
    return detail::cda_bcp_short_real(
        h, static_cast<double>(M) / static_cast<double>(L), L);
}

double cda_window_bcp(double h, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("cda_window_bcp: rho must be > 0");
    const double F = std_normal_cdf(h);
    const double v = 1.0 - std_normal_cdf(h + rho) * F +
                     std_normal_pdf(h + rho) * F / rho -
                     std_normal_pdf(h) * std::exp(-2.0 * h * rho) *
                         std_normal_cdf(h - rho) / rho;
    return std::clamp(v, 0.0, 1.0);
}

double cda_window_explicit(double h, std::int64_t L) {
    if (L < 1) throw std::invalid_argument("cda_window_explicit: L must be >= 1");
    return cda_window_bcp(h, kSiegmundRho / std::sqrt(static_cast<double>(L)));
}

}  // namespace movsum
