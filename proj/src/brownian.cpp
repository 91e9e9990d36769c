#include "movsum/brownian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "movsum/errors.hpp"
#include "movsum/normal.hpp"
#include "movsum/quadrature.hpp"

namespace movsum {

void SlopedBoundary::validate() const {
    if (!(a > 0.0)) throw std::invalid_argument("SlopedBoundary: a must be > 0");
    if (!(R > 0.0)) throw std::invalid_argument("SlopedBoundary: R must be > 0");
    if (!std::isfinite(b)) throw std::invalid_argument("SlopedBoundary: b must be finite");
}

double bcp_sloped(const SlopedBoundary& boundary) {
    boundary.validate();
    const double a = boundary.a, b = boundary.b, R = boundary.R;
    const double sr = std::sqrt(R);
    return 1.0 - std_normal_cdf((b * R + a) / sr) +
           std::exp(-2.0 * a * b) * std_normal_cdf((b * R - a) / sr);
}

double drift_survival_cdf(double z, double y, double R, double mu) {
    if (!(y > 0.0)) throw std::invalid_argument("drift_survival_cdf: y must be > 0");
    if (!(R > 0.0)) throw std::invalid_argument("drift_survival_cdf: R must be > 0");
    const double zc = std::min(z, y);  // the terminal value cannot exceed the sup
    const double sr = std::sqrt(R);
    const double v = std_normal_cdf((zc - mu * R) / sr) -
                     std::exp(2.0 * y * mu) * std_normal_cdf((zc - mu * R - 2.0 * y) / sr);
    return std::clamp(v, 0.0, 1.0);
}

double survival_density(double x, const SlopedBoundary& boundary) {
    boundary.validate();
    const double a = boundary.a, b = boundary.b, R = boundary.R;
    if (x > a + b * R) return 0.0;
    const double pref = 1.0 / std::sqrt(2.0 * M_PI * R);
    const double v = pref * (std::exp(-x * x / (2.0 * R)) -
                             std::exp(-2.0 * a * b - (x - 2.0 * a) * (x - 2.0 * a) / (2.0 * R)));
    return std::max(v, 0.0);
}

double siegmund_rho() { return kSiegmundRho; }

double siegmund_rho_numeric(double tolerance) {
    if (!(tolerance >= 1e-12))
        throw unsupported_tolerance("siegmund_rho_numeric: tolerance below 1e-12 unsupported");

    // Integrand g(u) = u^{-2} log{2(1 - exp(-u^2/2))/u^2}. Near zero the log
    // argument is 1 - u^2/4 + u^4/24 - ..., so g(u) = -1/4 + u^2/96 + O(u^6);
    // the series is used below the crossover to avoid the 0/0 form.
    constexpr double crossover = 1e-2;
    const double series_part =
        -0.25 * crossover + crossover * crossover * crossover / (3.0 * 96.0);

    auto integrand = [](double u) {
        return std::log(2.0 * (-std::expm1(-0.5 * u * u)) / (u * u)) / (u * u);
    };
    // Beyond U the argument of the log is 2/u^2 up to O(exp(-U^2/2)), and
    //   int_U^inf u^{-2} log(2/u^2) du = log(2)/U - 2(log(U) + 1)/U
    // exactly; U = 40 keeps the neglected part below 1e-300.
    constexpr double U = 40.0;
    const double tail = std::log(2.0) / U - 2.0 * (std::log(U) + 1.0) / U;

    const double body = integrate(integrand, crossover, U, tolerance * M_PI / 2.0);
    return -(series_part + body + tail) / M_PI;
}

double rho_scaled(double M_over_Z) {
    if (!(M_over_Z > 0.0)) throw std::invalid_argument("rho_scaled: M/Z must be > 0");
    return kSiegmundRho / std::sqrt(M_over_Z);
}

double discretized_bcp(double Z, std::int64_t M, double a, double b) {
    if (!(Z > 0.0)) throw std::invalid_argument("discretized_bcp: Z must be > 0");
    if (M < 1) throw std::invalid_argument("discretized_bcp: M must be >= 1");
    if (!(a > 0.0)) throw std::invalid_argument("discretized_bcp: a must be > 0");
    const double a_hat = a + rho_scaled(static_cast<double>(M) / Z);
    const double sz = std::sqrt(Z);
    return 1.0 - std_normal_cdf((b * Z + a_hat) / sz) +
           std::exp(-2.0 * a_hat * b) * std_normal_cdf((b * Z - a_hat) / sz);
}

}  // namespace movsum
