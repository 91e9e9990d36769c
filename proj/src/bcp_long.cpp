#include "movsum/bcp_long.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "movsum/bcp_short.hpp"
#include "movsum/brownian.hpp"
#include "movsum/errors.hpp"
#include "movsum/normal.hpp"
#include "movsum/quadrature.hpp"

namespace movsum {

namespace {

// kappa_{h,delta}: the one-step mass defect entering c1 = Phi(h) - kappa/Phi(h).
// The direct expression is a 0/0 form as delta -> 0; below the crossover it is
// replaced by its Taylor expansion
//   kappa = phi(h) [ (h Phi + phi) - (3 delta/2)((h^2+1) Phi + h phi)
//                    + (delta^2/6)((7h^3+9h) Phi + (7h^2+2) phi) ] + O(delta^3),
// whose relative error at delta = 1e-4 is below 1e-10.
double kappa_mass_defect(double h, double delta) {
    const double f = std_normal_pdf(h);
    const double F = std_normal_cdf(h);
    if (delta < 1e-4) {
        const double c0 = h * F + f;
        const double c1 = -1.5 * ((h * h + 1.0) * F + h * f);
        const double c2 = ((7.0 * h * h * h + 9.0 * h) * F + (7.0 * h * h + 2.0) * f) / 6.0;
        return f * (c0 + delta * (c1 + delta * c2));
    }
    const double d = delta;
    return f / d *
           (std::exp(-d * h - 1.5 * d * d) * std_normal_cdf(h - d) -
            std::exp(-2.0 * d * h) * std_normal_cdf(h - 2.0 * d));
}

double p1_tilde(double x, double h, double d) {
    if (x >= h) return 0.0;
    return std_normal_pdf(x) - std_normal_pdf(h) / std_normal_cdf(h) *
                                   std::exp(-2.0 * d * h - 1.5 * d * d + d * x) *
                                   std_normal_cdf(x - d);
}

double p2_tilde(double x, double h, double d, double c1) {
    if (x >= h) return 0.0;
    const double fh = std_normal_pdf(h);
    const double Fh = std_normal_cdf(h);
    const double num =
        std_normal_cdf(h - d) * std::exp(-3.0 * d * h - 3.5 * d * d + 2.0 * d * x) *
            std_normal_pdf(x) -
        fh * std::exp(0.5 * d * d - 2.0 * d * h - d * x) * std_normal_cdf(x - 3.0 * d);
    return std_normal_pdf(x) +
           fh / c1 *
               (num / (Fh * (h + 2.0 * d - x)) -
                std::exp(-2.0 * d * h - 1.5 * d * d + d * x) * std_normal_cdf(x - d));
}

double c1_value(double h, double d) {
    const double F = std_normal_cdf(h);
    return F - kappa_mass_defect(h, d) / F;
}

}  // namespace

void KernelSpec::validate() const {
    if (!(delta >= 0.0)) throw std::invalid_argument("KernelSpec: delta must be >= 0");
    if (!std::isfinite(h)) throw std::invalid_argument("KernelSpec: h must be finite");
}

KernelSpec KernelSpec::for_window(double h, std::int64_t L) {
    if (L < 1) throw std::invalid_argument("KernelSpec: L must be >= 1");
    return KernelSpec{h, kSiegmundRho / std::sqrt(static_cast<double>(L))};
}

double kernel(double x, double x0, const KernelSpec& spec) {
    spec.validate();
    const double h = spec.h, d = spec.delta;
    if (x >= h) return 0.0;
    const double expo = -(h - x) * (h - x0) - d * (3.0 * h - 2.0 * x - x0 + 2.0 * d);
    return std_normal_pdf(x) * (-std::expm1(expo));
}

double kernel_v(double x, double x0, double h, double V) {
    if (!(V > 0.0) || V > 1.0)
        throw std::domain_error("kernel_v: V must lie in (0,1]");
    if (x >= h) return 0.0;
    // Change of variables through the Brownian representation of the process:
    // the value at window fraction V is (2-V) W(U) + x0 (1-V) with U = V/(2-V),
    // so the conditional density is the sloped-boundary survival density of
    // W(U) evaluated at w = (x - x0(1-V))/(2-V), scaled by 1/(2-V).
    const double U = V / (2.0 - V);
    const double w = (x - x0 * (1.0 - V)) / (2.0 - V);
    const SlopedBoundary boundary{0.5 * (h - x0), 0.5 * (h + x0), U};
    return survival_density(w, boundary) / (2.0 - V);
}

DensityIterates density_iterates(const KernelSpec& spec) {
    spec.validate();
    const double h = spec.h, d = spec.delta;
    const double Fh = std_normal_cdf(h);
    const double c1 = c1_value(h, d);
    if (!(c1 > 0.0)) throw singular_input("density_iterates: c1 is not positive");

    DensityIterates it;
    it.c1 = c1;
    it.p0 = DensityIterate{0, Fh, [h, Fh](double x) {
                               return x < h ? std_normal_pdf(x) / Fh : 0.0;
                           }};
    it.p1 = DensityIterate{1, c1, [h, d, c1](double x) {
                               return p1_tilde(x, h, d) / c1;
                           }};
    const double lo = std::min(-8.0, h - 2.0);
    const double c2 = integrate(
        [h, d, c1](double x) { return p2_tilde(x, h, d, c1); }, lo, h, 1e-11);
    it.p2 = DensityIterate{2, c2, [h, d, c1, c2](double x) {
                               return p2_tilde(x, h, d, c1) / c2;
                           }};
    return it;
}

double lambda_hat(double h, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("lambda_hat: delta must be > 0");
    if (h + 2.0 * delta == 0.0)
        throw singular_input("lambda_hat: h + 2*delta vanishes");
    const double d = delta;
    const double f = std_normal_pdf(h);
    const double F = std_normal_cdf(h);
    const double kap = kappa_mass_defect(h, d);
    const double num =
        (h + 2.0 * d) * kap +
        f * (std_normal_cdf(-3.0 * d) * std::exp(0.5 * d * d - 0.5 * h * h - 2.0 * d * h) -
             std_normal_cdf(h - d) * std::exp(-3.0 * d * h - 3.5 * d * d));
    const double den =
        (h + 2.0 * d) *
        (F - std_normal_cdf(-d) * std::exp(-0.5 * (h + d) * (h + 3.0 * d)));
    if (den == 0.0) throw singular_input("lambda_hat: denominator vanishes");
    return F - num / den;
}

EigenResult lambda_quadrature(double h, double delta, int N, double C) {
    if (N < 16) throw std::invalid_argument("lambda_quadrature: N must be >= 16");
    if (!(C > 0.0)) throw std::invalid_argument("lambda_quadrature: C must be > 0");
    const KernelSpec spec{h, delta};
    spec.validate();

    GaussLegendreRule rule = gauss_legendre(N, -C, h);

    Eigen::MatrixXd A(N, N);
    const Eigen::VectorXd sw = rule.weights.array().sqrt().matrix();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            A(i, j) = sw[i] * kernel(rule.nodes[i], rule.nodes[j], spec) * sw[j];

    Eigen::VectorXd v = Eigen::VectorXd::Constant(N, 1.0 / std::sqrt(double(N)));
    double lambda = 0.0;
    int iters = 0;
    constexpr int kMaxIters = 100000;
    for (; iters < kMaxIters; ++iters) {
        Eigen::VectorXd w = A * v;
        const double next = v.dot(w) / v.dot(v);
        v = w / w.norm();
        if (std::fabs(next - lambda) <= 1e-12 * std::fabs(next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    if (iters >= kMaxIters)
        throw convergence_error("lambda_quadrature: power iteration did not converge",
                                lambda);

    EigenResult res;
    res.lambda = lambda;
    res.grid = rule.nodes;
    res.weights = rule.weights;
    res.eigenfunction = (v.array() / sw.array()).matrix();
    const double mass = rule.weights.dot(res.eigenfunction);
    res.eigenfunction /= mass;  // weighted sum = 1; fixes the Perron sign too
    res.order = N;
    res.lower_cut = C;
    res.iterations = iters + 1;
    return res;
}

double diffusion_bcp_long(double h, double T) {
    if (!(T > 1.0))
        throw std::domain_error("diffusion_bcp_long: requires T > 1; use the short branch");
    const double lambda0 = lambda_quadrature(h, 0.0).lambda;
    const double v = 1.0 - (1.0 - diffusion_bcp_unit(h)) * std::pow(lambda0, T - 1.0);
    return std::clamp(v, 0.0, 1.0);
}

double cda_bcp_long(double h, std::int64_t M, std::int64_t L) {
    if (L < 1) throw std::invalid_argument("cda_bcp_long: L must be >= 1");
    if (M <= L)
        throw std::domain_error("cda_bcp_long: defined for M > L; use cda_bcp_short");
    const double T = static_cast<double>(M) / static_cast<double>(L);
    const double delta = kSiegmundRho / std::sqrt(static_cast<double>(L));
    const double gamma = delta / std::pow(T, 0.25);
    const double survival_unit = 1.0 - cda_window_bcp(h, gamma);
    const double v = 1.0 - survival_unit * std::pow(lambda_hat(h, delta), T - 1.0);
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace movsum
