#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>

namespace movsum {

// Threshold and discrete-time correction of the transition kernel.
// delta = 0.5826/sqrt(L) for window length L; delta = 0 is the
// continuous-time kernel.
struct KernelSpec {
    double h;
    double delta;

    void validate() const;
    static KernelSpec for_window(double h, std::int64_t L);
};

// Dominant eigenpair of the weighted kernel matrix on the Gauss-Legendre
// grid over [-C, h].
struct EigenResult {
    double lambda = 0.0;
    Eigen::VectorXd grid;           // quadrature abscissae
    Eigen::VectorXd weights;        // matching weights
    Eigen::VectorXd eigenfunction;  // density samples, weighted sum = 1
    int order = 0;                  // N
    double lower_cut = 0.0;         // C
    int iterations = 0;             // power-iteration count
};

// One stage of the conditional-density iteration: the normalizer c_i and the
// normalized density (zero at and above h).
struct DensityIterate {
    int stage;
    double normalizer;
    std::function<double(double)> density;
};

struct DensityIterates {
    DensityIterate p0;  // truncated normal phi(x)/Phi(h)
    DensityIterate p1;  // closed form, normalizer c1
    DensityIterate p2;  // closed form, normalizer c2 obtained by quadrature
    double c1;
};

// One-window transition kernel p_{h,delta}(x | x0):
// phi(x) (1 - exp[-(h-x)(h-x0) - delta(3h - 2x - x0 + 2 delta)]) for x < h.
double kernel(double x, double x0, const KernelSpec& spec);

// Transition kernel of the limiting process over a window fraction
// V in (0,1]: the conditional density of the process value at V given the
// start x0 and no crossing of h on (0, V]. Reduces to kernel (delta = 0)
// at V = 1.
double kernel_v(double x, double x0, double h, double V);

// Stages 0,1,2 of the conditional-density iteration with their normalizers.
DensityIterates density_iterates(const KernelSpec& spec);

// Closed-form approximation of the dominant eigenvalue,
// lambda_hat = p2~(0) / p1(0).
double lambda_hat(double h, double delta);

// Dominant eigenvalue and eigenfunction of the integral operator with
// kernel p_{h,delta}, via Gauss-Legendre discretization of [-C, h] and
// power iteration on D^{1/2} K D^{1/2}.
EigenResult lambda_quadrature(double h, double delta, int N = 400, double C = 10.0);

// Diffusion approximation for T > 1:
// 1 - (1 - P_unit(h)) * lambda0^{T-1}, lambda0 the delta = 0 eigenvalue.
double diffusion_bcp_long(double h, double T);

// Corrected diffusion approximation for M > L:
// 1 - (1 - one-window corrected BCP at gamma = 0.5826/(sqrt(L) T^{1/4})) *
// lambda_hat(h, 0.5826/sqrt(L))^{T-1}.
double cda_bcp_long(double h, std::int64_t M, std::int64_t L);

}  // namespace movsum
