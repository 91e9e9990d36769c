#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace movsum {

// The i.i.d. normal innovations and the window length of the moving sum.
struct ProcessSpec {
    std::int64_t L = 1;   // window length
    double mu = 0.0;      // mean of each innovation
    double sigma = 1.0;   // standard deviation of each innovation

    void validate() const;
    double window_mean() const { return mu * static_cast<double>(L); }
    double window_sd() const;
};

// Number of window positions beyond the first, and the derived horizon
// T = M/L in window lengths.
struct HorizonSpec {
    std::int64_t M = 1;
    double T = 1.0;

    static HorizonSpec from(std::int64_t M, std::int64_t L);
};

// Raw-sum threshold H and its standardized counterpart h,
// H = mu*L + sigma*h*sqrt(L).
struct ThresholdPair {
    double H = 0.0;
    double h = 0.0;
};

ThresholdPair threshold_from_h(double h, const ProcessSpec& spec);
ThresholdPair h_from_threshold(double H, const ProcessSpec& spec);

// Sliding-window sums of length L. Element n is the sum of
// series[n .. n+L-1]; output length is series.size() - L + 1. Updates are
// incremental (add one, drop one) with an exact recomputation every L steps
// so rounding drift stays bounded.
Eigen::ArrayXd moving_sums(const Eigen::Ref<const Eigen::ArrayXd>& series,
                           std::int64_t L);

// Element-wise (s - mu*L) / (sigma*sqrt(L)).
Eigen::ArrayXd standardize(const Eigen::Ref<const Eigen::ArrayXd>& sums,
                           const ProcessSpec& spec);

// Corr(xi_n, xi_{n+k}) = max(0, 1 - k/L).
double correlation(std::int64_t k, std::int64_t L);

}  // namespace movsum
