#include "movsum/model.hpp"

#include <cmath>
#include <stdexcept>

namespace movsum {

void ProcessSpec::validate() const {
    if (L < 1) throw std::invalid_argument("ProcessSpec: L must be >= 1");
    if (!(sigma > 0.0)) throw std::invalid_argument("ProcessSpec: sigma must be > 0");
    if (!std::isfinite(mu) || !std::isfinite(sigma))
        throw std::invalid_argument("ProcessSpec: mu and sigma must be finite");
}

double ProcessSpec::window_sd() const {
    return sigma * std::sqrt(static_cast<double>(L));
}

HorizonSpec HorizonSpec::from(std::int64_t M, std::int64_t L) {
    if (M < 1) throw std::invalid_argument("HorizonSpec: M must be >= 1");
    if (L < 1) throw std::invalid_argument("HorizonSpec: L must be >= 1");
    return HorizonSpec{M, static_cast<double>(M) / static_cast<double>(L)};
}

ThresholdPair threshold_from_h(double h, const ProcessSpec& spec) {
    spec.validate();
    return ThresholdPair{spec.window_mean() + spec.window_sd() * h, h};
}

ThresholdPair h_from_threshold(double H, const ProcessSpec& spec) {
    spec.validate();
    return ThresholdPair{H, (H - spec.window_mean()) / spec.window_sd()};
}

Eigen::ArrayXd moving_sums(const Eigen::Ref<const Eigen::ArrayXd>& series,
                           std::int64_t L) {
    if (L < 1) throw std::invalid_argument("moving_sums: L must be >= 1");
    const Eigen::Index n = series.size();
    if (n < L) throw std::invalid_argument("moving_sums: series shorter than L");

    Eigen::ArrayXd out(n - L + 1);
    double sum = series.head(L).sum();
    out[0] = sum;
    for (Eigen::Index i = 1; i < out.size(); ++i) {
        if (i % L == 0) {
            sum = series.segment(i, L).sum();  // periodic exact refresh
        } else {
            sum += series[i + L - 1] - series[i - 1];
        }
        out[i] = sum;
    }
    return out;
}

Eigen::ArrayXd standardize(const Eigen::Ref<const Eigen::ArrayXd>& sums,
                           const ProcessSpec& spec) {
    spec.validate();
    return (sums - spec.window_mean()) / spec.window_sd();
}

double correlation(std::int64_t k, std::int64_t L) {
    if (k < 0) throw std::invalid_argument("correlation: k must be >= 0");
    if (L < 1) throw std::invalid_argument("correlation: L must be >= 1");
    if (k >= L) return 0.0;
    return 1.0 - static_cast<double>(k) / static_cast<double>(L);
}

}  // namespace movsum
