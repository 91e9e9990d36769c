#pragma once

namespace movsum {

// Standard normal density phi(x) = exp(-x^2/2)/sqrt(2*pi).
double std_normal_pdf(double x);

// Standard normal c.d.f. Phi(x), evaluated through the complementary error
// function. Absolute error below 1e-15 for |x| <= 8; saturates to exactly
// 0 / 1 in the far tails (|x| beyond roughly 38).
double std_normal_cdf(double x);

// Inverse of Phi. Wichura's algorithm AS241 (PPND16), relative accuracy
// about 1e-16 on (0,1). Out-of-range p returns -inf / +inf.
double std_normal_quantile(double p);

}  // namespace movsum
