#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <queue>
#include <vector>

#include "movsum/errors.hpp"

namespace movsum {

// Nodes and weights of the n-point Gauss-Legendre rule on [a, b].
struct GaussLegendreRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

GaussLegendreRule gauss_legendre(int n, double a, double b);

namespace detail {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void kronrod15(F&& f, double a, double b, double* result, double* error) {
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - half * kKronrodNodes[i]);
        fv[14 - i] = f(c + half * kKronrodNodes[i]);
    }
    fv[7] = f(c);
    double kron = kKronrodWeights[7] * fv[7];
    double gauss = kGaussWeights[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (fv[i] + fv[14 - i]);
    }
    *result = kron * half;
    *error = std::fabs((kron - gauss) * half);
}

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b] to absolute
// tolerance abs_tol. Throws convergence_error (carrying the running value)
// if the segment budget is exhausted.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol,
                 int max_segments = 4000) {
    if (a == b) return 0.0;
    std::priority_queue<detail::Segment> heap;
    detail::Segment s{a, b, 0.0, 0.0};
    detail::kronrod15(f, a, b, &s.value, &s.error);
    double total = s.value;
    double total_err = s.error;
    heap.push(s);
    int n = 1;
    while (total_err > abs_tol && n < max_segments) {
        detail::Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        detail::Segment left{worst.a, mid, 0.0, 0.0};
        detail::Segment right{mid, worst.b, 0.0, 0.0};
        detail::kronrod15(f, left.a, left.b, &left.value, &left.error);
        detail::kronrod15(f, right.a, right.b, &right.value, &right.error);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++n;
    }
    if (total_err > abs_tol)
        throw convergence_error("adaptive quadrature: segment budget exhausted", total);
    return total;
}

// Composite trapezoid of f on [a, b] with n intervals.
template <class F>
double trapezoid(F&& f, double a, double b, int n) {
    const double step = (b - a) / n;
    double acc = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i) acc += f(a + i * step);
    return acc * step;
}

}  // namespace movsum
