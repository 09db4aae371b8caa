#include "lcabp/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace lcabp::kernels {
namespace {

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double nrm2sq_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
    return acc;
}

double max_abs_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc = std::max(acc, std::fabs(x[i]));
    return acc;
}

double max_abs_diff_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc = std::max(acc, std::fabs(x[i] - y[i]));
    return acc;
}

void soft_threshold_scalar(const double* u, double kappa, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        // sign(u)*max(|u|-kappa, 0); |u| == kappa lands exactly on +0.
        out[i] = std::copysign(std::max(std::fabs(u[i]) - kappa, 0.0), u[i]);
    }
}

void clamp_box_scalar(const double* u, double kappa, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::min(std::max(u[i], -kappa), kappa);
}

void matvec_scalar(const double* a, std::size_t m, std::size_t n, const double* x, double* y) {
    for (std::size_t i = 0; i < m; ++i) y[i] = dot_scalar(a + i * n, x, n);
}

void matvec_t_scalar(const double* a, std::size_t m, std::size_t n, const double* x, double* y) {
    std::fill(y, y + n, 0.0);
    for (std::size_t i = 0; i < m; ++i) axpy_scalar(x[i], a + i * n, y, n);
}

}  // namespace

const Ops& ops_scalar() {
    static const Ops ops = {
        axpy_scalar,     dot_scalar,           nrm2sq_scalar,
        max_abs_scalar,  max_abs_diff_scalar,  soft_threshold_scalar,
        clamp_box_scalar, matvec_scalar,       matvec_t_scalar,
    };
    return ops;
}

}  // namespace lcabp::kernels
