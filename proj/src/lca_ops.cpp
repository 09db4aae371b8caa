#include "lcabp/lca_ops.hpp"

#include <stdexcept>

#include "lcabp/kernels.hpp"

namespace lcabp {
namespace {

void check_args(std::size_t in, double kappa, std::size_t out) {
    if (!(kappa > 0.0)) throw std::invalid_argument("threshold kappa must be > 0");
    if (in != out) throw std::invalid_argument("output length must match input length");
}

}  // namespace

void soft_threshold_into(std::span<const double> u, double kappa, std::span<double> out) {
    check_args(u.size(), kappa, out.size());
    kernels::soft_threshold(u.data(), kappa, out.data(), u.size());
}

void project_box_into(std::span<const double> u, double kappa, std::span<double> out) {
    check_args(u.size(), kappa, out.size());
    kernels::clamp_box(u.data(), kappa, out.data(), u.size());
}

std::vector<double> soft_threshold(std::span<const double> u, double kappa) {
    std::vector<double> out(u.size());
    soft_threshold_into(u, kappa, out);
    return out;
}

std::vector<double> project_box(std::span<const double> u, double kappa) {
    std::vector<double> out(u.size());
    project_box_into(u, kappa, out);
    return out;
}

}  // namespace lcabp
