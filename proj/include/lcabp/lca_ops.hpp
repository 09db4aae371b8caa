#pragma once

#include <span>
#include <vector>

// Element-wise nonlinearities shared by every solver variant.
//
// soft_threshold is the shrinkage map T_kappa: zero inside [-kappa, kappa],
// magnitude reduced by kappa outside. project_box is the complementary clamp
// onto [-kappa, kappa]; the two decompose the identity,
//   soft_threshold(u, k) + project_box(u, k) == u
// elementwise to within 1 ulp, and exactly wherever |u_i| <= k.

namespace lcabp {

struct Threshold {
    double kappa = 1.0;
};

void soft_threshold_into(std::span<const double> u, double kappa, std::span<double> out);
void project_box_into(std::span<const double> u, double kappa, std::span<double> out);

std::vector<double> soft_threshold(std::span<const double> u, double kappa);
std::vector<double> project_box(std::span<const double> u, double kappa);

}  // namespace lcabp
