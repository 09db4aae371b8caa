#pragma once

#include <vector>

#include "lcabp/model.hpp"

// Independent reference solvers used to validate the neural-dynamics
// solvers: exhaustive l0 search on tiny instances and an iterative-shrinkage
// LASSO solver for medium ones. Neither shares any code path with the
// dynamical systems beyond the element-wise kernels.

namespace lcabp {

struct OracleResult {
    std::vector<double> x_star;
    std::vector<std::size_t> support;
    double objective = 0.0;  // support size for l0, ||x||_1 for ISTA
    bool exact = false;      // true only for an exhaustive-search exact fit
};

// Enumerates supports of size 0..k_max in increasing size, least-squares fits
// each (normal equations with a 1e-12 ridge), and returns the first support
// size admitting residual <= 1e-10 with its minimal-residual support
// (lexicographically smallest on ties). exact=false carries the best fit
// found when nothing reaches the residual bound.
// Requires n <= 16, k_max <= 6 and a noiseless problem.
OracleResult l0_exhaustive(const Problem& p, std::size_t k_max);

// x <- T_{tau*kappa}(x + tau * phi^T (b - phi x)) from x = 0 until
// ||x_{k+1} - x_k||_inf <= tol or max_iters. Requires tau in (0, 1/L) with
// L the squared spectral norm of phi as estimated by sq_spectral_norm().
// When objective_trace is given it receives the LASSO objective
// 1/2||b - phi x||^2 + kappa ||x||_1 after every update.
OracleResult ista_lasso(const Problem& p, double kappa, double tau, std::size_t max_iters,
                        double tol, std::vector<double>* objective_trace = nullptr);

// ||phi||_2^2 via 50 power-method iterations on phi^T phi from the
// normalized all-ones vector.
double sq_spectral_norm(const MeasurementMatrix& phi);

}  // namespace lcabp
