#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcabp/model.hpp"

// The four analog dynamical systems for basis pursuit and their shared
// forward-Euler integrator.
//
// All variants are built from the internal state u (mapped to the output
// through x = T_kappa(u)), the multiplier lambda, and the two drives
//   M = -(u - x + phi^T lambda)      (stationarity drive)
//   N = phi x - b                    (primal residual)
// composed as:
//   original:            du = M            dl = N
//   original_augmented:  du = M - phi^T N  dl = N
//   improved:            du = M            dl = N + phi M
//   improved_augmented:  du = M - phi^T N  dl = N + phi M
// Each derivative evaluation uses only matrix-vector products with phi and
// phi^T: 2 for original, 3 for original_augmented and improved, 4 for
// improved_augmented, so the cost is O(mn) throughout.

namespace lcabp {

enum class Variant { original, original_augmented, improved, improved_augmented };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);  // throws std::invalid_argument

struct TraceFlags {
    bool state = false;     // keep every iterate (u, lambda)
    bool lyapunov = false;  // record 1/2 ||w_k - w_final||^2 (implies state)
    bool residual = false;  // record per-iteration primal/stationarity residuals
};

struct SolverConfig {
    Variant variant = Variant::improved_augmented;
    double mu = 1.0;     // Euler step size
    double kappa = 1.0;  // threshold level
    std::size_t max_iters = 10000;
    double tol_residual = 1e-6;  // on ||phi x - b||_2
    double tol_state = 1e-6;     // on ||u_{k+1}-u_k||_inf and ||l_{k+1}-l_k||_inf
    TraceFlags trace;

    void validate() const;  // throws std::invalid_argument
};

struct SolverState {
    std::vector<double> u;
    std::vector<double> lambda;
    std::size_t iter = 0;

    // x = T_kappa(u), derived on demand so it can never go stale.
    std::vector<double> x(double kappa) const;
};

// u = lambda = 0, the default starting point.
SolverState zero_state(const Problem& p);
// Gaussian u, lambda with the given scale, for robustness experiments.
SolverState random_state(const Problem& p, double scale, RngSpec rng);

struct Derivative {
    std::vector<double> du;
    std::vector<double> dlambda;
};

class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(std::size_t iteration_, const std::string& msg)
        : std::runtime_error(msg), iteration(iteration_) {}
    std::size_t iteration;
};

enum class SolveStatus { converged, max_iters, diverged };

struct IterationRecord {
    std::size_t iter;
    double primal;        // ||phi x - b||_2
    double stationarity;  // ||u - x + phi^T lambda||_inf
};

struct TrialResult {
    std::vector<double> x_hat;
    std::size_t iters_used = 0;
    SolveStatus status = SolveStatus::max_iters;
    bool converged = false;
    double final_residual = 0.0;
    double final_stationarity = 0.0;
    // Iteration at which a non-finite state appeared (diverged runs only).
    std::size_t diverged_at = 0;
    std::vector<IterationRecord> residuals;  // trace.residual
    std::vector<SolverState> states;         // trace.state / trace.lyapunov
    std::vector<double> lyapunov;            // trace.lyapunov, vs. the final state
};

Derivative derivative(const SolverState& s, const Problem& p, const SolverConfig& c);

// One Euler step: u + mu*du, lambda + mu*dlambda, iter + 1. The input state is
// untouched. Throws DivergenceError if the new state contains a non-finite
// value.
SolverState step(const SolverState& s, const Problem& p, const SolverConfig& c);

// Iterates from `init` (default: zero state) until the primal residual and
// the prospective state change both drop below their tolerances, divergence,
// or max_iters. Diverged runs report the last finite iterate with partial
// traces.
TrialResult solve(const Problem& p, const SolverConfig& c, const SolverState* init = nullptr);

// primal = ||phi x - b||_2, stationarity = ||u - x + phi^T lambda||_inf.
// The stationarity norm certifies the subdifferential condition because
// u - x always lies in kappa * d||x||_1.
struct KktResiduals {
    double primal;
    double stationarity;
};
KktResiduals kkt_residuals(const SolverState& s, const Problem& p, double kappa);

// V_k = 1/2 (||u_k - u*||_2^2 + ||lambda_k - lambda*||_2^2) against a
// reference state (in practice the run's own final iterate).
std::vector<double> lyapunov_trace(std::span<const SolverState> states,
                                   const SolverState& reference);

// Trace file: '# iter primal stationarity [lyapunov]' header, one
// whitespace-separated row per iteration.
void write_trace(std::ostream& os, const TrialResult& r);

}  // namespace lcabp
