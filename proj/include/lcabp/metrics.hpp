#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "lcabp/solvers.hpp"

// Error measures and per-cell aggregation for experiment sweeps.

namespace lcabp {

// (1/n) * sum (x_hat_i - x_true_i)^2
double mse(std::span<const double> x_hat, std::span<const double> x_true);
// ||x_hat - x_true||_2 / ||x_true||_2
double relative_error(std::span<const double> x_hat, std::span<const double> x_true);

struct TrialMetrics {
    double mse = 0.0;
    double rel_error = 0.0;
    std::size_t iters = 0;
    bool converged = false;
    bool diverged = false;
    double wall_s = 0.0;
};

struct SweepKey {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t omega = 0;
    double sigma = 0.0;
    Variant variant = Variant::improved_augmented;
    double mu = 1.0;

    friend auto operator<=>(const SweepKey&, const SweepKey&) = default;
};

struct Stats {
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;  // population
};

// Per-cell summary. Error statistics (mse, rel) skip diverged trials, which
// are counted separately; iteration and wall statistics cover every trial.
struct SweepSummary {
    SweepKey key;
    std::size_t trials = 0;
    std::size_t diverged = 0;
    Stats mse;
    Stats rel;
    Stats iters;
    Stats wall_s;
};

Stats compute_stats(std::vector<double> values);  // NaN stats on empty input
SweepSummary aggregate(std::span<const TrialMetrics> trials, const SweepKey& key);

// Fixed column order:
// n,m,omega,sigma,variant,mu,trials,diverged,mean_mse,median_mse,std_mse,
// mean_rel,mean_iters,mean_wall_s
// Doubles are printed in shortest round-trip form.
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const SweepSummary& s);

}  // namespace lcabp
