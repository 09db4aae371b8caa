#include "lcabp/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "lcabp/kernels.hpp"

namespace lcabp {
namespace {

void append_double(std::string& out, double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    out.append(buf, ptr);
}

}  // namespace

double mse(std::span<const double> x_hat, std::span<const double> x_true) {
    if (x_hat.size() != x_true.size())
        throw std::invalid_argument("mse: vectors must have equal length");
    double acc = 0.0;
    for (std::size_t i = 0; i < x_hat.size(); ++i) {
        const double d = x_hat[i] - x_true[i];
        acc += d * d;
    }
    return acc / static_cast<double>(x_hat.size());
}

double relative_error(std::span<const double> x_hat, std::span<const double> x_true) {
    if (x_hat.size() != x_true.size())
        throw std::invalid_argument("relative_error: vectors must have equal length");
    const double denom = std::sqrt(kernels::nrm2sq(x_true.data(), x_true.size()));
    if (denom == 0.0) throw std::invalid_argument("relative_error: true signal must be nonzero");
    double acc = 0.0;
    for (std::size_t i = 0; i < x_hat.size(); ++i) {
        const double d = x_hat[i] - x_true[i];
        acc += d * d;
    }
    return std::sqrt(acc) / denom;
}

Stats compute_stats(std::vector<double> values) {
    Stats s;
    if (values.empty()) {
        s.mean = s.median = s.stddev = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    const double count = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / count;
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / count);
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    s.median = (values.size() % 2 == 1) ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
    return s;
}

SweepSummary aggregate(std::span<const TrialMetrics> trials, const SweepKey& key) {
    if (trials.empty()) throw std::invalid_argument("aggregate: no trials");
    SweepSummary out;
    out.key = key;
    out.trials = trials.size();

    std::vector<double> mses, rels, iters, walls;
    for (const TrialMetrics& t : trials) {
        if (t.diverged) {
            ++out.diverged;
        } else {
            mses.push_back(t.mse);
            rels.push_back(t.rel_error);
        }
        iters.push_back(static_cast<double>(t.iters));
        walls.push_back(t.wall_s);
    }
    out.mse = compute_stats(std::move(mses));
    out.rel = compute_stats(std::move(rels));
    out.iters = compute_stats(std::move(iters));
    out.wall_s = compute_stats(std::move(walls));
    return out;
}

void write_csv_header(std::ostream& os) {
    os << "n,m,omega,sigma,variant,mu,trials,diverged,mean_mse,median_mse,std_mse,"
          "mean_rel,mean_iters,mean_wall_s\n";
}

void write_csv_row(std::ostream& os, const SweepSummary& s) {
    std::string row;
    row += std::to_string(s.key.n);
    row += ',';
    row += std::to_string(s.key.m);
    row += ',';
    row += std::to_string(s.key.omega);
    row += ',';
    append_double(row, s.key.sigma);
    row += ',';
    row += variant_name(s.key.variant);
    row += ',';
    append_double(row, s.key.mu);
    row += ',';
    row += std::to_string(s.trials);
    row += ',';
    row += std::to_string(s.diverged);
    row += ',';
    append_double(row, s.mse.mean);
    row += ',';
    append_double(row, s.mse.median);
    row += ',';
    append_double(row, s.mse.stddev);
    row += ',';
    append_double(row, s.rel.mean);
    row += ',';
    append_double(row, s.iters.mean);
    row += ',';
    append_double(row, s.wall_s.mean);
    row += '\n';
    os << row;
}

}  // namespace lcabp
