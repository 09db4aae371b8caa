#include "lcabp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lcabp/kernels.hpp"

namespace lcabp {
namespace {

constexpr double kExactResidual = 1e-10;
constexpr double kRidge = 1e-12;

// Cholesky solve of the k x k system (G + ridge I) z = rhs, k <= 6.
// Returns false if the factorization hits a non-positive pivot.
bool solve_spd(std::vector<double>& g, std::vector<double>& rhs, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) g[i * k + i] += kRidge;
    // in-place lower Cholesky
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = g[i * k + j];
            for (std::size_t t = 0; t < j; ++t) sum -= g[i * k + t] * g[j * k + t];
            if (i == j) {
                if (sum <= 0.0) return false;
                g[i * k + i] = std::sqrt(sum);
            } else {
                g[i * k + j] = sum / g[j * k + j];
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        double sum = rhs[i];
        for (std::size_t t = 0; t < i; ++t) sum -= g[i * k + t] * rhs[t];
        rhs[i] = sum / g[i * k + i];
    }
    for (std::size_t ii = k; ii-- > 0;) {
        double sum = rhs[ii];
        for (std::size_t t = ii + 1; t < k; ++t) sum -= g[t * k + ii] * rhs[t];
        rhs[ii] = sum / g[ii * k + ii];
    }
    return true;
}

// Least-squares of b on the columns in `supp`; returns the residual norm and
// fills `coef`.
double ls_residual(const Problem& p, const std::vector<std::size_t>& supp,
                   std::vector<double>& coef) {
    const std::size_t m = p.m();
    const std::size_t n = p.n();
    const std::size_t k = supp.size();
    const double* a = p.phi.data();

    std::vector<double> gram(k * k, 0.0), rhs(k, 0.0);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c <= r; ++c) {
            double sum = 0.0;
            for (std::size_t i = 0; i < m; ++i) sum += a[i * n + supp[r]] * a[i * n + supp[c]];
            gram[r * k + c] = gram[c * k + r] = sum;
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) sum += a[i * n + supp[r]] * p.b[i];
        rhs[r] = sum;
    }
    coef = rhs;
    if (!solve_spd(gram, coef, k)) return std::numeric_limits<double>::infinity();

    double rss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double ri = p.b[i];
        for (std::size_t c = 0; c < k; ++c) ri -= a[i * n + supp[c]] * coef[c];
        rss += ri * ri;
    }
    return std::sqrt(rss);
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

OracleResult make_result(const Problem& p, const std::vector<std::size_t>& supp,
                         const std::vector<double>& coef, bool exact) {
    OracleResult res;
    res.x_star.assign(p.n(), 0.0);
    for (std::size_t c = 0; c < supp.size(); ++c) res.x_star[supp[c]] = coef[c];
    res.support = supp;
    res.objective = static_cast<double>(supp.size());
    res.exact = exact;
    return res;
}

}  // namespace

OracleResult l0_exhaustive(const Problem& p, std::size_t k_max) {
    if (p.n() > 16 || k_max > 6)
        throw std::invalid_argument("l0_exhaustive: budget is n <= 16 and k_max <= 6");
    if (p.sigma && *p.sigma > 0.0)
        throw std::invalid_argument("l0_exhaustive: requires a noiseless problem");

    // Size-0 fit: the zero vector.
    if (std::sqrt(kernels::nrm2sq(p.b.data(), p.m())) <= kExactResidual)
        return make_result(p, {}, {}, true);

    double best_res = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_supp;
    std::vector<double> best_coef;

    for (std::size_t k = 1; k <= k_max; ++k) {
        double best_res_k = std::numeric_limits<double>::infinity();
        std::vector<std::size_t> best_supp_k;
        std::vector<double> best_coef_k;

        std::vector<std::size_t> comb(k);
        for (std::size_t i = 0; i < k; ++i) comb[i] = i;
        std::vector<double> coef;
        do {
            const double r = ls_residual(p, comb, coef);
            if (r < best_res_k) {
                best_res_k = r;
                best_supp_k = comb;
                best_coef_k = coef;
            }
        } while (next_combination(comb, p.n()));

        if (best_res_k <= kExactResidual)
            return make_result(p, best_supp_k, best_coef_k, true);
        if (best_res_k < best_res) {
            best_res = best_res_k;
            best_supp = best_supp_k;
            best_coef = best_coef_k;
        }
    }
    return make_result(p, best_supp, best_coef, false);
}

double sq_spectral_norm(const MeasurementMatrix& phi) {
    const std::size_t m = phi.rows();
    const std::size_t n = phi.cols();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> av(m), w(n);
    for (int it = 0; it < 50; ++it) {
        kernels::matvec(phi.data(), m, n, v.data(), av.data());
        kernels::matvec_t(phi.data(), m, n, av.data(), w.data());
        const double norm = std::sqrt(kernels::nrm2sq(w.data(), n));
        if (norm == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    }
    kernels::matvec(phi.data(), m, n, v.data(), av.data());
    return kernels::nrm2sq(av.data(), m);
}

OracleResult ista_lasso(const Problem& p, double kappa, double tau, std::size_t max_iters,
                        double tol, std::vector<double>* objective_trace) {
    if (!(kappa > 0.0)) throw std::invalid_argument("ista_lasso: kappa must be > 0");
    const double lip = sq_spectral_norm(p.phi);
    if (!(tau > 0.0) || !(lip > 0.0) || !(tau < 1.0 / lip))
        throw std::invalid_argument("ista_lasso: tau must lie in (0, 1/L)");

    const std::size_t m = p.m();
    const std::size_t n = p.n();
    std::vector<double> x(n, 0.0), next(n), resid(m), grad(n);
    if (objective_trace) objective_trace->clear();

    for (std::size_t it = 0; it < max_iters; ++it) {
        kernels::matvec(p.phi.data(), m, n, x.data(), resid.data());
        for (std::size_t i = 0; i < m; ++i) resid[i] = p.b[i] - resid[i];
        kernels::matvec_t(p.phi.data(), m, n, resid.data(), grad.data());
        for (std::size_t i = 0; i < n; ++i) grad[i] = x[i] + tau * grad[i];
        kernels::soft_threshold(grad.data(), tau * kappa, next.data(), n);

        const double delta = kernels::max_abs_diff(next.data(), x.data(), n);
        x.swap(next);
        if (objective_trace) {
            kernels::matvec(p.phi.data(), m, n, x.data(), resid.data());
            for (std::size_t i = 0; i < m; ++i) resid[i] = p.b[i] - resid[i];
            double l1 = 0.0;
            for (double xi : x) l1 += std::fabs(xi);
            objective_trace->push_back(0.5 * kernels::nrm2sq(resid.data(), m) + kappa * l1);
        }
        if (delta <= tol) break;
    }

    OracleResult res;
    res.x_star = x;
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] != 0.0) res.support.push_back(i);
    double l1 = 0.0;
    for (double xi : x) l1 += std::fabs(xi);
    res.objective = l1;
    res.exact = false;
    return res;
}

}  // namespace lcabp
