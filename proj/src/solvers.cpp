#include "lcabp/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "lcabp/kernels.hpp"

namespace lcabp {
namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

// Scratch buffers for one derivative evaluation, reused across iterations.
struct Workspace {
    std::vector<double> x;   // T_kappa(u)
    std::vector<double> s;   // u - x = clamp(u)
    std::vector<double> q;   // phi^T lambda
    std::vector<double> r;   // phi^T N
    std::vector<double> N;   // phi x - b
    std::vector<double> M;   // -(s + q)
    std::vector<double> du;
    std::vector<double> dl;

    Workspace(std::size_t n, std::size_t m)
        : x(n), s(n), q(n), r(n), N(m), M(n), du(n), dl(m) {}
};

// Fills ws.du / ws.dl for the configured variant; also leaves ws.N and the
// stationarity ingredients (ws.s, ws.q) valid for the caller.
void eval_derivative(const SolverState& st, const Problem& p, const SolverConfig& c,
                     Workspace& ws) {
    const std::size_t n = p.n();
    const std::size_t m = p.m();
    const double* phi = p.phi.data();

    kernels::soft_threshold(st.u.data(), c.kappa, ws.x.data(), n);
    kernels::clamp_box(st.u.data(), c.kappa, ws.s.data(), n);

    kernels::matvec(phi, m, n, ws.x.data(), ws.N.data());
    for (std::size_t i = 0; i < m; ++i) ws.N[i] -= p.b[i];

    kernels::matvec_t(phi, m, n, st.lambda.data(), ws.q.data());
    for (std::size_t i = 0; i < n; ++i) ws.M[i] = -(ws.s[i] + ws.q[i]);

    switch (c.variant) {
        case Variant::original:
            ws.du = ws.M;
            ws.dl = ws.N;
            break;
        case Variant::original_augmented:
            kernels::matvec_t(phi, m, n, ws.N.data(), ws.r.data());
            for (std::size_t i = 0; i < n; ++i) ws.du[i] = ws.M[i] - ws.r[i];
            ws.dl = ws.N;
            break;
        case Variant::improved:
            ws.du = ws.M;
            kernels::matvec(phi, m, n, ws.M.data(), ws.dl.data());
            for (std::size_t i = 0; i < m; ++i) ws.dl[i] += ws.N[i];
            break;
        case Variant::improved_augmented:
            kernels::matvec_t(phi, m, n, ws.N.data(), ws.r.data());
            for (std::size_t i = 0; i < n; ++i) ws.du[i] = ws.M[i] - ws.r[i];
            kernels::matvec(phi, m, n, ws.M.data(), ws.dl.data());
            for (std::size_t i = 0; i < m; ++i) ws.dl[i] += ws.N[i];
            break;
    }
}

void check_dims(const SolverState& st, const Problem& p) {
    if (st.u.size() != p.n() || st.lambda.size() != p.m())
        throw std::invalid_argument("solver state dimensions do not match problem");
}

double stationarity_norm(const Workspace& ws) {
    // ||u - x + phi^T lambda||_inf = ||s + q||_inf = ||M||_inf
    return kernels::max_abs(ws.M.data(), ws.M.size());
}

}  // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::original: return "original";
        case Variant::original_augmented: return "original-augmented";
        case Variant::improved: return "improved";
        case Variant::improved_augmented: return "improved-augmented";
    }
    return "?";
}

Variant parse_variant(const std::string& name) {
    if (name == "original") return Variant::original;
    if (name == "original-augmented") return Variant::original_augmented;
    if (name == "improved") return Variant::improved;
    if (name == "improved-augmented") return Variant::improved_augmented;
    throw std::invalid_argument(
        "unknown variant '" + name +
        "' (expected original|original-augmented|improved|improved-augmented)");
}

void SolverConfig::validate() const {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (!(tol_residual > 0.0) || !(tol_state > 0.0))
        throw std::invalid_argument("tolerances must be > 0");
}

std::vector<double> SolverState::x(double kappa) const {
    std::vector<double> out(u.size());
    kernels::soft_threshold(u.data(), kappa, out.data(), u.size());
    return out;
}

SolverState zero_state(const Problem& p) {
    SolverState st;
    st.u.assign(p.n(), 0.0);
    st.lambda.assign(p.m(), 0.0);
    return st;
}

SolverState random_state(const Problem& p, double scale, RngSpec spec) {
    Rng rng(spec);
    SolverState st;
    st.u.resize(p.n());
    st.lambda.resize(p.m());
    for (double& v : st.u) v = scale * rng.next_gaussian();
    for (double& v : st.lambda) v = scale * rng.next_gaussian();
    return st;
}

Derivative derivative(const SolverState& s, const Problem& p, const SolverConfig& c) {
    c.validate();
    check_dims(s, p);
    Workspace ws(p.n(), p.m());
    eval_derivative(s, p, c, ws);
    return Derivative{std::move(ws.du), std::move(ws.dl)};
}

SolverState step(const SolverState& s, const Problem& p, const SolverConfig& c) {
    Derivative d = derivative(s, p, c);
    SolverState next = s;
    kernels::axpy(c.mu, d.du.data(), next.u.data(), next.u.size());
    kernels::axpy(c.mu, d.dlambda.data(), next.lambda.data(), next.lambda.size());
    next.iter = s.iter + 1;
    if (!all_finite(next.u) || !all_finite(next.lambda))
        throw DivergenceError(next.iter, "solver state became non-finite at iteration " +
                                             std::to_string(next.iter));
    return next;
}

TrialResult solve(const Problem& p, const SolverConfig& c, const SolverState* init) {
    c.validate();
    SolverState st = init ? *init : zero_state(p);
    check_dims(st, p);

    const std::size_t n = p.n();
    const std::size_t m = p.m();
    const bool keep_states = c.trace.state || c.trace.lyapunov;
    Workspace ws(n, m);
    TrialResult out;
    std::vector<double> last_finite_u = st.u;

    for (;;) {
        eval_derivative(st, p, c, ws);
        const double primal = std::sqrt(kernels::nrm2sq(ws.N.data(), m));
        const double station = stationarity_norm(ws);
        if (c.trace.residual) out.residuals.push_back({st.iter, primal, station});
        if (keep_states) out.states.push_back(st);

        out.iters_used = st.iter;
        out.final_residual = primal;
        out.final_stationarity = station;

        const double change =
            c.mu * std::max(kernels::max_abs(ws.du.data(), n), kernels::max_abs(ws.dl.data(), m));
        if (primal <= c.tol_residual && change <= c.tol_state) {
            out.status = SolveStatus::converged;
            break;
        }
        if (st.iter >= c.max_iters) {
            out.status = SolveStatus::max_iters;
            break;
        }

        last_finite_u = st.u;
        kernels::axpy(c.mu, ws.du.data(), st.u.data(), n);
        kernels::axpy(c.mu, ws.dl.data(), st.lambda.data(), m);
        ++st.iter;
        if (!all_finite(st.u) || !all_finite(st.lambda)) {
            // Report the last finite iterate; the traces already end there.
            out.status = SolveStatus::diverged;
            out.diverged_at = st.iter;
            out.iters_used = st.iter;
            break;
        }
    }

    out.converged = out.status == SolveStatus::converged;
    if (out.status == SolveStatus::diverged) {
        out.x_hat.resize(n);
        kernels::soft_threshold(last_finite_u.data(), c.kappa, out.x_hat.data(), n);
    } else {
        out.x_hat = st.x(c.kappa);
    }

    if (c.trace.lyapunov && !out.states.empty())
        out.lyapunov = lyapunov_trace(out.states, out.states.back());
    return out;
}

KktResiduals kkt_residuals(const SolverState& s, const Problem& p, double kappa) {
    if (!(kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
    check_dims(s, p);
    const std::size_t n = p.n();
    const std::size_t m = p.m();
    std::vector<double> x(n), g(n), q(n), N(m);
    kernels::soft_threshold(s.u.data(), kappa, x.data(), n);
    kernels::clamp_box(s.u.data(), kappa, g.data(), n);
    kernels::matvec(p.phi.data(), m, n, x.data(), N.data());
    for (std::size_t i = 0; i < m; ++i) N[i] -= p.b[i];
    kernels::matvec_t(p.phi.data(), m, n, s.lambda.data(), q.data());
    for (std::size_t i = 0; i < n; ++i) g[i] += q[i];
    return {std::sqrt(kernels::nrm2sq(N.data(), m)), kernels::max_abs(g.data(), n)};
}

std::vector<double> lyapunov_trace(std::span<const SolverState> states,
                                   const SolverState& reference) {
    if (states.empty()) throw std::invalid_argument("lyapunov_trace: empty state sequence");
    const std::size_t n = reference.u.size();
    const std::size_t m = reference.lambda.size();
    std::vector<double> diff(std::max(n, m));
    std::vector<double> out;
    out.reserve(states.size());
    for (const SolverState& s : states) {
        if (s.u.size() != n || s.lambda.size() != m)
            throw std::invalid_argument("lyapunov_trace: state dimensions mismatch");
        for (std::size_t i = 0; i < n; ++i) diff[i] = s.u[i] - reference.u[i];
        double v = kernels::nrm2sq(diff.data(), n);
        for (std::size_t i = 0; i < m; ++i) diff[i] = s.lambda[i] - reference.lambda[i];
        v += kernels::nrm2sq(diff.data(), m);
        out.push_back(0.5 * v);
    }
    return out;
}

void write_trace(std::ostream& os, const TrialResult& r) {
    const bool with_v = !r.lyapunov.empty();
    os << (with_v ? "# iter primal stationarity lyapunov\n" : "# iter primal stationarity\n");
    char buf[128];
    for (std::size_t k = 0; k < r.residuals.size(); ++k) {
        const IterationRecord& rec = r.residuals[k];
        if (with_v && k < r.lyapunov.size()) {
            std::snprintf(buf, sizeof buf, "%zu %.17g %.17g %.17g\n", rec.iter, rec.primal,
                          rec.stationarity, r.lyapunov[k]);
        } else {
            std::snprintf(buf, sizeof buf, "%zu %.17g %.17g\n", rec.iter, rec.primal,
                          rec.stationarity);
        }
        os << buf;
    }
}

}  // namespace lcabp
