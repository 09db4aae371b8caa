#include "lcabp/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lcabp::kernels {
namespace {

thread_local std::uint64_t t_matvec_calls = 0;

bool cpu_has_avx2() {
#if defined(LCABP_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend pick_default() {
    if (const char* env = std::getenv("LCABP_KERNELS")) {
        std::string v(env);
        if (v == "scalar") return Backend::scalar;
        if (v == "avx2") {
            if (!cpu_has_avx2()) throw std::runtime_error("LCABP_KERNELS=avx2: CPU lacks AVX2/FMA");
            return Backend::avx2;
        }
        throw std::runtime_error("LCABP_KERNELS must be 'scalar' or 'avx2', got '" + v + "'");
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{pick_default()};
    return slot;
}

const Ops& active_ops() {
#if defined(LCABP_HAVE_AVX2)
    if (backend_slot().load(std::memory_order_relaxed) == Backend::avx2) return ops_avx2();
#endif
    return ops_scalar();
}

}  // namespace

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

bool cpu_supports(Backend b) { return b == Backend::scalar || cpu_has_avx2(); }

void force_backend(Backend b) {
    if (!cpu_supports(b)) throw std::invalid_argument("force_backend: CPU lacks AVX2/FMA");
    backend_slot().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) {
    return b == Backend::scalar ? "scalar" : "avx2";
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    active_ops().axpy(alpha, x, y, n);
}
double dot(const double* x, const double* y, std::size_t n) { return active_ops().dot(x, y, n); }
double nrm2sq(const double* x, std::size_t n) { return active_ops().nrm2sq(x, n); }
double max_abs(const double* x, std::size_t n) { return active_ops().max_abs(x, n); }
double max_abs_diff(const double* x, const double* y, std::size_t n) {
    return active_ops().max_abs_diff(x, y, n);
}
void soft_threshold(const double* u, double kappa, double* out, std::size_t n) {
    active_ops().soft_threshold(u, kappa, out, n);
}
void clamp_box(const double* u, double kappa, double* out, std::size_t n) {
    active_ops().clamp_box(u, kappa, out, n);
}
void matvec(const double* a, std::size_t m, std::size_t n, const double* x, double* y) {
    ++t_matvec_calls;
    active_ops().matvec(a, m, n, x, y);
}
void matvec_t(const double* a, std::size_t m, std::size_t n, const double* x, double* y) {
    ++t_matvec_calls;
    active_ops().matvec_t(a, m, n, x, y);
}

std::uint64_t matvec_calls() { return t_matvec_calls; }
void reset_matvec_calls() { t_matvec_calls = 0; }

}  // namespace lcabp::kernels
