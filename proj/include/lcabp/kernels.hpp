#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Low-level arithmetic kernels shared by the solvers, generators and oracles.
//
// Every kernel exists in a scalar reference version and (on x86-64) an AVX2+FMA
// version. The backend is picked once per process: AVX2 when the CPU supports
// it, unless overridden by force_backend() or the environment variable
// LCABP_KERNELS=scalar|avx2. The element-wise kernels (soft_threshold,
// clamp_box, max_abs, max_abs_diff) produce bit-identical results on every
// backend; the reductions (dot, nrm2sq) and the matrix products may differ by
// floating-point reassociation only.

namespace lcabp::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
// Throws std::invalid_argument if the CPU cannot run `b`.
void force_backend(Backend b);
bool cpu_supports(Backend b);
std::string_view backend_name(Backend b);

// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
// sum of squares
double nrm2sq(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);
double max_abs_diff(const double* x, const double* y, std::size_t n);

// out_i = sign(u_i) * max(|u_i| - kappa, 0)   (shrink toward zero)
void soft_threshold(const double* u, double kappa, double* out, std::size_t n);
// out_i = clamp(u_i, -kappa, kappa)
void clamp_box(const double* u, double kappa, double* out, std::size_t n);

// y = A x with A row-major m x n, x length n, y length m.
void matvec(const double* a, std::size_t m, std::size_t n, const double* x, double* y);
// y = A^T x with A row-major m x n, x length m, y length n.
void matvec_t(const double* a, std::size_t m, std::size_t n, const double* x, double* y);

// Per-thread count of matvec/matvec_t calls since the last reset. The solver
// tests use this to pin the number of matrix products per derivative
// evaluation.
std::uint64_t matvec_calls();
void reset_matvec_calls();

// Individual backends, exposed for the equivalence tests. `ops_scalar` is the
// reference implementation the dispatched kernels above are checked against.
struct Ops {
    void (*axpy)(double, const double*, double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    double (*nrm2sq)(const double*, std::size_t);
    double (*max_abs)(const double*, std::size_t);
    double (*max_abs_diff)(const double*, const double*, std::size_t);
    void (*soft_threshold)(const double*, double, double*, std::size_t);
    void (*clamp_box)(const double*, double, double*, std::size_t);
    void (*matvec)(const double*, std::size_t, std::size_t, const double*, double*);
    void (*matvec_t)(const double*, std::size_t, std::size_t, const double*, double*);
};

const Ops& ops_scalar();
#if defined(LCABP_HAVE_AVX2)
const Ops& ops_avx2();
#endif

}  // namespace lcabp::kernels
