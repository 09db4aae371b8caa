#include "lcabp/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lcabp/kernels.hpp"

namespace lcabp {
namespace {

void write_values(std::ostream& os, const double* v, std::size_t n) {
    char buf[32];
    for (std::size_t i = 0; i < n; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", v[i]);
        if (i) os << ' ';
        os << buf;
    }
    os << '\n';
}

std::vector<double> read_values(std::istream& is, std::size_t n, const char* what) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(is >> v[i])) throw std::runtime_error(std::string("problem file: truncated ") + what);
    }
    return v;
}

}  // namespace

std::vector<double> SparseSignal::dense() const {
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < support.size(); ++k) out[support[k]] = values[k];
    return out;
}

MeasurementMatrix::MeasurementMatrix(std::size_t m, std::size_t n, std::vector<double> entries)
    : m_(m), n_(n), entries_(std::move(entries)) {
    if (m == 0 || n == 0 || m > n)
        throw std::invalid_argument("MeasurementMatrix: need 0 < m <= n");
    if (entries_.size() != m * n)
        throw std::invalid_argument("MeasurementMatrix: entry count must be m*n");
}

double MeasurementMatrix::column_norm(std::size_t j) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < m_; ++i) acc += entries_[i * n_ + j] * entries_[i * n_ + j];
    return std::sqrt(acc);
}

SparseSignal gen_signal(std::size_t n, std::size_t omega, double amplitude, RngSpec spec) {
    if (omega == 0 || omega > n)
        throw std::invalid_argument("gen_signal: need 0 < omega <= n");
    if (!(amplitude > 0.0)) throw std::invalid_argument("gen_signal: amplitude must be > 0");

    Rng rng(spec);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < omega; ++i) {
        const std::size_t j = i + rng.next_below(n - i);
        std::swap(idx[i], idx[j]);
    }
    SparseSignal s;
    s.n = n;
    s.support.assign(idx.begin(), idx.begin() + omega);
    std::sort(s.support.begin(), s.support.end());
    s.values.reserve(omega);
    for (std::size_t k = 0; k < omega; ++k)
        s.values.push_back(rng.next_bool() ? amplitude : -amplitude);
    return s;
}

MeasurementMatrix gen_matrix(std::size_t m, std::size_t n, RngSpec spec) {
    if (m == 0 || m >= n) throw std::invalid_argument("gen_matrix: need 0 < m < n");
    Rng rng(spec);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<double> entries(m * n);
    for (double& e : entries) e = rng.next_bool() ? scale : -scale;
    return MeasurementMatrix(m, n, std::move(entries));
}

Problem gen_problem(const SparseSignal& signal, MeasurementMatrix phi, double sigma, RngSpec spec) {
    if (phi.cols() != signal.n)
        throw std::invalid_argument("gen_problem: phi columns must match signal dimension");
    if (!(sigma >= 0.0)) throw std::invalid_argument("gen_problem: sigma must be >= 0");

    const std::vector<double> x = signal.dense();
    std::vector<double> b(phi.rows());
    kernels::matvec(phi.data(), phi.rows(), phi.cols(), x.data(), b.data());
    if (sigma > 0.0) {
        Rng rng(spec);
        for (double& bi : b) bi += sigma * rng.next_gaussian();
    }
    Problem p;
    p.phi = std::move(phi);
    p.b = std::move(b);
    p.truth = signal;
    p.sigma = sigma;
    return p;
}

void save_problem(std::ostream& os, const Problem& p) {
    const long long omega = p.truth ? static_cast<long long>(p.truth->support.size()) : -1;
    char head[128];
    std::snprintf(head, sizeof head, "%zu %zu %lld %.17g\n", p.n(), p.m(), omega,
                  p.sigma ? *p.sigma : -1.0);
    os << head;
    write_values(os, p.b.data(), p.b.size());
    if (p.truth) {
        const std::vector<double> dense = p.truth->dense();
        write_values(os, dense.data(), dense.size());
    }
    for (std::size_t i = 0; i < p.m(); ++i) write_values(os, p.phi.row(i), p.n());
}

void save_problem(const std::string& path, const Problem& p) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    save_problem(os, p);
    if (!os) throw std::runtime_error("write failed: " + path);
}

Problem load_problem(std::istream& is) {
    std::size_t n = 0, m = 0;
    long long omega = 0;
    double sigma = 0.0;
    if (!(is >> n >> m >> omega >> sigma))
        throw std::runtime_error("problem file: bad header, expected 'n m omega sigma'");
    if (n == 0 || m == 0 || m > n) throw std::runtime_error("problem file: need 0 < m <= n");

    Problem p;
    p.b = read_values(is, m, "observation vector");
    if (omega >= 0) {
        SparseSignal s;
        s.n = n;
        const std::vector<double> dense = read_values(is, n, "ground-truth vector");
        for (std::size_t i = 0; i < n; ++i) {
            if (dense[i] != 0.0) {
                s.support.push_back(i);
                s.values.push_back(dense[i]);
            }
        }
        if (s.support.size() != static_cast<std::size_t>(omega))
            throw std::runtime_error("problem file: omega does not match ground-truth nonzeros");
        p.truth = std::move(s);
    }
    std::vector<double> entries;
    entries.reserve(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> row = read_values(is, n, "matrix row");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    p.phi = MeasurementMatrix(m, n, std::move(entries));
    if (sigma >= 0.0) p.sigma = sigma;

    // A stored noiseless ground truth must actually fit the observation.
    if (p.truth && (!p.sigma || *p.sigma == 0.0)) {
        const std::vector<double> x = p.truth->dense();
        std::vector<double> r(m);
        kernels::matvec(p.phi.data(), m, n, x.data(), r.data());
        for (std::size_t i = 0; i < m; ++i) r[i] -= p.b[i];
        if (std::sqrt(kernels::nrm2sq(r.data(), m)) > 1e-10)
            throw std::runtime_error("problem file: ground truth does not satisfy phi*x = b");
    }
    return p;
}

Problem load_problem(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return load_problem(is);
}

void save_signal(std::ostream& os, const SparseSignal& s) {
    os << s.n << ' ' << s.support.size() << '\n';
    const std::vector<double> dense = s.dense();
    write_values(os, dense.data(), dense.size());
}

SparseSignal load_signal(std::istream& is) {
    std::size_t n = 0, omega = 0;
    if (!(is >> n >> omega)) throw std::runtime_error("signal file: bad header");
    SparseSignal s;
    s.n = n;
    const std::vector<double> dense = read_values(is, n, "signal vector");
    for (std::size_t i = 0; i < n; ++i) {
        if (dense[i] != 0.0) {
            s.support.push_back(i);
            s.values.push_back(dense[i]);
        }
    }
    if (s.support.size() != omega)
        throw std::runtime_error("signal file: omega does not match nonzeros");
    return s;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace lcabp
