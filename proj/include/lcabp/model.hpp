#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lcabp/rng.hpp"

// Problem model: sparse spike signals, +-1 column-normalized measurement
// matrices, and clean or noisy observations. All generators are pure
// functions of their arguments and the RngSpec.

namespace lcabp {

struct SparseSignal {
    std::size_t n = 0;
    std::vector<std::size_t> support;  // sorted, distinct, each < n
    std::vector<double> values;        // parallel to support, all nonzero

    std::vector<double> dense() const;
};

// Dense row-major m x n matrix with m <= n. Matrices produced by gen_matrix
// additionally have every entry equal to +-1/sqrt(m) and unit-norm columns.
class MeasurementMatrix {
  public:
    MeasurementMatrix() = default;
    MeasurementMatrix(std::size_t m, std::size_t n, std::vector<double> entries);

    std::size_t rows() const { return m_; }
    std::size_t cols() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const double* data() const { return entries_.data(); }
    const double* row(std::size_t i) const { return entries_.data() + i * n_; }
    const std::vector<double>& entries() const { return entries_; }

    double column_norm(std::size_t j) const;

  private:
    std::size_t m_ = 0, n_ = 0;
    std::vector<double> entries_;
};

struct Problem {
    MeasurementMatrix phi;
    std::vector<double> b;
    std::optional<SparseSignal> truth;
    std::optional<double> sigma;

    std::size_t n() const { return phi.cols(); }
    std::size_t m() const { return phi.rows(); }
};

// `omega` spike positions drawn uniformly without replacement (partial
// Fisher-Yates), each value +-amplitude with equal probability. Signs are
// drawn in ascending support order after the positions are fixed.
SparseSignal gen_signal(std::size_t n, std::size_t omega, double amplitude, RngSpec rng);

// Entries +-1 with equal probability (drawn row-major), scaled by 1/sqrt(m)
// so every column has unit l2 norm.
MeasurementMatrix gen_matrix(std::size_t m, std::size_t n, RngSpec rng);

// b = phi * signal + eps with eps ~ N(0, sigma^2 I); eps = 0 when sigma = 0.
Problem gen_problem(const SparseSignal& signal, MeasurementMatrix phi, double sigma, RngSpec rng);

// Plain-text format (all decimals printed with 17 significant digits):
//   line 1:        n m omega sigma     (omega = -1: no ground truth stored;
//                                       sigma = -1: noise level unknown)
//   line 2:        b, m values
//   line 3:        truth as a dense n-vector (present iff omega >= 0)
//   next m lines:  rows of phi, n values each
void save_problem(std::ostream& os, const Problem& p);
void save_problem(const std::string& path, const Problem& p);
Problem load_problem(std::istream& is);
Problem load_problem(const std::string& path);

// Signal-only format: "n omega" header, then the dense vector.
void save_signal(std::ostream& os, const SparseSignal& s);
SparseSignal load_signal(std::istream& is);

// FNV-1a over the byte stream, used for the generate subcommand's checksums.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace lcabp
