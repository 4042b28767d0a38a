#pragma once

// Seeded Gaussian matrix ensembles, the Wishart-type and sandwich models, and the
// exact GUE pairing expansion.

#include "tanlaw/matrix_spectra.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace tanlaw {

/// Counter-based generator: one independent stream per (seed, index).
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();
    /// Uniform on (0, 1).
    double uniform();
    /// Standard normal (polar Box-Muller).
    double normal();

private:
    std::uint64_t state_;
    double spare_ = 0;
    bool has_spare_ = false;
};

struct SimConfig {
    int N = 100;
    int M = 100;
    int samples = 10;
    std::uint64_t seed = 1;
    int bins = 50;
    int threads = 1;
};

/// Hermitian; diagonal N(0, 1/N), off-diagonal real and imaginary parts N(0, 1/(2N)).
Eigen::MatrixXcd sample_gue(int n, Stream& s);
/// rows x cols, real and imaginary parts N(0, 1/(2 rows)).
Eigen::MatrixXcd sample_complex_gaussian(int rows, int cols, Stream& s);

struct EmpiricalSpectrum {
    std::vector<double> eigenvalues;
    std::vector<std::size_t> boundaries;  // sample i occupies [boundaries[i], boundaries[i+1])

    int samples() const { return static_cast<int>(boundaries.size()) - 1; }
    /// Mean of lambda^k over all eigenvalues.
    double moment(int k) const;
    /// Standard error of moment(k) from the per-sample spread.
    double moment_stderr(int k) const;
};

enum class WishartMethod {
    direct,    // X (A kron P) X^* with X of size N x NM
    spectral,  // same law: Y (diag(A) kron diag(P)) Y^* after unitary rotation of X
};

/// Eigenvalues of (1/M) X [A kron P] X^*, one block per sample.
EmpiricalSpectrum simulate_wishart_model(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& p,
                                         const SimConfig& config, WishartMethod method = WishartMethod::spectral);

/// Builds one sample of the Wishart-type matrix.
Eigen::MatrixXcd wishart_sample(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& p, Stream& s,
                                WishartMethod method);

struct MomentEstimate {
    int m;
    double mean;
    double stderr_;
};

/// Monte Carlo E Tr[(X D X)^m], m = 1..m_max, with X GUE of D's size.
std::vector<MomentEstimate> simulate_sandwich_model(const Eigen::MatrixXcd& d, int m_max, const SimConfig& config);

/// Monte Carlo E Tr(X D^{q_1} X D^{q_2} ... X D^{q_m}).
MomentEstimate monte_carlo_pairing_moment(const Eigen::MatrixXcd& d, const std::vector<int>& q,
                                          const SimConfig& config);

/// 1-based permutation.
struct Permutation {
    std::vector<int> images;

    int operator()(int i) const { return images[i - 1]; }
    std::vector<std::vector<int>> cycles() const;
};

/// All pair partitions of {1..m} as involutions without fixed points.
std::vector<Permutation> pair_partitions(int m);

/// Exact E Tr(X D^{q_1} ... X D^{q_m}) = sum over pairings pi of
/// Tr_{pi gamma}(D^{q_1}, ..., D^{q_m}) N^{-m/2}; 0 for odd m.
double pairing_expected_moment(const Eigen::MatrixXcd& d, const std::vector<int>& q);

struct HistogramBin {
    double left;
    double right;
    long count;
    double density;
};

/// bins equal-width bins over [lo, hi]; lo == hi means the data range.
std::vector<HistogramBin> histogram(const std::vector<double>& data, int bins, double lo = 0, double hi = 0);

}  // namespace tanlaw
