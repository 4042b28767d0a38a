#pragma once

// Noncrossing partitions, the free moment-cumulant relation and the exact
// quadratic-form oracle: for free standard semicircular X_1..X_n and a Hermitian
// matrix A, the free cumulants of Q = sum_ij a_ij X_i X_j are K_r(Q) = Tr(A^r).

#include "tanlaw/errors.hpp"
#include "tanlaw/exact.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace tanlaw {

inline constexpr int kMaxEnumeratedNC = 14;

/// Set partition of {1..n} stored as block labels: label(i) is the block index of
/// element i, blocks numbered in order of their smallest element.
class NCPartition {
public:
    NCPartition() = default;
    explicit NCPartition(std::vector<std::uint8_t> labels);

    /// Builds from explicit blocks (1-based elements). Throws ArgumentError unless
    /// the blocks are disjoint, cover {1..n} and do not cross.
    static NCPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

    int size() const { return static_cast<int>(labels_.size()); }
    int block_count() const { return blocks_; }
    /// Block index of element i (1-based).
    int label(int i) const { return labels_[i - 1]; }
    const std::vector<std::uint8_t>& labels() const { return labels_; }
    /// Sorted 1-based blocks, ordered by their minimum.
    std::vector<std::vector<int>> blocks() const;
    std::vector<int> block_sizes() const;
    bool is_pairing() const;

    friend bool operator==(const NCPartition&, const NCPartition&) = default;

private:
    std::vector<std::uint8_t> labels_;
    int blocks_ = 0;
};

/// Visits every element of NC(n) once (no materialization).
void for_each_nc(int n, const std::function<void(const NCPartition&)>& visit);

/// All of NC(n), 1 <= n <= 14.
std::vector<NCPartition> enumerate_nc(int n);

/// Noncrossing pair partitions NC_2(n) (empty for odd n).
std::vector<NCPartition> enumerate_nc_pairings(int n);

ExactInt catalan(int n);

/// Values indexed by order 1..size(); the scalar type is the numeric tag.
template <class T>
struct IndexedSeq {
    std::vector<T> values;

    IndexedSeq() = default;
    explicit IndexedSeq(std::vector<T> v) : values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }
    const T& operator[](int order) const { return values.at(order - 1); }
    T& operator[](int order) { return values.at(order - 1); }
    friend bool operator==(const IndexedSeq&, const IndexedSeq&) = default;
};

template <class T>
using CumulantSeq = IndexedSeq<T>;
template <class T>
using MomentSeq = IndexedSeq<T>;

/// m_n = sum over NC(n) of prod K_{|B|}, via the first-block recursion
/// m_n = sum_s K_s [z^{n-s}] M(z)^s. Any order.
template <class T>
MomentSeq<T> moments_from_cumulants(const CumulantSeq<T>& k, int n_max) {
    if (n_max < 0 || n_max > k.size())
        throw ArgumentError("moments_from_cumulants: cumulants not defined up to n_max");
    // pw[s][d] = [z^d] M(z)^s
    std::vector<std::vector<T>> pw(n_max + 1, std::vector<T>(n_max + 1, T(0)));
    std::vector<T> m(n_max + 1, T(0));
    m[0] = T(1);
    pw[0][0] = T(1);
    for (int n = 1; n <= n_max; ++n) {
        // diagonal s + d = n - 1 becomes computable once m_0..m_{n-1} are known
        for (int s = 1; s <= n; ++s) {
            const int d = n - s;
            T acc = T(0);
            for (int j = 0; j <= d; ++j) acc += m[j] * pw[s - 1][d - j];
            pw[s][d] = acc;
        }
        T mn = T(0);
        for (int s = 1; s <= n; ++s) mn += k[s] * pw[s][n - s];
        m[n] = mn;
    }
    return MomentSeq<T>(std::vector<T>(m.begin() + 1, m.end()));
}

/// Direct sum over NC(n); used as a cross-check of the recursion for n <= 8.
template <class T>
MomentSeq<T> moments_from_cumulants_enumerated(const CumulantSeq<T>& k, int n_max) {
    if (n_max > kMaxEnumeratedNC) throw ResourceError("moments_from_cumulants_enumerated: n too large");
    if (n_max > k.size()) throw ArgumentError("moments_from_cumulants_enumerated: cumulants too short");
    std::vector<T> out;
    for (int n = 1; n <= n_max; ++n) {
        T acc = T(0);
        for_each_nc(n, [&](const NCPartition& p) {
            T prod = T(1);
            for (int s : p.block_sizes()) prod = prod * k[s];
            acc += prod;
        });
        out.push_back(acc);
    }
    return MomentSeq<T>(std::move(out));
}

/// Inverse of moments_from_cumulants (triangular solve, one order at a time).
template <class T>
CumulantSeq<T> cumulants_from_moments(const MomentSeq<T>& m, int r_max) {
    if (r_max < 0 || r_max > m.size())
        throw ArgumentError("cumulants_from_moments: moments not defined up to r_max");
    CumulantSeq<T> k(std::vector<T>(r_max, T(0)));
    for (int r = 1; r <= r_max; ++r) {
        // with K_r = 0 the recursion returns m_r minus its K_r term (coefficient 1)
        const T partial = moments_from_cumulants(k, r)[r];
        k[r] = m[r] - partial;
    }
    return k;
}

/// Interval partition given by consecutive block lengths.
using IntervalPartition = std::vector<int>;

/// True iff pi v rho = 1_n in the partition lattice (union-find over blocks).
bool joins_to_top(const NCPartition& pi, const IntervalPartition& rho);

/// tau(X_{h1} ... X_{hL}) for a free standard semicircular family: the number of
/// noncrossing pairings whose pairs join equal letters. Zero for odd length.
ExactInt semicircular_mixed_moment(std::span<const int> word);

/// Words of length `length` over {0..letters-1} with nonzero semicircular moment.
std::vector<std::pair<std::vector<int>, ExactInt>> nonzero_semicircular_words(int letters, int length);

inline constexpr int kOracleMaxSize = 4;
inline constexpr int kOracleMaxOrder = 5;

using GaussMatrix = Eigen::Matrix<GaussRational, Eigen::Dynamic, Eigen::Dynamic>;

/// Free cumulants of Q = sum a_ij X_i X_j computed from scratch: moments by
/// expanding Q^m with semicircular_mixed_moment, then cumulant inversion.
/// Throws ArgumentError for a non-Hermitian A, ResourceError beyond n = 4, r = 5.
CumulantSeq<GaussRational> quadratic_form_cumulants_oracle(const GaussMatrix& a, int r_max);

/// Exact Tr(A^r), r = 1..r_max, by repeated multiplication.
std::vector<GaussRational> trace_powers_exact(const GaussMatrix& a, int r_max);

/// One row of the finite-n convergence table: K_r(Q_n) = Tr(A_n^r) / n^r.
struct LimitCheckRow {
    int n;
    double value;
};

/// K_r(Q_n) = Tr(A_n^r)/n^r for the matrices produced by `builder(n)`.
std::vector<LimitCheckRow> limit_theorem_small_check(
    const std::function<Eigen::MatrixXcd(int)>& builder, int r, std::span<const int> ns);

}  // namespace tanlaw
