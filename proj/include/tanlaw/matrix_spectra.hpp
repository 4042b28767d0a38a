#pragma once

// Hermitian matrices with constant diagonal c, constant upper entry w = a + bi
// and lower entry conj(w): spectra, characteristic polynomial, trace powers and
// the cotangent-power sums they produce.

#include "tanlaw/exact.hpp"
#include "tanlaw/nc_partitions.hpp"

#include <Eigen/Core>

#include <complex>
#include <vector>

namespace tanlaw {

struct StructuredMatrixSpec {
    int n = 1;
    double c = 0.0;
    std::complex<double> w{0.0, 1.0};

    double a() const { return w.real(); }
    double b() const { return w.imag(); }
};

/// Eigenvalues, ascending, repeated by multiplicity.
struct Spectrum {
    std::vector<double> eigenvalues;

    int size() const { return static_cast<int>(eigenvalues.size()); }
    double operator[](int i) const { return eigenvalues[i]; }
};

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// n x n matrix with `diag` on the diagonal, `upper` above it and conj(upper) below.
template <class Scalar>
DenseMatrix<Scalar> build_structured(int n, const Scalar& diag, const Scalar& upper) {
    using std::conj;
    const Scalar lower = conj(upper);
    DenseMatrix<Scalar> m(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m(i, j) = i == j ? diag : (i < j ? upper : lower);
    return m;
}

Eigen::MatrixXcd build(const StructuredMatrixSpec& spec);
GaussMatrix build_exact(int n, const ExactRational& c, const GaussRational& w);

/// alpha = arccot(a/|b|) in (0, pi).
double spec_angle(const StructuredMatrixSpec& spec);

/// det(lambda I - A) from the closed form. Throws ArgumentError when b = 0.
double charpoly(const StructuredMatrixSpec& spec, double lambda);
/// Same value through the three-term recurrence.
double charpoly_recurrence(const StructuredMatrixSpec& spec, double lambda);

/// lambda_k = |b| cot((alpha + k pi)/n) - a + c, k = 0..n-1; b = 0 handled directly.
Spectrum closed_form_eigenvalues(const StructuredMatrixSpec& spec);

/// Cyclic complex Jacobi. Stops when the off-diagonal Frobenius norm drops below
/// rel_tol * ||H||_F; NumericError after 64 sweeps, ArgumentError if H is not Hermitian.
Spectrum hermitian_eigenvalues(const Eigen::MatrixXcd& h, double rel_tol = 1e-12);

/// Tr(A^r) from the closed-form eigenvalues.
double trace_power(const StructuredMatrixSpec& spec, int r);
/// Tr(A^r) by repeated dense multiplication (n <= 64).
double trace_power_dense(const StructuredMatrixSpec& spec, int r);

/// Power sums s_1..s_rmax from the binomial coefficients of the characteristic
/// polynomial through the Newton-Girard identities.
std::vector<double> newton_power_sums(const StructuredMatrixSpec& spec, int r_max);

struct IdentityCheck {
    double direct = 0.0;
    double closed = 0.0;
    ExactRational closed_exact;
    double leading = 0.0;  // leading-order term in n, where one is defined

    double absdiff() const;
    double reldiff() const;  // relative to max(|closed|, 1)
};

/// sum_{k=0}^{n-1} cot^{2m}((2k+1) pi / 2n) against the arctangent/tangent-number formula.
IdentityCheck cotangent_sum_2m(int n, int m);
/// sum_{k=0}^{n-1} cot^m((4k-1) pi / 4n) against the arctangent/zigzag formula.
IdentityCheck cotangent_sum_shifted(int n, int m);

/// Spectrum of the all-ones off-diagonal matrix: -1 (n-1 times) and n-1.
Spectrum anticommutator_spectrum(int n);
/// Tr(A^r)/n^r for that matrix; tends to 1 for r >= 2 and is 0 for r = 1.
double anticommutator_cumulant(int n, int r);

struct TraceMethodConstants {
    double zeta2k;
    double b2k;
    double t2k1;
    double e_k;
};

/// Finite-n approximants of zeta(2k), B_{2k}, T_{2k-1} and E_k from trace powers.
TraceMethodConstants trace_method_constants(int n, int k);

}  // namespace tanlaw
