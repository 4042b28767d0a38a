#pragma once

// Tangent, zigzag, arctangent and higher-order tangent numbers, derivative
// polynomials of tan and the tangent polynomials, all in exact arithmetic.
//
// Conventions:
//   tan z        = sum_n T_n z^n / n!                  (T_n = 0 for even n)
//   tan z + sec z = sum_n E_n z^n / n!                 (Euler zigzag numbers)
//   tan^k z      = sum_n T_n^{(k)} z^n / n!
//   (arctan z)^k / k! = sum_n A_n^{(k)} z^n / n!,  atanh analogously with Ã.
//   d^n/dθ^n tan θ = P_n(tan θ),  P_0(x) = x,  P_n = (1 + x^2) P'_{n-1}.
//   T_n(x) = sum_k T_n^{(k)} x^k, the z^n/n! coefficient of x tan z / (1 - x tan z).
//
// The generating function x tan z/(1 - x tan z) is used for T(x, z); it differs from
// tan z/(1 - x tan z) by the factor x, i.e. by a shift of the x-degree.

#include "tanlaw/exact.hpp"
#include "tanlaw/polynomial.hpp"
#include "tanlaw/series.hpp"

#include <utility>
#include <vector>

namespace tanlaw {

/// B_{2k} by the recurrence sum_{j<=m} C(m+1, j) B_j = 0, B_0 = 1.
ExactRational bernoulli(int k);

/// B_0, B_1, ..., B_{n} (B_1 = -1/2).
std::vector<ExactRational> bernoulli_table(int n);

/// T_{2k-1} = (-1)^{k+1} 4^k (4^k - 1) B_{2k} / (2k).
ExactInt tangent_number_from_bernoulli(int k);

/// E_0..E_{n_max} by the Seidel boustrophedon (integer additions only).
std::vector<ExactInt> zigzag_numbers(int n_max);

/// T_1, T_3, ..., T_{2 k_max - 1}; Bernoulli and boustrophedon routes must agree.
std::vector<ExactInt> tangent_numbers(int k_max);

/// Taylor coefficient T_n of tan (zero for even n).
ExactInt tangent_number(int n);

/// A_n^{(k)} (signed) and Ã_n^{(k)} (nonnegative). Zero when n < k or n - k odd.
ExactInt arctangent_number(int n, int k);
ExactInt hyperbolic_arctangent_number(int n, int k);

/// T_n^{(k)} = n! [z^n] tan^k z.
ExactInt higher_tangent_number(int n, int k);

IntPolynomial derivative_polynomial(int n);

/// T_n(x) = x P_n(x) / (1 + x^2), checked against the higher tangent numbers.
IntPolynomial tangent_polynomial(int n);

/// (sum_{k=0}^{n-1} T_n^{(k+1)}, 2^{n-1} E_n), computed independently.
std::pair<ExactInt, ExactInt> zigzag_sum_identity(int n);

/// Checks x(x + tan z)/(1 - x tan z) == (1 + x^2) x tan z/(1 - x tan z) + x^2
/// as a series in z with polynomial coefficients in x, to the given order.
bool derivative_tangent_series_identity(unsigned order);

}  // namespace tanlaw
