#pragma once

// Exact arithmetic: arbitrary-precision integers and rationals (GMP), and
// Gaussian rationals usable as an Eigen scalar.

#include <gmpxx.h>

#include <Eigen/Core>

#include <complex>
#include <ostream>
#include <string>

namespace tanlaw {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// Builds p/q in canonical form (gcd 1, positive denominator). Throws on q == 0.
ExactRational make_rational(const ExactInt& p, const ExactInt& q);

ExactInt factorial(unsigned n);
ExactInt binomial(unsigned n, unsigned k);
ExactInt ipow(const ExactInt& base, unsigned e);
ExactRational ipow(const ExactRational& base, unsigned e);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const ExactRational& q);
std::string to_string(const ExactInt& z);

double to_double(const ExactRational& q);

/// Exact rational square root when num and den are perfect squares.
bool exact_sqrt(const ExactRational& q, ExactRational& root);

/// Element of Q(i). The oracle matrices of the quadratic-form check have such entries.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor): Eigen needs Scalar(int)
    GaussRational(ExactRational re, ExactRational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    const ExactRational& real() const { return re_; }
    const ExactRational& imag() const { return im_; }

    bool is_real() const { return im_ == 0; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        ExactRational r = re_ * o.re_ - im_ * o.im_;
        ExactRational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator-(const GaussRational& a) {
        return GaussRational(ExactRational(-a.re_), ExactRational(-a.im_));
    }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    friend GaussRational conj(const GaussRational& a) {
        return GaussRational(a.re_, ExactRational(-a.im_));
    }

    std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

    friend std::ostream& operator<<(std::ostream& os, const GaussRational& g);

private:
    ExactRational re_{0};
    ExactRational im_{0};
};

inline const GaussRational kImagUnit{ExactRational(0), ExactRational(1)};

}  // namespace tanlaw

namespace Eigen {

template <>
struct NumTraits<tanlaw::GaussRational> : GenericNumTraits<tanlaw::GaussRational> {
    using Real = tanlaw::GaussRational;
    using NonInteger = tanlaw::GaussRational;
    using Nested = tanlaw::GaussRational;
    using Literal = tanlaw::GaussRational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 64
    };
};

}  // namespace Eigen
