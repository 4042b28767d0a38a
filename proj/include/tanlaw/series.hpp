#pragma once

#include "tanlaw/errors.hpp"
#include "tanlaw/exact.hpp"
#include "tanlaw/polynomial.hpp"

#include <complex>
#include <vector>

namespace tanlaw {

inline constexpr unsigned kDefaultSeriesOrder = 32;

/// Inverse of a unit of the coefficient ring (used for the constant term of a reciprocal).
inline ExactRational unit_inverse(const ExactRational& a) {
    if (a == 0) throw ArgumentError("series reciprocal: constant term is zero");
    return ExactRational(1) / a;
}
inline double unit_inverse(double a) {
    if (a == 0.0) throw ArgumentError("series reciprocal: constant term is zero");
    return 1.0 / a;
}
inline std::complex<double> unit_inverse(const std::complex<double>& a) {
    if (a == 0.0) throw ArgumentError("series reciprocal: constant term is zero");
    return 1.0 / a;
}
template <class R>
Polynomial<R> unit_inverse(const Polynomial<R>& a) {
    if (a.degree() != 0) throw ArgumentError("series reciprocal: constant term is not a unit");
    return Polynomial<R>{unit_inverse(a.coeff(0))};
}

/// Truncated power series sum_{n<=order} c_n z^n over a ring T.
/// Every operation discards coefficients above `order`; mixed-order operands
/// truncate to the smaller order.
template <class T>
class Series {
public:
    explicit Series(unsigned order = kDefaultSeriesOrder) : c_(order + 1, T(0)) {}
    Series(std::vector<T> coeffs, unsigned order) : c_(order + 1, T(0)) {
        for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) c_[i] = std::move(coeffs[i]);
    }

    static Series constant(const T& a, unsigned order) {
        Series s(order);
        s.c_[0] = a;
        return s;
    }
    /// The series z.
    static Series variable(unsigned order) {
        Series s(order);
        if (order >= 1) s.c_[1] = T(1);
        return s;
    }

    unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
    const T& operator[](std::size_t n) const { return c_[n]; }
    T& operator[](std::size_t n) { return c_[n]; }
    const std::vector<T>& coefficients() const { return c_; }

    friend Series operator+(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (unsigned i = 0; i <= out.order(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
        return out;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (unsigned i = 0; i <= out.order(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
        return out;
    }
    friend Series operator*(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        const unsigned n = out.order();
        for (unsigned i = 0; i <= n; ++i) {
            if (a.c_[i] == T(0)) continue;
            for (unsigned j = 0; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }
    friend Series operator*(const T& s, const Series& a) {
        Series out(a.order());
        for (unsigned i = 0; i <= a.order(); ++i) out.c_[i] = s * a.c_[i];
        return out;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

    /// k-th power by repeated truncated multiplication.
    Series pow(unsigned k) const {
        Series out = constant(T(1), order());
        for (unsigned i = 0; i < k; ++i) out = out * *this;
        return out;
    }

    /// 1/a for a series whose constant term is a unit.
    Series reciprocal() const {
        Series out(order());
        const T inv0 = unit_inverse(c_[0]);
        out.c_[0] = inv0;
        for (unsigned n = 1; n <= order(); ++n) {
            T acc = T(0);
            for (unsigned j = 1; j <= n; ++j) acc += c_[j] * out.c_[n - j];
            out.c_[n] = T(0) - inv0 * acc;
        }
        return out;
    }

    /// this(inner(z)); inner must have zero constant term.
    Series compose(const Series& inner) const {
        if (!(inner.c_[0] == T(0))) throw ArgumentError("series compose: inner series has nonzero constant term");
        const unsigned n = std::min(order(), inner.order());
        Series out = constant(c_[n], n);
        Series in = inner;
        in.c_.resize(n + 1);
        for (unsigned k = n; k-- > 0;) out = out * in + constant(c_[k], n);
        return out;
    }

    /// Term-by-term integral with zero constant; the top coefficient is dropped.
    Series integral() const {
        Series out(order());
        for (unsigned n = 1; n <= order(); ++n) out.c_[n] = c_[n - 1] / T(static_cast<int>(n));
        return out;
    }

private:
    std::vector<T> c_;
};

using RationalSeries = Series<ExactRational>;

/// exp-type helpers over the rationals.
RationalSeries sin_series(unsigned order = kDefaultSeriesOrder);
RationalSeries cos_series(unsigned order = kDefaultSeriesOrder);
/// tan z = sin z / cos z, by exact series division.
RationalSeries tan_series(unsigned order = kDefaultSeriesOrder);
/// arctan z = integral of 1/(1+z^2).
RationalSeries arctan_series(unsigned order = kDefaultSeriesOrder);
/// atanh z = integral of 1/(1-z^2).
RationalSeries atanh_series(unsigned order = kDefaultSeriesOrder);

}  // namespace tanlaw
