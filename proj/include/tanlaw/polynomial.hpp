#pragma once

#include "tanlaw/errors.hpp"
#include "tanlaw/exact.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tanlaw {

/// Dense univariate polynomial over a ring R; coefficient i multiplies x^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
template <class R>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<R> c) : c_(c) { trim(); }
    explicit Polynomial(std::vector<R> c) : c_(std::move(c)) { trim(); }
    Polynomial(int constant) {  // NOLINT(google-explicit-constructor): lets Series<Polynomial> use 0/1 literals
        if (constant != 0) c_.push_back(R(constant));
    }

    static Polynomial monomial(unsigned degree, R coeff = R(1)) {
        std::vector<R> c(degree + 1, R(0));
        c[degree] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i (zero beyond the degree).
    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
    const std::vector<R>& coefficients() const { return c_; }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const R& s, const Polynomial& p) {
        std::vector<R> out(p.c_);
        for (auto& x : out) x = s * x;
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = R(static_cast<long>(i)) * c_[i];
        return Polynomial(std::move(out));
    }

    /// Horner evaluation at a point of any type that R converts into.
    template <class T>
    T operator()(const T& x) const {
        T acc = T(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
    }

    std::vector<R> c_;
};

using IntPolynomial = Polynomial<ExactInt>;
using RationalPolynomial = Polynomial<ExactRational>;

/// Quotient and remainder of division by a monic polynomial; stays in R.
template <class R>
std::pair<Polynomial<R>, Polynomial<R>> divmod_monic(const Polynomial<R>& num, const Polynomial<R>& den) {
    if (den.is_zero() || den.coeff(den.degree()) != R(1))
        throw ArgumentError("divmod_monic: divisor must be monic");
    std::vector<R> rem = num.coefficients();
    const int dd = den.degree();
    if (num.degree() < dd) return {Polynomial<R>(), num};
    std::vector<R> quot(num.degree() - dd + 1, R(0));
    for (int k = num.degree(); k >= dd; --k) {
        R lead = rem[k];
        if (lead == R(0)) continue;
        quot[k - dd] = lead;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= lead * den.coeff(j);
    }
    rem.resize(dd);
    return {Polynomial<R>(std::move(quot)), Polynomial<R>(std::move(rem))};
}

template <class R>
std::string Polynomial<R>::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == R(0)) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i];
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

}  // namespace tanlaw
