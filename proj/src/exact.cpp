#include "tanlaw/exact.hpp"

#include "tanlaw/errors.hpp"

namespace tanlaw {

ExactRational make_rational(const ExactInt& p, const ExactInt& q) {
    if (q == 0) throw ArgumentError("make_rational: zero denominator");
    ExactRational r(p, q);
    r.canonicalize();
    return r;
}

ExactInt factorial(unsigned n) {
    ExactInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

ExactInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    ExactInt c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

ExactInt ipow(const ExactInt& base, unsigned e) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

ExactRational ipow(const ExactRational& base, unsigned e) {
    return make_rational(ipow(ExactInt(base.get_num()), e), ipow(ExactInt(base.get_den()), e));
}

std::string to_string(const ExactRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const ExactInt& z) { return z.get_str(); }

double to_double(const ExactRational& q) { return mpq_get_d(q.get_mpq_t()); }

bool exact_sqrt(const ExactRational& q, ExactRational& root) {
    if (q < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return false;
    ExactInt n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    root = make_rational(n, d);
    return true;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    ExactRational norm = o.re_ * o.re_ + o.im_ * o.im_;
    if (norm == 0) throw ArgumentError("GaussRational: division by zero");
    ExactRational r = (re_ * o.re_ + im_ * o.im_) / norm;
    ExactRational i = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& g) {
    os << to_string(g.re_);
    if (g.im_ != 0) os << (g.im_ < 0 ? "-" : "+") << to_string(ExactRational(abs(g.im_))) << "i";
    return os;
}

}  // namespace tanlaw
