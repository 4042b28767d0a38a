#include "tanlaw/matrix_spectra.hpp"

#include "tanlaw/combinatorics.hpp"
#include "tanlaw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace tanlaw {

namespace {

using cd = std::complex<double>;

void require_size(int n) {
    if (n < 1) throw ArgumentError("matrix size must be >= 1, got " + std::to_string(n));
}

void require_nondegenerate(const StructuredMatrixSpec& spec) {
    require_size(spec.n);
    if (spec.b() == 0.0) throw ArgumentError("b = 0 is the degenerate family; use anticommutator_spectrum");
}

double cot(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

Eigen::MatrixXcd build(const StructuredMatrixSpec& spec) {
    require_size(spec.n);
    return build_structured<cd>(spec.n, cd(spec.c), spec.w);
}

GaussMatrix build_exact(int n, const ExactRational& c, const GaussRational& w) {
    require_size(n);
    return build_structured<GaussRational>(n, GaussRational(c), w);
}

double spec_angle(const StructuredMatrixSpec& spec) {
    if (spec.b() == 0.0) throw ArgumentError("spec_angle: b = 0");
    return std::atan2(std::abs(spec.b()), spec.a());
}

double charpoly(const StructuredMatrixSpec& spec, double lambda) {
    require_nondegenerate(spec);
    const cd w = spec.w;
    const cd wb = std::conj(w);
    const double x = lambda - spec.c;
    const cd v = (w * std::pow(x + wb, spec.n) - wb * std::pow(x + w, spec.n)) / (w - wb);
    return v.real();
}

double charpoly_recurrence(const StructuredMatrixSpec& spec, double lambda) {
    require_nondegenerate(spec);
    const double x = lambda - spec.c;
    const double a = spec.a();
    const double abs2 = std::norm(spec.w);
    // (x + w)(x + conj w) = x^2 + 2ax + |w|^2
    const double p = 2 * x + 2 * a;
    const double q = x * x + 2 * a * x + abs2;
    double prev = 1.0;
    double cur = x;
    for (int k = 2; k <= spec.n; ++k) {
        const double next = p * cur - q * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Spectrum closed_form_eigenvalues(const StructuredMatrixSpec& spec) {
    require_size(spec.n);
    const int n = spec.n;
    std::vector<double> ev;
    ev.reserve(n);
    if (spec.b() == 0.0) {
        // a (J - I) + c
        ev.assign(n - 1, -spec.a() + spec.c);
        ev.push_back(spec.a() * (n - 1) + spec.c);
    } else {
        // conj(A) has the same spectrum, so b < 0 reduces to |b|
        const double b = std::abs(spec.b());
        const double alpha = spec_angle(spec);
        for (int k = 0; k < n; ++k)
            ev.push_back(b * cot((alpha + k * std::numbers::pi) / n) - spec.a() + spec.c);
    }
    std::sort(ev.begin(), ev.end());
    return {std::move(ev)};
}

Spectrum hermitian_eigenvalues(const Eigen::MatrixXcd& input, double rel_tol) {
    if (input.rows() != input.cols()) throw ArgumentError("hermitian_eigenvalues: matrix is not square");
    const Eigen::Index n = input.rows();
    const double norm = input.norm();
    if ((input - input.adjoint()).norm() > 1e-10 * std::max(norm, 1.0))
        throw ArgumentError("hermitian_eigenvalues: matrix is not Hermitian");

    Eigen::MatrixXcd h = (input + input.adjoint()) / 2.0;
    const double target = rel_tol * norm;
    auto off_norm = [&] {
        double s = 0;
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index i = 0; i < n; ++i)
                if (i != j) s += std::norm(h(i, j));
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 64;
    int sweep = 0;
    while (off_norm() > target) {
        if (++sweep > kMaxSweeps) throw NumericError("hermitian_eigenvalues: no convergence after 64 sweeps");
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const cd hpq = h(p, q);
                const double mag = std::abs(hpq);
                if (mag == 0.0) continue;
                const cd phase = hpq / mag;  // e^{i phi}
                const double tau = (h(q, q).real() - h(p, p).real()) / (2 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = t * c;
                const cd ph_conj = std::conj(phase);

                // H <- H U, then H <- U^H H
                Eigen::VectorXcd col_p = h.col(p);
                h.col(p) = c * col_p - s * ph_conj * h.col(q);
                h.col(q) = s * col_p + c * ph_conj * h.col(q);
                Eigen::RowVectorXcd row_p = h.row(p);
                h.row(p) = c * row_p - s * phase * h.row(q);
                h.row(q) = s * row_p + c * phase * h.row(q);
                h(p, q) = h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
            }
        }
    }
    std::vector<double> ev(n);
    for (Eigen::Index i = 0; i < n; ++i) ev[i] = h(i, i).real();
    std::sort(ev.begin(), ev.end());
    return {std::move(ev)};
}

double trace_power(const StructuredMatrixSpec& spec, int r) {
    if (r < 1) throw ArgumentError("trace_power: r must be >= 1");
    double s = 0;
    for (double l : closed_form_eigenvalues(spec).eigenvalues) s += std::pow(l, r);
    return s;
}

double trace_power_dense(const StructuredMatrixSpec& spec, int r) {
    if (r < 1) throw ArgumentError("trace_power_dense: r must be >= 1");
    if (spec.n > 64) throw ResourceError("trace_power_dense: n > 64");
    const Eigen::MatrixXcd a = build(spec);
    Eigen::MatrixXcd p = a;
    for (int i = 1; i < r; ++i) p = (p * a).eval();
    return p.trace().real();
}

std::vector<double> newton_power_sums(const StructuredMatrixSpec& spec, int r_max) {
    require_nondegenerate(spec);
    if (r_max < 1) throw ArgumentError("newton_power_sums: r_max must be >= 1");
    const int n = spec.n;
    const cd w = spec.w;
    const cd wb = std::conj(w);

    // chi(x) = sum_j x^j C(n,j) [w wb^{n-j} - wb w^{n-j}]/(w - wb) with x = lambda - c;
    // e[i] is the coefficient of x^{n-i}
    std::vector<double> e(n + 1);
    for (int i = 0; i <= n; ++i) {
        const cd v = (w * std::pow(wb, i) - wb * std::pow(w, i)) / (w - wb);
        e[i] = to_double(ExactRational(binomial(n, n - i))) * v.real();
    }
    std::vector<double> s(r_max + 1, 0.0);
    s[0] = n;
    for (int r = 1; r <= r_max; ++r) {
        double acc = 0;
        for (int i = 1; i <= std::min(r - 1, n); ++i) acc += e[i] * s[r - i];
        if (r <= n) acc += r * e[r];
        s[r] = -acc;
    }
    if (spec.c != 0.0) {
        std::vector<double> shifted(r_max + 1, 0.0);
        for (int r = 0; r <= r_max; ++r)
            for (int j = 0; j <= r; ++j)
                shifted[r] += to_double(ExactRational(binomial(r, j))) * std::pow(spec.c, r - j) * s[j];
        s = std::move(shifted);
    }
    return {s.begin() + 1, s.end()};
}

double IdentityCheck::absdiff() const { return std::abs(direct - closed); }
double IdentityCheck::reldiff() const { return absdiff() / std::max(std::abs(closed), 1.0); }

IdentityCheck cotangent_sum_2m(int n, int m) {
    if (n < 1 || m < 1) throw ArgumentError("cotangent_sum_2m: need n >= 1 and m >= 1");
    IdentityCheck out;
    for (int k = 0; k < n; ++k)
        out.direct += std::pow(cot((2 * k + 1) * std::numbers::pi / (2 * n)), 2 * m);

    const auto tangents = tangent_numbers(m);
    ExactRational acc = 0;
    for (int k = 1; k <= m; ++k)
        acc += ExactRational(ipow(ExactInt(n), 2 * k) * arctangent_number(2 * m, 2 * k) * tangents[k - 1]);
    acc /= ExactRational(factorial(2 * m - 1));
    out.closed_exact = acc + ExactRational(m % 2 == 0 ? n : -n);
    out.closed = to_double(out.closed_exact);
    out.leading = to_double(ExactRational(ipow(ExactInt(n), 2 * m) * tangents[m - 1]) /
                            ExactRational(factorial(2 * m - 1)));
    return out;
}

IdentityCheck cotangent_sum_shifted(int n, int m) {
    if (n < 1 || m < 1) throw ArgumentError("cotangent_sum_shifted: need n >= 1 and m >= 1");
    IdentityCheck out;
    for (int k = 0; k < n; ++k)
        out.direct += std::pow(cot((4 * k - 1) * std::numbers::pi / (4 * n)), m);

    const auto zigzag = zigzag_numbers(m);
    const ExactInt minus_2n = -2 * n;
    ExactRational acc = 0;
    for (int k = 1; k <= m; ++k)
        acc += ExactRational(ipow(minus_2n, k) * arctangent_number(m, k) * zigzag[k - 1]);
    acc /= ExactRational(2 * factorial(m - 1));
    if (m % 2 == 0) acc += ExactRational((m / 2) % 2 == 0 ? n : -n);
    out.closed_exact = acc;
    out.closed = to_double(acc);
    out.leading = to_double(ExactRational(ipow(minus_2n, m) * zigzag[m - 1]) /
                            ExactRational(2 * factorial(m - 1)));
    return out;
}

Spectrum anticommutator_spectrum(int n) {
    require_size(n);
    std::vector<double> ev(n - 1, -1.0);
    ev.push_back(n - 1.0);
    std::sort(ev.begin(), ev.end());
    return {std::move(ev)};
}

double anticommutator_cumulant(int n, int r) {
    require_size(n);
    if (r < 1) throw ArgumentError("anticommutator_cumulant: r must be >= 1");
    const double sign = r % 2 == 0 ? 1.0 : -1.0;
    return (sign * (n - 1) + std::pow(n - 1.0, r)) / std::pow(static_cast<double>(n), r);
}

TraceMethodConstants trace_method_constants(int n, int k) {
    if (n < 2 || k < 1) throw ArgumentError("trace_method_constants: need n >= 2 and k >= 1");
    const double pi = std::numbers::pi;
    const double nd = n;
    const double four_k = std::pow(4.0, k);

    const double tr_tan = trace_power({n, 0.0, {0.0, 1.0}}, 2 * k);
    const double tr_zig = trace_power({n, 0.0, {1.0, 1.0}}, k + 1);
    const double scaled = tr_tan / std::pow(nd, 2 * k);

    TraceMethodConstants out{};
    out.t2k1 = to_double(ExactRational(factorial(2 * k - 1))) * scaled;
    out.zeta2k = std::pow(pi, 2 * k) * scaled / (2 * (four_k - 1));
    out.b2k = to_double(ExactRational(factorial(2 * k))) * scaled / ((k % 2 == 1 ? 1.0 : -1.0) * four_k * (four_k - 1));
    out.e_k = to_double(ExactRational(factorial(k))) * tr_zig / (std::pow(2.0, k) * std::pow(nd, k + 1));
    return out;
}

}  // namespace tanlaw
