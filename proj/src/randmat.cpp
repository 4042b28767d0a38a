#include "tanlaw/randmat.hpp"

#include "tanlaw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

namespace tanlaw {

namespace {

using cd = std::complex<double>;

std::uint64_t splitmix(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Runs body(i) for i in [0, count) on up to `threads` threads; each index is
/// handled exactly once, so results keyed by index do not depend on scheduling.
void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    const int t = std::clamp(threads, 1, std::max(count, 1));
    if (t == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int j = 0; j < t; ++j)
        pool.emplace_back([&, j] {
            for (int i = j; i < count; i += t) body(i);
        });
    for (auto& th : pool) th.join();
}

void require_config(const SimConfig& c) {
    if (c.N < 1 || c.M < 1 || c.samples < 1 || c.bins < 1)
        throw ArgumentError("simulation sizes, samples and bins must be >= 1");
    if (c.N > 1024) throw ResourceError("simulation N is capped at 1024");
}

void require_square(const Eigen::MatrixXcd& m, const char* what) {
    if (m.rows() != m.cols()) throw ArgumentError(std::string(what) + " must be square");
}

Eigen::VectorXd spectrum_vector(const Eigen::MatrixXcd& h) {
    const auto s = hermitian_eigenvalues(h);
    return Eigen::Map<const Eigen::VectorXd>(s.eigenvalues.data(), s.size());
}

Eigen::MatrixXcd wishart_from_weights(const Eigen::VectorXd& weights_a, const Eigen::VectorXd& weights_p, int m,
                                      Stream& s) {
    const int n = static_cast<int>(weights_p.size());
    const Eigen::MatrixXcd y = sample_complex_gaussian(n, n * m, s);
    Eigen::VectorXd w(n * m);
    for (int k = 0; k < m; ++k) w.segment(k * n, n) = weights_a(k) * weights_p;
    // Hermitian rank updates, positive and negative weights separately
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (double sign : {1.0, -1.0}) {
        std::vector<Eigen::Index> cols;
        for (Eigen::Index j = 0; j < w.size(); ++j)
            if (sign * w(j) > 0) cols.push_back(j);
        if (cols.empty()) continue;
        Eigen::MatrixXcd scaled(n, static_cast<Eigen::Index>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) scaled.col(c) = std::sqrt(sign * w(cols[c])) * y.col(cols[c]);
        out.selfadjointView<Eigen::Lower>().rankUpdate(scaled, sign / m);
    }
    out.triangularView<Eigen::StrictlyUpper>() = out.adjoint();
    return out;
}

}  // namespace

Stream::Stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed;
    const std::uint64_t a = splitmix(x);
    x = index ^ 0x5851f42d4c957f2dULL;
    state_ = a ^ splitmix(x);
}

std::uint64_t Stream::next_u64() { return splitmix(state_); }

double Stream::uniform() { return ((next_u64() >> 11) + 0.5) * 0x1.0p-53; }

double Stream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, r2;
    do {
        u = 2 * uniform() - 1;
        v = 2 * uniform() - 1;
        r2 = u * u + v * v;
    } while (r2 >= 1 || r2 == 0);
    const double f = std::sqrt(-2 * std::log(r2) / r2);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

Eigen::MatrixXcd sample_gue(int n, Stream& s) {
    if (n < 1) throw ArgumentError("sample_gue: n must be >= 1");
    const double sd_diag = std::sqrt(1.0 / n);
    const double sd_off = std::sqrt(0.5 / n);
    Eigen::MatrixXcd x(n, n);
    for (int j = 0; j < n; ++j) {
        x(j, j) = sd_diag * s.normal();
        for (int i = 0; i < j; ++i) {
            const double re = sd_off * s.normal();
            const double im = sd_off * s.normal();
            x(i, j) = cd(re, im);
            x(j, i) = cd(re, -im);
        }
    }
    return x;
}

Eigen::MatrixXcd sample_complex_gaussian(int rows, int cols, Stream& s) {
    if (rows < 1 || cols < 1) throw ArgumentError("sample_complex_gaussian: sizes must be >= 1");
    const double sd = std::sqrt(0.5 / rows);
    Eigen::MatrixXcd x(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
            const double re = sd * s.normal();
            x(i, j) = cd(re, sd * s.normal());
        }
    return x;
}

double EmpiricalSpectrum::moment(int k) const {
    if (eigenvalues.empty()) throw ArgumentError("moment: empty spectrum");
    double acc = 0;
    for (double l : eigenvalues) acc += std::pow(l, k);
    return acc / eigenvalues.size();
}

double EmpiricalSpectrum::moment_stderr(int k) const {
    const int s = samples();
    if (s < 2) return 0;
    std::vector<double> per(s, 0.0);
    for (int i = 0; i < s; ++i) {
        for (std::size_t j = boundaries[i]; j < boundaries[i + 1]; ++j) per[i] += std::pow(eigenvalues[j], k);
        per[i] /= static_cast<double>(boundaries[i + 1] - boundaries[i]);
    }
    double mean = 0;
    for (double v : per) mean += v;
    mean /= s;
    double var = 0;
    for (double v : per) var += (v - mean) * (v - mean);
    return std::sqrt(var / (s - 1) / s);
}

Eigen::MatrixXcd wishart_sample(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& p, Stream& s,
                                WishartMethod method) {
    require_square(a, "A");
    require_square(p, "P");
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(p.rows());
    if (method == WishartMethod::spectral) return wishart_from_weights(spectrum_vector(a), spectrum_vector(p), m, s);

    Eigen::MatrixXcd x = sample_complex_gaussian(n, n * m, s);
    Eigen::MatrixXcd xp(n, n * m);
    for (int i = 0; i < m; ++i) xp.middleCols(i * n, n).noalias() = x.middleCols(i * n, n) * p;
    // blocks are contiguous, so mixing them by A is one product of an (n*n) x m view
    Eigen::MatrixXcd b(n, n * m);
    Eigen::Map<Eigen::MatrixXcd>(b.data(), n * n, m).noalias() =
        Eigen::Map<const Eigen::MatrixXcd>(xp.data(), n * n, m) * a;
    Eigen::MatrixXcd out = b * x.adjoint() / static_cast<double>(m);
    return (out + out.adjoint()) / 2.0;
}

EmpiricalSpectrum simulate_wishart_model(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& p,
                                         const SimConfig& config, WishartMethod method) {
    require_config(config);
    require_square(a, "A");
    require_square(p, "P");
    if (a.rows() != config.M || p.rows() != config.N)
        throw ArgumentError("simulate_wishart_model: A must be M x M and P must be N x N");

    Eigen::VectorXd wa, wp;
    if (method == WishartMethod::spectral) {
        wa = spectrum_vector(a);
        wp = spectrum_vector(p);
    }
    std::vector<std::vector<double>> per(config.samples);
    parallel_for(config.samples, config.threads, [&](int i) {
        Stream s(config.seed, static_cast<std::uint64_t>(i));
        const Eigen::MatrixXcd w = method == WishartMethod::spectral
                                       ? wishart_from_weights(wa, wp, config.M, s)
                                       : wishart_sample(a, p, s, method);
        per[i] = hermitian_eigenvalues(w).eigenvalues;
    });
    EmpiricalSpectrum out;
    out.boundaries.push_back(0);
    for (const auto& v : per) {
        out.eigenvalues.insert(out.eigenvalues.end(), v.begin(), v.end());
        out.boundaries.push_back(out.eigenvalues.size());
    }
    return out;
}

namespace {

MomentEstimate summarize(int m, const std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    double mean = 0;
    for (double x : v) mean += x;
    mean /= n;
    double var = 0;
    for (double x : v) var += (x - mean) * (x - mean);
    const double se = v.size() > 1 ? std::sqrt(var / (n - 1) / n) : 0.0;
    return {m, mean, se};
}

}  // namespace

std::vector<MomentEstimate> simulate_sandwich_model(const Eigen::MatrixXcd& d, int m_max, const SimConfig& config) {
    require_square(d, "D");
    if (m_max < 1) throw ArgumentError("simulate_sandwich_model: m_max must be >= 1");
    if (config.samples < 1) throw ArgumentError("simulate_sandwich_model: samples must be >= 1");
    const int n = static_cast<int>(d.rows());
    std::vector<std::vector<double>> traces(m_max, std::vector<double>(config.samples));
    parallel_for(config.samples, config.threads, [&](int i) {
        Stream s(config.seed, static_cast<std::uint64_t>(i));
        const Eigen::MatrixXcd x = sample_gue(n, s);
        const Eigen::MatrixXcd y = x * d * x;
        Eigen::MatrixXcd power = y;
        for (int m = 1; m <= m_max; ++m) {
            traces[m - 1][i] = power.trace().real();
            if (m < m_max) power = (power * y).eval();
        }
    });
    std::vector<MomentEstimate> out;
    for (int m = 1; m <= m_max; ++m) out.push_back(summarize(m, traces[m - 1]));
    return out;
}

MomentEstimate monte_carlo_pairing_moment(const Eigen::MatrixXcd& d, const std::vector<int>& q,
                                          const SimConfig& config) {
    require_square(d, "D");
    if (config.samples < 1) throw ArgumentError("monte_carlo_pairing_moment: samples must be >= 1");
    const int n = static_cast<int>(d.rows());
    std::vector<Eigen::MatrixXcd> dq;
    for (int e : q) {
        if (e < 0) throw ArgumentError("monte_carlo_pairing_moment: exponents must be >= 0");
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n);
        for (int k = 0; k < e; ++k) p = (p * d).eval();
        dq.push_back(std::move(p));
    }
    std::vector<double> v(config.samples);
    parallel_for(config.samples, config.threads, [&](int i) {
        Stream s(config.seed, static_cast<std::uint64_t>(i));
        const Eigen::MatrixXcd x = sample_gue(n, s);
        Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(n, n);
        for (const auto& f : dq) prod = (prod * x * f).eval();
        v[i] = prod.trace().real();
    });
    return summarize(static_cast<int>(q.size()), v);
}

std::vector<std::vector<int>> Permutation::cycles() const {
    const int m = static_cast<int>(images.size());
    std::vector<bool> seen(m + 1, false);
    std::vector<std::vector<int>> out;
    for (int start = 1; start <= m; ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        for (int i = start; !seen[i]; i = (*this)(i)) {
            seen[i] = true;
            cyc.push_back(i);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<Permutation> pair_partitions(int m) {
    std::vector<Permutation> out;
    if (m <= 0 || m % 2 != 0) return out;
    std::vector<int> img(m, 0);
    std::function<void()> rec = [&] {
        int first = -1;
        for (int i = 0; i < m; ++i)
            if (img[i] == 0) {
                first = i;
                break;
            }
        if (first == -1) {
            out.push_back({img});
            return;
        }
        for (int j = first + 1; j < m; ++j) {
            if (img[j] != 0) continue;
            img[first] = j + 1;
            img[j] = first + 1;
            rec();
            img[first] = img[j] = 0;
        }
    };
    rec();
    return out;
}

double pairing_expected_moment(const Eigen::MatrixXcd& d, const std::vector<int>& q) {
    require_square(d, "D");
    const int m = static_cast<int>(q.size());
    if (m > 10) throw ResourceError("pairing_expected_moment: m is capped at 10");
    if (m == 0 || m % 2 != 0) return 0.0;
    const int n = static_cast<int>(d.rows());

    std::vector<Eigen::MatrixXcd> dq;
    for (int e : q) {
        if (e < 0) throw ArgumentError("pairing_expected_moment: exponents must be >= 0");
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n);
        for (int k = 0; k < e; ++k) p = (p * d).eval();
        dq.push_back(std::move(p));
    }
    cd total = 0;
    for (const auto& pi : pair_partitions(m)) {
        Permutation sigma{std::vector<int>(m)};
        for (int i = 1; i <= m; ++i) sigma.images[i - 1] = pi(i % m + 1);
        cd term = 1;
        for (const auto& cyc : sigma.cycles()) {
            Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(n, n);
            for (int i : cyc) prod = (prod * dq[i - 1]).eval();
            term *= prod.trace();
        }
        total += term;
    }
    return total.real() / std::pow(static_cast<double>(n), m / 2.0);
}

std::vector<HistogramBin> histogram(const std::vector<double>& data, int bins, double lo, double hi) {
    if (data.empty()) throw ArgumentError("histogram: empty data");
    if (bins < 1) throw ArgumentError("histogram: bins must be >= 1");
    if (lo == hi) {
        const auto [mn, mx] = std::minmax_element(data.begin(), data.end());
        lo = *mn;
        hi = *mx;
        if (lo == hi) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
    if (hi < lo) throw ArgumentError("histogram: empty range");
    const double width = (hi - lo) / bins;
    std::vector<HistogramBin> out(bins);
    for (int i = 0; i < bins; ++i) out[i] = {lo + i * width, lo + (i + 1) * width, 0, 0.0};
    long inside = 0;
    for (double v : data) {
        if (v < lo || v > hi) continue;
        const int i = std::min(bins - 1, static_cast<int>((v - lo) / width));
        ++out[i].count;
        ++inside;
    }
    for (auto& b : out) b.density = inside ? b.count / (inside * width) : 0.0;
    return out;
}

}  // namespace tanlaw
