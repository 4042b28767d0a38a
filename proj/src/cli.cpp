#include "tanlaw/cli.hpp"

#include "tanlaw/combinatorics.hpp"
#include "tanlaw/errors.hpp"
#include "tanlaw/limit_laws.hpp"
#include "tanlaw/matrix_spectra.hpp"
#include "tanlaw/nc_partitions.hpp"
#include "tanlaw/randmat.hpp"
#include "tanlaw/spectral_analysis.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tanlaw::cli {

namespace {

using json = nlohmann::json;
using cd = std::complex<double>;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Law selection shared by several subcommands.
struct LawOptions {
    std::string law = "tangent";
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> alpha;

    void attach(CLI::App* app, bool with_law = true) {
        if (with_law) app->add_option("--law", law, "tangent | zigzag | general")->check(CLI::IsMember({"tangent", "zigzag", "general"}));
        app->add_option("--a", a, "real part of the off-diagonal entry");
        app->add_option("--b", b, "imaginary part of the off-diagonal entry");
        app->add_option("--alpha", alpha, "angle arccot(a/b) in (0, pi)");
    }
};

/// Small-denominator rational p/q with |x - p/q| < 1e-12, if any.
std::optional<ExactRational> recover_ratio(double x) {
    if (!std::isfinite(x)) return std::nullopt;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double r = x;
    for (int i = 0; i < 40; ++i) {
        const double fl = std::floor(r);
        if (std::abs(fl) > 1e9) break;
        const long long c = static_cast<long long>(fl);
        const long long p2 = c * p1 + p0;
        const long long q2 = c * q1 + q0;
        if (q2 > 10000) break;
        if (std::abs(x - static_cast<double>(p2) / q2) < 1e-12) return make_rational(static_cast<long>(p2), static_cast<long>(q2));
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (r - fl == 0) break;
        r = 1 / (r - fl);
    }
    return std::nullopt;
}

LawParams resolve_params(const LawOptions& o, std::ostream& err) {
    if (o.alpha) {
        if (o.a || o.b) throw ArgumentError("--alpha excludes --a/--b");
        return LawParams::from_angle(*o.alpha);
    }
    if (o.a || o.b) {
        if (o.law != "general") throw ArgumentError("--a/--b require --law general");
        if (!o.a || !o.b) throw ArgumentError("--a and --b must be given together");
        double a = *o.a, b = *o.b;
        const double norm2 = a * a + b * b;
        if (std::abs(norm2 - 1) > 1e-6) throw ArgumentError("a^2 + b^2 must equal 1 (within 1e-6)");
        if (std::abs(norm2 - 1) > 1e-15) {
            const double s = std::sqrt(norm2);
            a /= s;
            b /= s;
            err << "warning: renormalized (a, b) to (" << fmt(a) << ", " << fmt(b) << ")\n";
        }
        if (!(b > 0)) throw ArgumentError("b must be positive");
        auto ratio = recover_ratio(a / b);
        if (ratio) return LawParams::from_ratio(*ratio);
        return LawParams::from_ab(a, b);
    }
    if (o.law == "general") throw ArgumentError("--law general needs --a/--b or --alpha");
    if (o.law == "zigzag") return LawParams::from_ratio(1);  // sqrt 2 times the zigzag law
    return LawParams::tangent();
}

json exact_or_null(const std::optional<ExactRational>& q) {
    return q ? json(to_string(*q)) : json(nullptr);
}

// --- seq -------------------------------------------------------------------

int cmd_seq(const std::string& kind, int n, int k, std::ostream& out) {
    if (n < 0) throw ArgumentError("--n must be >= 0");
    json rows = json::array();
    if (kind == "tangent") {
        if (n < 1) throw ArgumentError("--n must be >= 1");
        const auto t = tangent_numbers(n);
        for (int i = 1; i <= n; ++i) rows.push_back({{"index", 2 * i - 1}, {"value", to_string(t[i - 1])}});
    } else if (kind == "zigzag") {
        const auto e = zigzag_numbers(n);
        for (int i = 0; i <= n; ++i) rows.push_back({{"index", i}, {"value", to_string(e[i])}});
    } else if (kind == "bernoulli") {
        for (int i = 1; i <= n; ++i) rows.push_back({{"index", 2 * i}, {"value", to_string(bernoulli(i))}});
    } else if (kind == "arctangent" || kind == "hyperbolic-arctangent" || kind == "higher-tangent") {
        for (int j = 1; j <= n; ++j) {
            if (k > 0 && j != k) continue;
            const ExactInt v = kind == "arctangent" ? arctangent_number(n, j)
                               : kind == "higher-tangent" ? higher_tangent_number(n, j)
                                                           : hyperbolic_arctangent_number(n, j);
            rows.push_back({{"n", n}, {"k", j}, {"value", to_string(v)}});
        }
    } else if (kind == "derivative-poly") {
        rows.push_back({{"n", n}, {"poly", derivative_polynomial(n).str()}});
    } else if (kind == "tangent-poly") {
        rows.push_back({{"n", n}, {"poly", tangent_polynomial(n).str()}});
    } else if (kind == "zigzag-identity") {
        bool ok = true;
        for (int i = 1; i <= n; ++i) {
            const auto [lhs, rhs] = zigzag_sum_identity(i);
            ok = ok && lhs == rhs;
            rows.push_back({{"n", i}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}, {"equal", lhs == rhs}});
        }
        out << rows.dump(2) << "\n";
        return ok ? kExitOk : kExitConsistency;
    } else {
        throw ArgumentError("unknown sequence kind " + kind);
    }
    out << rows.dump(2) << "\n";
    return kExitOk;
}

// --- eig, cotsum ---------------------------------------------------------------

int cmd_eig(int n, double a, double b, double c, std::ostream& out) {
    const StructuredMatrixSpec spec{n, c, {a, b}};
    const Spectrum closed = closed_form_eigenvalues(spec);
    const Spectrum direct = hermitian_eigenvalues(build(spec));
    double scale = 1;
    for (double l : closed.eigenvalues) scale = std::max(scale, std::abs(l));
    bool ok = true;
    out << "k,direct,closed,absdiff\n";
    for (int i = 0; i < n; ++i) {
        const double d = std::abs(direct[i] - closed[i]);
        ok = ok && d < 1e-9 * scale;
        out << i << "," << fmt(direct[i]) << "," << fmt(closed[i]) << "," << fmt(d) << "\n";
    }
    return ok ? kExitOk : kExitConsistency;
}

int cmd_cotsum(const std::string& kind, int n_max, int m_max, std::ostream& out) {
    if (n_max < 1 || m_max < 1) throw ArgumentError("--n-max and --m-max must be >= 1");
    bool ok = true;
    out << "n,m,direct,closed,absdiff\n";
    for (int n = 1; n <= n_max; ++n)
        for (int m = 1; m <= m_max; ++m) {
            const IdentityCheck r = kind == "shifted" ? cotangent_sum_shifted(n, m) : cotangent_sum_2m(n, m);
            ok = ok && r.reldiff() < 1e-8;
            out << n << "," << m << "," << fmt(r.direct) << "," << fmt(r.closed) << "," << fmt(r.absdiff()) << "\n";
        }
    return ok ? kExitOk : kExitConsistency;
}

// --- oracle ----------------------------------------------------------------------

int cmd_oracle(int n, int r_max, const std::string& family, const std::string& w_re, const std::string& w_im,
               const std::string& diag, std::ostream& out) {
    GaussRational w;
    if (family == "tangent") w = kImagUnit;
    else if (family == "zigzag") w = GaussRational(ExactRational(1, 2), ExactRational(1, 2));
    else if (family == "anticommutator") w = GaussRational(1);
    else w = GaussRational(ExactRational(w_re), ExactRational(w_im));
    const GaussMatrix a = build_exact(n, ExactRational(diag), w);
    const auto k = quadratic_form_cumulants_oracle(a, r_max);
    const auto tr = trace_powers_exact(a, r_max);
    bool ok = true;
    json rows = json::array();
    for (int r = 1; r <= r_max; ++r) {
        const bool eq = k[r] == tr[r - 1];
        ok = ok && eq;
        auto show = [](const GaussRational& g) {
            std::ostringstream s;
            s << g;
            return s.str();
        };
        rows.push_back({{"r", r}, {"oracle", show(k[r])}, {"trace", show(tr[r - 1])}, {"equal", eq}});
    }
    out << rows.dump(2) << "\n";
    return ok ? kExitOk : kExitConsistency;
}

// --- cumulants ------------------------------------------------------------------

int cmd_cumulants(const LawOptions& lo, int r_max, const std::string& n_opt, std::ostream& out, std::ostream& err) {
    if (r_max < 1) throw ArgumentError("--rmax must be >= 1");
    json rows = json::array();
    bool ok = true;
    if (n_opt != "inf") {
        int n = 0;
        try {
            n = std::stoi(n_opt);
        } catch (const std::exception&) {
            throw ArgumentError("--n must be an integer or 'inf'");
        }
        if (n < 1) throw ArgumentError("--n must be >= 1");
        LawParams p = resolve_params(lo, err);
        cd w(p.a, p.b);
        if (lo.law == "zigzag" && !lo.a && !lo.alpha) w = cd(0.5, 0.5);
        const StructuredMatrixSpec spec{n, 0.0, w};
        const LawParams series_params{w.real(), w.imag(), std::nullopt};
        const auto series = finite_n_r_series(series_params, n, r_max);
        for (int r = 1; r <= r_max; ++r) {
            const double v = trace_power(spec, r) / std::pow(static_cast<double>(n), r);
            const bool check = std::abs(series[r - 1] - v) <= 1e-9 * std::max(1.0, std::abs(v));
            ok = ok && check;
            rows.push_back({{"r", r}, {"exact", nullptr}, {"float", v}, {"formula_checks", check}});
        }
    } else if (lo.law == "tangent" && !lo.a && !lo.alpha) {
        const auto t = tangent_law_cumulants(r_max);
        const auto general = limit_cumulants(LawParams::tangent(), r_max);
        for (int r = 1; r <= r_max; ++r) {
            const bool check = general[r].exact && *general[r].exact == *t[r].exact;
            ok = ok && check;
            rows.push_back({{"r", r}, {"exact", exact_or_null(t[r].exact)}, {"float", t[r].value}, {"formula_checks", check}});
        }
    } else if (lo.law == "zigzag" && !lo.a && !lo.alpha) {
        const auto z = zigzag_law_cumulants(r_max);
        const auto scaled = limit_cumulants(LawParams::from_ratio(1), r_max);
        for (int r = 1; r <= r_max; ++r) {
            // K_r(sqrt2 Y) = 2^{r/2} K_r(Y)
            const double expect = scaled[r].value / std::pow(2.0, r / 2.0);
            const bool check = std::abs(expect - z[r].value) <= 1e-12 * std::max(1.0, std::abs(expect));
            ok = ok && check;
            rows.push_back({{"r", r}, {"exact", exact_or_null(z[r].exact)}, {"float", z[r].value}, {"formula_checks", check}});
        }
    } else {
        const auto k = limit_cumulants(resolve_params(lo, err), r_max);
        for (const auto& e : k.entries)
            rows.push_back({{"r", e.r}, {"exact", exact_or_null(e.exact)}, {"float", e.value}, {"formula_checks", e.checks_ok}});
    }
    out << rows.dump(2) << "\n";
    return ok ? kExitOk : kExitConsistency;
}

// --- radius, levy, density --------------------------------------------------------

int cmd_radius(const LawOptions& lo, std::ostream& out, std::ostream& err) {
    const LawParams p = resolve_params(lo, err);
    const RadiusResult r = spectral_radius(p);
    const RadiusResult neg = spectral_radius_alpha(std::numbers::pi - p.alpha());
    const bool ok = r.residual < 1e-12 && std::abs(r.rho - r.rho_direct) < 1e-8;
    json j = {{"alpha", p.alpha()},   {"u", r.u},
              {"rho", r.rho},         {"rho_direct", r.rho_direct},
              {"residual", r.residual}, {"iterations", r.iterations},
              {"negative_edge", -neg.rho}};
    out << j.dump(2) << "\n";
    return ok ? kExitOk : kExitConsistency;
}

int cmd_levy(const LawOptions& lo, int k_max, std::ostream& out, std::ostream& err) {
    const LevyMeasure m = levy_atoms(resolve_params(lo, err), k_max);
    json rows = json::array();
    bool ok = true;
    for (const auto& a : m.atoms) {
        ok = ok && std::abs(a.mass_check - 1) < 1e-3;
        rows.push_back({{"k", a.k}, {"location", a.location}, {"mass", a.mass}, {"mass_check", a.mass_check}});
    }
    out << rows.dump(2) << "\n";
    return ok ? kExitOk : kExitConsistency;
}

int cmd_density(const LawOptions& lo, int points, int threads, const std::string& format, std::ostream& out,
                std::ostream& err) {
    const DensityGrid g = density_grid(resolve_params(lo, err), points, 1e-10, threads);
    if (format == "json") {
        json pts = json::array();
        for (const auto& p : g.points) pts.push_back({{"x_param", p.x_param}, {"psi", p.psi}, {"f", p.f}});
        out << json{{"mass", g.mass}, {"support_edges", {g.support_edges.first, g.support_edges.second}}, {"points", pts}}
                   .dump(2)
            << "\n";
    } else {
        out << "x_param,psi,f\n";
        for (const auto& p : g.points) out << fmt(p.x_param) << "," << fmt(p.psi) << "," << fmt(p.f) << "\n";
    }
    err << "mass=" << fmt(g.mass) << "\n";
    return std::abs(g.mass - 1) < 1e-5 ? kExitOk : kExitConsistency;
}

// --- simulate ----------------------------------------------------------------------

int cmd_simulate(const std::string& model, SimConfig cfg, const LawOptions& lo, int moments, const std::string& format,
                 std::ostream& out, std::ostream& err) {
    if (cfg.N < 1 || cfg.M < 1 || cfg.samples < 1 || cfg.bins < 1)
        throw ArgumentError("--N, --M, --samples and --bins must be >= 1");
    LawOptions law = lo;
    if (law.a || law.b) law.law = "general";
    const LawParams p = resolve_params(law, err);
    const cd w(p.a, p.b);

    EmpiricalSpectrum spectrum;
    json mom = json::array();
    json reference = json::array();
    if (model == "gue") {
        std::vector<std::vector<double>> per(cfg.samples);
        for (int i = 0; i < cfg.samples; ++i) {
            Stream s(cfg.seed, static_cast<std::uint64_t>(i));
            per[i] = hermitian_eigenvalues(sample_gue(cfg.N, s)).eigenvalues;
        }
        spectrum.boundaries.push_back(0);
        for (const auto& v : per) {
            spectrum.eigenvalues.insert(spectrum.eigenvalues.end(), v.begin(), v.end());
            spectrum.boundaries.push_back(spectrum.eigenvalues.size());
        }
        for (int k = 1; k <= moments; ++k)
            reference.push_back(k % 2 ? json(0) : json(to_string(catalan(k / 2))));
    } else if (model == "wishart") {
        const Eigen::MatrixXcd a = build({cfg.M, 0.0, w});
        spectrum = simulate_wishart_model(a, Eigen::MatrixXcd::Identity(cfg.N, cfg.N), cfg);
        const auto lim = moments_of_limit(p, moments);
        for (int k = 1; k <= moments; ++k) reference.push_back(lim[k]);
    } else if (model == "sandwich") {
        const Eigen::MatrixXcd d = build({cfg.N, 0.0, w}) / static_cast<double>(cfg.N);
        for (const auto& e : simulate_sandwich_model(d, moments, cfg))
            mom.push_back({{"k", e.m}, {"mean", e.mean}, {"stderr", e.stderr_}});
        // Tr moments of X D X tend to the limit-law moments
        const auto lim = moments_of_limit(p, moments);
        for (int k = 1; k <= moments; ++k) reference.push_back(lim[k]);
        std::vector<std::vector<double>> per(cfg.samples);
        for (int i = 0; i < cfg.samples; ++i) {
            Stream s(cfg.seed, static_cast<std::uint64_t>(i));
            const Eigen::MatrixXcd x = sample_gue(cfg.N, s);
            per[i] = hermitian_eigenvalues(x * d * x).eigenvalues;
        }
        spectrum.boundaries.push_back(0);
        for (const auto& v : per) {
            spectrum.eigenvalues.insert(spectrum.eigenvalues.end(), v.begin(), v.end());
            spectrum.boundaries.push_back(spectrum.eigenvalues.size());
        }
    } else {
        throw ArgumentError("unknown model " + model);
    }
    if (model != "sandwich")
        for (int k = 1; k <= moments; ++k)
            mom.push_back({{"k", k}, {"mean", spectrum.moment(k)}, {"stderr", spectrum.moment_stderr(k)}});

    const auto hist = histogram(spectrum.eigenvalues, cfg.bins);
    if (format == "json") {
        json h = json::array();
        for (const auto& b : hist)
            h.push_back({{"bin_left", b.left}, {"bin_right", b.right}, {"count", b.count}, {"density", b.density}});
        out << json{{"model", model},     {"N", cfg.N},           {"M", cfg.M},
                    {"samples", cfg.samples}, {"seed", cfg.seed},  {"moments", mom},
                    {"limit_moments", reference}, {"histogram", h}}
                   .dump(2)
            << "\n";
    } else {
        out << "bin_left,bin_right,count,density\n";
        for (const auto& b : hist)
            out << fmt(b.left) << "," << fmt(b.right) << "," << b.count << "," << fmt(b.density) << "\n";
    }
    return kExitOk;
}

// --- verify ---------------------------------------------------------------------------

struct Check {
    std::string name;
    std::function<bool()> run;
};

std::vector<Check> verify_checks(bool quick) {
    const int n_eig = quick ? 16 : 64;
    const int n_cot = quick ? 10 : 50;
    std::vector<Check> checks;
    checks.push_back({"tangent numbers by two routes", [] {
                          const auto t = tangent_numbers(4);
                          return t[0] == 1 && t[1] == 2 && t[2] == 16 && t[3] == 272;
                      }});
    checks.push_back({"zigzag sum identity", [quick] {
                          for (int n = 1; n <= (quick ? 10 : 20); ++n) {
                              const auto [l, r] = zigzag_sum_identity(n);
                              if (l != r) return false;
                          }
                          return true;
                      }});
    checks.push_back({"noncrossing partitions counted by Catalan", [] {
                          for (int n = 1; n <= 10; ++n) {
                              long c = 0;
                              for_each_nc(n, [&](const NCPartition&) { ++c; });
                              if (ExactInt(c) != catalan(n)) return false;
                          }
                          return true;
                      }});
    checks.push_back({"moment-cumulant round trip", [] {
                          const auto k = tangent_law_cumulants(10).exact_values().value();
                          const auto m = moments_from_cumulants(k, 10);
                          return cumulants_from_moments(m, 10) == k && moments_from_cumulants_enumerated(k, 10) == m;
                      }});
    checks.push_back({"quadratic-form oracle equals trace powers", [quick] {
                          std::vector<GaussMatrix> mats;
                          for (int n = 1; n <= 3; ++n) {
                              mats.push_back(build_exact(n, 0, kImagUnit));
                              mats.push_back(build_exact(n, ExactRational(1, 3), GaussRational(ExactRational(1, 2), ExactRational(-2))));
                          }
                          if (!quick) mats.push_back(build_exact(4, 0, GaussRational(ExactRational(1, 2), ExactRational(1, 2))));
                          for (const auto& a : mats) {
                              const int r_max = a.rows() == 4 ? 3 : 4;
                              const auto k = quadratic_form_cumulants_oracle(a, r_max);
                              const auto t = trace_powers_exact(a, r_max);
                              for (int r = 1; r <= r_max; ++r)
                                  if (k[r] != t[r - 1]) return false;
                          }
                          return true;
                      }});
    checks.push_back({"closed-form eigenvalues match Jacobi", [n_eig] {
                          const double s = std::sqrt(0.5);
                          for (cd w : {cd(0, 1), cd(s, s), cd(0.6, 0.8), cd(-0.6, 0.8)})
                              for (int n = 1; n <= n_eig; ++n) {
                                  const StructuredMatrixSpec spec{n, 0.0, w};
                                  const auto a = closed_form_eigenvalues(spec);
                                  const auto b = hermitian_eigenvalues(build(spec));
                                  for (int i = 0; i < n; ++i)
                                      if (std::abs(a[i] - b[i]) > 1e-9) return false;
                              }
                          return true;
                      }});
    checks.push_back({"cotangent power sums", [n_cot] {
                          for (int n = 1; n <= n_cot; ++n)
                              for (int m = 1; m <= 8; ++m) {
                                  if (cotangent_sum_2m(n, m).reldiff() > 1e-8) return false;
                                  if (m <= 6 && cotangent_sum_shifted(n, m).reldiff() > 1e-8) return false;
                              }
                          return true;
                      }});
    checks.push_back({"limit cumulant formulas agree", [] {
                          for (double al : {1.0 / 6, 0.25, 1.0 / 3, 0.5, 2.0 / 3})
                              limit_cumulants(LawParams::from_angle(al * std::numbers::pi), 16);
                          const auto k = limit_cumulants(LawParams::tangent(), 6);
                          return *k[2].exact == 1 && *k[4].exact == ExactRational(1, 3) &&
                                 *k[6].exact == ExactRational(2, 15);
                      }});
    checks.push_back({"finite-n R-transform series equals trace powers", [] {
                          const LawParams p = LawParams::from_angle(1.1);
                          for (int n = 1; n <= 32; n += 7) {
                              const auto s = finite_n_r_series(p, n, 8);
                              for (int r = 1; r <= 8; ++r) {
                                  const double t = trace_power({n, 0.0, {p.a, p.b}}, r) / std::pow(double(n), r);
                                  if (std::abs(s[r - 1] - t) > 1e-9) return false;
                              }
                          }
                          return true;
                      }});
    checks.push_back({"classical counterpart cumulants", [] {
                          bp_classical_cumulants(8);
                          return true;
                      }});
    checks.push_back({"spectral radius of the tangent law", [] {
                          const auto r = spectral_radius(LawParams::tangent());
                          return std::abs(r.rho - 2.2644374158937358461) < 1e-10 &&
                                 std::abs(r.u - dottie()) < 1e-12 && std::abs(r.rho - r.rho_direct) < 1e-8;
                      }});
    checks.push_back({"Levy sum reproduces z tan z", [] {
                          const double z = 0.7;
                          const int k = 1000;
                          const double e = std::abs(levy_cumulant_transform(LawParams::tangent(), z, k) - z * std::tan(z));
                          return e <= 8 * z * z * z / (std::numbers::pi * std::numbers::pi * k);
                      }});
    checks.push_back({"tangent density mass and moments", [quick] {
                          const auto g = density_grid(LawParams::tangent(), quick ? 1000 : 4000);
                          return std::abs(g.mass - 1) < 1e-5 && std::abs(g.moment(2) - 1) < 1e-4 &&
                                 std::abs(g.moment(4) - 7.0 / 3) < 1e-3;
                      }});
    checks.push_back({"GUE pairing sum against Monte Carlo", [quick] {
                          const int n = 3;
                          Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
                          for (int i = 0; i < n; ++i) d(i, i) = double(i + 1) / n;
                          const std::vector<int> q{1, 0, 1, 0};
                          const double exact = pairing_expected_moment(d, q);
                          const auto mc = monte_carlo_pairing_moment(d, q, {n, n, quick ? 4000 : 20000, 2024, 10, 1});
                          return std::abs(mc.mean - exact) <= 3 * mc.stderr_;
                      }});
    return checks;
}

int cmd_verify(bool quick, std::ostream& out) {
    int failed = 0;
    for (const auto& c : verify_checks(quick)) {
        bool ok = false;
        std::string why;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            why = std::string(" (") + e.what() + ")";
        }
        if (!ok) ++failed;
        out << (ok ? "[PASS] " : "[FAIL] ") << c.name << why << "\n";
    }
    out << (failed == 0 ? "PASS" : "FAIL") << "\n";
    return failed == 0 ? kExitOk : kExitConsistency;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out_default, std::ostream& err) {
    CLI::App app{"Free tangent law toolkit"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("-o,--output", output, "write the artifact to this file");

    std::string seq_kind = "tangent";
    int seq_n = 8, seq_k = 0;
    auto* seq = app.add_subcommand("seq", "exact sequences");
    seq->add_option("--kind", seq_kind)->check(CLI::IsMember({"tangent", "zigzag", "bernoulli", "arctangent",
                                                              "hyperbolic-arctangent", "higher-tangent",
                                                              "derivative-poly", "tangent-poly", "zigzag-identity"}));
    seq->add_option("--n", seq_n);
    seq->add_option("--k", seq_k);

    int eig_n = 8;
    double eig_a = 0, eig_b = 1, eig_c = 0;
    auto* eig = app.add_subcommand("eig", "closed-form eigenvalues against the Jacobi solver");
    eig->add_option("--n", eig_n);
    eig->add_option("--a", eig_a);
    eig->add_option("--b", eig_b);
    eig->add_option("--c", eig_c);

    std::string cot_kind = "2m";
    int cot_n = 10, cot_m = 4;
    auto* cot = app.add_subcommand("cotsum", "cotangent power-sum identities");
    cot->add_option("--kind", cot_kind)->check(CLI::IsMember({"2m", "shifted"}));
    cot->add_option("--n-max", cot_n);
    cot->add_option("--m-max", cot_m);

    int or_n = 3, or_r = 4;
    std::string or_family = "tangent", or_re = "0", or_im = "1", or_diag = "0";
    auto* orc = app.add_subcommand("oracle", "free cumulants of a semicircular quadratic form, exactly");
    orc->add_option("--n", or_n);
    orc->add_option("--rmax", or_r);
    orc->add_option("--family", or_family)->check(CLI::IsMember({"tangent", "zigzag", "anticommutator", "custom"}));
    orc->add_option("--w-re", or_re, "rational, e.g. 1/2");
    orc->add_option("--w-im", or_im);
    orc->add_option("--diag", or_diag);

    LawOptions cum_law;
    int cum_r = 8;
    std::string cum_n = "inf";
    auto* cum = app.add_subcommand("cumulants", "free cumulants of the limit law or of Q_n");
    cum_law.attach(cum);
    cum->add_option("--rmax", cum_r);
    cum->add_option("--n", cum_n, "matrix size, or inf for the limit");

    LawOptions rad_law;
    auto* rad = app.add_subcommand("radius", "spectral radius");
    rad_law.attach(rad);

    LawOptions levy_law;
    int levy_k = 5;
    auto* levy = app.add_subcommand("levy", "Levy measure atoms");
    levy_law.attach(levy);
    levy->add_option("--kmax", levy_k);

    LawOptions den_law;
    int den_points = 4000, den_threads = 1;
    std::string den_format = "csv";
    auto* den = app.add_subcommand("density", "density reconstruction");
    den_law.attach(den);
    den->add_option("--points", den_points);
    den->add_option("--threads", den_threads);
    den->add_option("--format", den_format)->check(CLI::IsMember({"csv", "json"}));

    LawOptions sim_law;
    SimConfig sim_cfg;
    std::string sim_model = "gue", sim_format = "csv";
    int sim_moments = 4;
    auto* sim = app.add_subcommand("simulate", "random matrix models");
    sim->add_option("--model", sim_model)->check(CLI::IsMember({"gue", "wishart", "sandwich"}));
    sim->add_option("--N", sim_cfg.N);
    sim->add_option("--M", sim_cfg.M);
    sim->add_option("--samples", sim_cfg.samples);
    sim->add_option("--seed", sim_cfg.seed)->required();
    sim->add_option("--bins", sim_cfg.bins);
    sim->add_option("--threads", sim_cfg.threads);
    sim->add_option("--moments", sim_moments);
    sim->add_option("--format", sim_format)->check(CLI::IsMember({"csv", "json"}));
    sim_law.attach(sim, false);

    bool quick = false;
    auto* ver = app.add_subcommand("verify", "run the cross-check suite");
    ver->add_flag("--quick", quick);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out_default << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kExitArgument;
    }

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            err << "cannot open " << output << "\n";
            return kExitArgument;
        }
    }
    std::ostream& out = output.empty() ? out_default : file;

    int code = kExitOk;
    try {
        if (*seq) code = cmd_seq(seq_kind, seq_n, seq_k, out);
        else if (*eig) code = cmd_eig(eig_n, eig_a, eig_b, eig_c, out);
        else if (*cot) code = cmd_cotsum(cot_kind, cot_n, cot_m, out);
        else if (*orc) code = cmd_oracle(or_n, or_r, or_family, or_re, or_im, or_diag, out);
        else if (*cum) code = cmd_cumulants(cum_law, cum_r, cum_n, out, err);
        else if (*rad) code = cmd_radius(rad_law, out, err);
        else if (*levy) code = cmd_levy(levy_law, levy_k, out, err);
        else if (*den) code = cmd_density(den_law, den_points, den_threads, den_format, out, err);
        else if (*sim) code = cmd_simulate(sim_model, sim_cfg, sim_law, sim_moments, sim_format, out, err);
        else if (*ver) code = cmd_verify(quick, out);
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return kExitArgument;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitArgument;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << "\n";
        return kExitArgument;
    } catch (const std::invalid_argument& e) {  // e.g. malformed rationals
        err << "error: " << e.what() << "\n";
        return kExitArgument;
    } catch (const std::exception& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kExitConsistency;
    }
    out.flush();
    if (!out) {
        err << "write failed\n";
        return kExitArgument;
    }
    if (code == kExitConsistency) err << "consistency check failed\n";
    return code;
}

}  // namespace tanlaw::cli
