#include <doctest.h>

#include "tanlaw/errors.hpp"
#include "tanlaw/matrix_spectra.hpp"
#include "tanlaw/nc_partitions.hpp"

#include <random>
#include <set>

using namespace tanlaw;

namespace {

// All set partitions of {1..n} as restricted growth strings.
void all_set_partitions(int n, std::vector<int>& cur, int max_label, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
        cur.push_back(l);
        all_set_partitions(n, cur, std::max(max_label, l), out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    all_set_partitions(n, cur, -1, out);
    return out;
}

// a < b < c < d with a, c in one block and b, d in another.
bool crosses(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (labels[a] == labels[c] && labels[b] == labels[d] && labels[a] != labels[b]) return true;
    return false;
}

std::vector<int> as_ints(const NCPartition& p) { return {p.labels().begin(), p.labels().end()}; }

GaussRational entry(int code) {
    static const std::vector<GaussRational> values{
        GaussRational(0),
        GaussRational(1),
        GaussRational(-1),
        kImagUnit,
        -kImagUnit,
        GaussRational(ExactRational(1, 2), ExactRational(1, 2)),
        GaussRational(ExactRational(1, 2), ExactRational(-1, 2)),
        GaussRational(ExactRational(-1, 2), ExactRational(1, 2)),
        GaussRational(ExactRational(-1, 2), ExactRational(-1, 2)),
    };
    return values[code];
}

GaussMatrix random_hermitian(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> diag(0, 2), off(0, 8);
    GaussMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = entry(diag(rng));
        for (int j = i + 1; j < n; ++j) {
            a(i, j) = entry(off(rng));
            a(j, i) = conj(a(i, j));
        }
    }
    return a;
}

}  // namespace

TEST_SUITE("nc_partitions") {

TEST_CASE("enumeration agrees with a brute-force crossing filter") {
    for (int n = 1; n <= 9; ++n) {
        std::set<std::vector<int>> expect;
        for (const auto& p : set_partitions(n))
            if (!crosses(p)) expect.insert(p);
        std::set<std::vector<int>> got;
        for (const auto& p : enumerate_nc(n)) got.insert(as_ints(p));
        CHECK(got == expect);
        CHECK(ExactInt(static_cast<long>(got.size())) == catalan(n));
    }
    CHECK(enumerate_nc(1).size() == 1);
    CHECK(enumerate_nc(3).size() == 5);
    CHECK(enumerate_nc(4).size() == 14);
    CHECK(enumerate_nc_pairings(4).size() == 2);
    CHECK(enumerate_nc_pairings(5).empty());
    CHECK_THROWS_AS(enumerate_nc(15), ResourceError);
}

TEST_CASE("Catalan counts up to 12 with every element noncrossing") {
    for (int n = 10; n <= 12; ++n) {
        long count = 0;
        bool all_ok = true;
        for_each_nc(n, [&](const NCPartition& p) {
            ++count;
            if (n == 10) all_ok = all_ok && !crosses(as_ints(p));
        });
        CHECK(ExactInt(count) == catalan(n));
        CHECK(all_ok);
    }
}

TEST_CASE("partition blocks") {
    const NCPartition p = NCPartition::from_blocks(4, {{1, 4}, {2, 3}});
    CHECK(p.is_pairing());
    CHECK(p.block_count() == 2);
    CHECK(p.blocks() == std::vector<std::vector<int>>{{1, 4}, {2, 3}});
    CHECK_THROWS_AS(NCPartition::from_blocks(4, {{1, 3}, {2, 4}}), ArgumentError);
    CHECK_THROWS_AS(NCPartition::from_blocks(4, {{1, 2}, {2, 3, 4}}), ArgumentError);
}

TEST_CASE("moment-cumulant relation") {
    const CumulantSeq<ExactRational> semi({0, 1, 0, 0, 0, 0, 0, 0});
    const auto m = moments_from_cumulants(semi, 8);
    CHECK(m == MomentSeq<ExactRational>({0, 1, 0, 2, 0, 5, 0, 14}));
    CHECK(cumulants_from_moments(m, 8) == semi);

    const CumulantSeq<ExactRational> ones(std::vector<ExactRational>(10, 1));
    const auto mc = moments_from_cumulants(ones, 10);
    for (int n = 1; n <= 10; ++n) CHECK(mc[n] == ExactRational(catalan(n)));
    CHECK(cumulants_from_moments(mc, 10) == ones);

    const CumulantSeq<ExactRational> zero(std::vector<ExactRational>(5, 0));
    CHECK(moments_from_cumulants(zero, 5) == MomentSeq<ExactRational>(std::vector<ExactRational>(5, 0)));
}

TEST_CASE("moment-cumulant round trip on random rationals") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<ExactRational> v(12);
        for (auto& x : v) x = make_rational(num(rng), den(rng));
        const MomentSeq<ExactRational> m(v);
        CHECK(moments_from_cumulants(cumulants_from_moments(m, 12), 12) == m);
        const CumulantSeq<ExactRational> k(v);
        const auto rec = moments_from_cumulants(k, 8);
        CHECK(rec == moments_from_cumulants_enumerated(k, 8));
    }
}

TEST_CASE("joins to the top partition") {
    const NCPartition top = NCPartition::from_blocks(4, {{1, 2, 3, 4}});
    const NCPartition pairs = NCPartition::from_blocks(4, {{1, 2}, {3, 4}});
    const NCPartition shift = NCPartition::from_blocks(4, {{1, 4}, {2, 3}});
    const IntervalPartition rho{2, 2};
    CHECK(joins_to_top(top, rho));
    CHECK_FALSE(joins_to_top(pairs, rho));
    CHECK(joins_to_top(shift, rho));
    CHECK_THROWS_AS(joins_to_top(shift, IntervalPartition{2, 3}), ArgumentError);
}

TEST_CASE("semicircular mixed moments") {
    const std::vector<int> w1{1, 1}, w2{1, 2, 2, 1}, w3{1, 2, 1, 2}, w4{1, 1, 1, 1}, odd{1, 1, 1};
    CHECK(semicircular_mixed_moment(w1) == 1);
    CHECK(semicircular_mixed_moment(w2) == 1);
    CHECK(semicircular_mixed_moment(w3) == 0);
    CHECK(semicircular_mixed_moment(w4) == 2);
    CHECK(semicircular_mixed_moment(odd) == 0);
    // single letter: Catalan numbers
    for (int r = 1; r <= 6; ++r) CHECK(semicircular_mixed_moment(std::vector<int>(2 * r, 0)) == catalan(r));
    // against counting noncrossing pairings that respect the letters
    const std::vector<int> w{0, 1, 1, 0, 0, 1, 1, 0};
    long count = 0;
    for (const auto& p : enumerate_nc_pairings(8)) {
        bool ok = true;
        for (const auto& b : p.blocks()) ok = ok && w[b[0] - 1] == w[b[1] - 1];
        count += ok;
    }
    CHECK(semicircular_mixed_moment(w) == count);
}

TEST_CASE("nonzero words enumerate exactly the support of the moment functional") {
    const auto words = nonzero_semicircular_words(2, 4);
    long brute = 0;
    for (int code = 0; code < 16; ++code) {
        std::vector<int> w{code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1};
        brute += semicircular_mixed_moment(w) != 0;
    }
    CHECK(static_cast<long>(words.size()) == brute);
    for (const auto& [w, m] : words) CHECK(m == semicircular_mixed_moment(w));
}

TEST_CASE("quadratic-form oracle examples") {
    GaussMatrix one(1, 1);
    one(0, 0) = 1;
    const auto k1 = quadratic_form_cumulants_oracle(one, 5);
    for (int r = 1; r <= 5; ++r) CHECK(k1[r] == GaussRational(1));

    const GaussMatrix a = build_exact(2, 0, kImagUnit);
    const auto k2 = quadratic_form_cumulants_oracle(a, 4);
    CHECK(k2[1].is_zero());
    CHECK(k2[2] == GaussRational(2));
    CHECK(k2[3].is_zero());
    CHECK(k2[4] == GaussRational(2));

    const GaussMatrix z = GaussMatrix::Zero(3, 3);
    for (const auto& v : quadratic_form_cumulants_oracle(z, 4).values) CHECK(v.is_zero());

    GaussMatrix bad = build_exact(2, 0, kImagUnit);
    bad(1, 0) = kImagUnit;
    CHECK_THROWS_AS(quadratic_form_cumulants_oracle(bad, 3), ArgumentError);
    CHECK_THROWS_AS(quadratic_form_cumulants_oracle(GaussMatrix::Zero(5, 5), 2), ResourceError);
}

TEST_CASE("quadratic-form oracle equals trace powers on all 2x2 matrices from the entry set") {
    for (int d0 = 0; d0 < 3; ++d0)
        for (int d1 = 0; d1 < 3; ++d1)
            for (int o = 0; o < 9; ++o) {
                GaussMatrix a(2, 2);
                a(0, 0) = entry(d0);
                a(1, 1) = entry(d1);
                a(0, 1) = entry(o);
                a(1, 0) = conj(a(0, 1));
                const auto k = quadratic_form_cumulants_oracle(a, 4);
                // independent trace powers via Eigen's own product
                GaussMatrix p = a;
                for (int r = 1; r <= 4; ++r) {
                    CHECK(k[r] == p.trace());
                    p = p * a;
                }
            }
}

TEST_CASE("quadratic-form oracle on random 3x3 matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        const GaussMatrix a = random_hermitian(3, rng);
        const auto k = quadratic_form_cumulants_oracle(a, 4);
        const auto t = trace_powers_exact(a, 4);
        for (int r = 1; r <= 4; ++r) CHECK(k[r] == t[r - 1]);
    }
}

TEST_CASE("finite-n convergence table") {
    const std::vector<int> ns{3, 10, 100};
    const auto rows = limit_theorem_small_check([](int n) { return build({n, 0.0, {0.0, 1.0}}); }, 2, ns);
    CHECK(rows[0].value == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(rows[2].value == doctest::Approx(0.99).epsilon(1e-12));
    const auto r1 = limit_theorem_small_check([](int n) { return build({n, 0.0, {0.6, 0.8}}); }, 1, ns);
    for (const auto& row : r1) CHECK(std::abs(row.value) < 1e-12);
}

}
