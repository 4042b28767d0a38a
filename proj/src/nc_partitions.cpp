#include "tanlaw/nc_partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace tanlaw {

NCPartition::NCPartition(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
    int next = 0;
    for (auto l : labels_) {
        if (l > next) throw ArgumentError("NCPartition: labels are not in first-occurrence order");
        if (l == next) ++next;
    }
    blocks_ = next;
}

NCPartition NCPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 0 || n > 255) throw ArgumentError("NCPartition: ground set size out of range");
    std::vector<int> owner(n + 1, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw ArgumentError("NCPartition: empty block");
        for (int e : blocks[b]) {
            if (e < 1 || e > n) throw ArgumentError("NCPartition: element out of range");
            if (owner[e] != -1) throw ArgumentError("NCPartition: blocks are not disjoint");
            owner[e] = static_cast<int>(b);
        }
    }
    std::vector<std::uint8_t> labels(n);
    std::vector<int> relabel(blocks.size(), -1);
    int next = 0;
    for (int i = 1; i <= n; ++i) {
        if (owner[i] == -1) throw ArgumentError("NCPartition: blocks do not cover the ground set");
        if (relabel[owner[i]] == -1) relabel[owner[i]] = next++;
        labels[i - 1] = static_cast<std::uint8_t>(relabel[owner[i]]);
    }
    // a < b < c < d with a~c, b~d, a!~b
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (labels[a] == labels[b]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (labels[c] != labels[a]) continue;
                for (int d = c + 1; d < n; ++d)
                    if (labels[d] == labels[b]) throw ArgumentError("NCPartition: blocks cross");
            }
        }
    return NCPartition(std::move(labels));
}

std::vector<std::vector<int>> NCPartition::blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (int i = 0; i < size(); ++i) out[labels_[i]].push_back(i + 1);
    return out;
}

std::vector<int> NCPartition::block_sizes() const {
    std::vector<int> out(blocks_, 0);
    for (auto l : labels_) ++out[l];
    return out;
}

bool NCPartition::is_pairing() const {
    const auto sizes = block_sizes();
    return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 2; });
}

namespace {

// Elements are placed left to right. A stack holds the blocks that may still
// receive elements; joining a block closes every block opened after it.
void nc_recurse(int i, int n, std::vector<std::uint8_t>& labels, std::vector<std::uint8_t>& stack,
                int blocks, const std::function<void(const NCPartition&)>& visit) {
    if (i == n) {
        visit(NCPartition(labels));
        return;
    }
    stack.push_back(static_cast<std::uint8_t>(blocks));
    labels[i] = static_cast<std::uint8_t>(blocks);
    nc_recurse(i + 1, n, labels, stack, blocks + 1, visit);
    stack.pop_back();

    for (std::size_t p = stack.size(); p-- > 0;) {
        std::vector<std::uint8_t> saved(stack.begin() + p + 1, stack.end());
        stack.resize(p + 1);
        labels[i] = stack[p];
        nc_recurse(i + 1, n, labels, stack, blocks, visit);
        stack.insert(stack.end(), saved.begin(), saved.end());
    }
}

}  // namespace

void for_each_nc(int n, const std::function<void(const NCPartition&)>& visit) {
    if (n < 0) throw ArgumentError("for_each_nc: negative size");
    if (n > kMaxEnumeratedNC) throw ResourceError("for_each_nc: n = " + std::to_string(n) + " exceeds 14");
    std::vector<std::uint8_t> labels(n);
    std::vector<std::uint8_t> stack;
    nc_recurse(0, n, labels, stack, 0, visit);
}

std::vector<NCPartition> enumerate_nc(int n) {
    if (n < 1) throw ArgumentError("enumerate_nc: n must be >= 1");
    std::vector<NCPartition> out;
    out.reserve(catalan(std::min(n, kMaxEnumeratedNC)).get_ui());
    for_each_nc(n, [&](const NCPartition& p) { out.push_back(p); });
    return out;
}

std::vector<NCPartition> enumerate_nc_pairings(int n) {
    std::vector<NCPartition> out;
    if (n % 2 != 0 || n <= 0) return out;
    for_each_nc(n, [&](const NCPartition& p) {
        if (p.block_count() * 2 == n && p.is_pairing()) out.push_back(p);
    });
    return out;
}

ExactInt catalan(int n) {
    if (n < 0) throw ArgumentError("catalan: negative index");
    return binomial(2 * n, n) / (n + 1);
}

bool joins_to_top(const NCPartition& pi, const IntervalPartition& rho) {
    const int n = pi.size();
    int total = 0;
    for (int len : rho) {
        if (len <= 0) throw ArgumentError("joins_to_top: interval lengths must be positive");
        total += len;
    }
    if (total != n) throw ArgumentError("joins_to_top: partitions live on different ground sets");
    if (n == 0) return true;

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

    std::vector<int> first(pi.block_count(), -1);
    for (int i = 0; i < n; ++i) {
        int b = pi.labels()[i];
        if (first[b] == -1) first[b] = i;
        else unite(i, first[b]);
    }
    int start = 0;
    for (int len : rho) {
        for (int i = start + 1; i < start + len; ++i) unite(i, start);
        start += len;
    }
    const int root = find(0);
    for (int i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

ExactInt semicircular_mixed_moment(std::span<const int> word) {
    const int len = static_cast<int>(word.size());
    if (len % 2 != 0) return 0;
    // f[i][j]: number of admissible noncrossing pairings of word[i, j)
    std::vector<std::vector<ExactInt>> f(len + 1, std::vector<ExactInt>(len + 1, 0));
    for (int i = 0; i <= len; ++i) f[i][i] = 1;
    for (int width = 2; width <= len; width += 2) {
        for (int i = 0; i + width <= len; ++i) {
            const int j = i + width;
            ExactInt acc = 0;
            for (int k = i + 1; k < j; k += 2)
                if (word[i] == word[k]) acc += f[i + 1][k] * f[k + 1][j];
            f[i][j] = acc;
        }
    }
    return f[0][len];
}

std::vector<std::pair<std::vector<int>, ExactInt>> nonzero_semicircular_words(int letters, int length) {
    std::vector<std::pair<std::vector<int>, ExactInt>> out;
    if (length == 0) {
        out.emplace_back(std::vector<int>{}, 1);
        return out;
    }
    if (length % 2 != 0) return out;
    // a word has nonzero moment iff some noncrossing pairing refines its kernel;
    // collect candidates from pairings, then evaluate each word once
    std::map<std::vector<int>, bool> candidates;
    const int pairs = length / 2;
    for (const auto& pairing : enumerate_nc_pairings(length)) {
        std::vector<int> assign(pairs, 0);
        while (true) {
            std::vector<int> word(length);
            for (int i = 0; i < length; ++i) word[i] = assign[pairing.labels()[i]];
            candidates.emplace(std::move(word), true);
            int pos = 0;
            while (pos < pairs && ++assign[pos] == letters) assign[pos++] = 0;
            if (pos == pairs) break;
        }
    }
    out.reserve(candidates.size());
    for (const auto& [word, unused] : candidates) {
        (void)unused;
        out.emplace_back(word, semicircular_mixed_moment(word));
    }
    return out;
}

namespace {

void require_hermitian(const GaussMatrix& a) {
    if (a.rows() != a.cols()) throw ArgumentError("oracle: matrix is not square");
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != conj(a(j, i))) throw ArgumentError("oracle: matrix is not Hermitian");
}

// The word table depends only on (letters, length); oracle sweeps reuse it.
const std::vector<std::pair<std::vector<int>, ExactInt>>& cached_words(int letters, int length) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<std::pair<std::vector<int>, ExactInt>>> cache;
    const std::lock_guard lock(mutex);
    auto it = cache.find({letters, length});
    if (it == cache.end()) it = cache.emplace(std::pair{letters, length}, nonzero_semicircular_words(letters, length)).first;
    return it->second;
}

}  // namespace

CumulantSeq<GaussRational> quadratic_form_cumulants_oracle(const GaussMatrix& a, int r_max) {
    require_hermitian(a);
    const int n = static_cast<int>(a.rows());
    if (n < 1 || n > kOracleMaxSize || r_max < 1 || r_max > kOracleMaxOrder)
        throw ResourceError("oracle: supports 1 <= n <= 4 and 1 <= r <= 5");

    std::vector<GaussRational> moments;
    for (int m = 1; m <= r_max; ++m) {
        GaussRational acc;
        for (const auto& [word, weight] : cached_words(n, 2 * m)) {
            GaussRational prod{ExactRational(weight)};
            for (int t = 0; t < m && !prod.is_zero(); ++t) prod *= a(word[2 * t], word[2 * t + 1]);
            acc += prod;
        }
        moments.push_back(std::move(acc));
    }
    return cumulants_from_moments(MomentSeq<GaussRational>(std::move(moments)), r_max);
}

std::vector<GaussRational> trace_powers_exact(const GaussMatrix& a, int r_max) {
    std::vector<GaussRational> out;
    GaussMatrix power = a;
    for (int r = 1; r <= r_max; ++r) {
        out.push_back(power.trace());
        if (r < r_max) power = (power * a).eval();
    }
    return out;
}

std::vector<LimitCheckRow> limit_theorem_small_check(
    const std::function<Eigen::MatrixXcd(int)>& builder, int r, std::span<const int> ns) {
    if (r < 1) throw ArgumentError("limit_theorem_small_check: r must be >= 1");
    std::vector<LimitCheckRow> rows;
    for (int n : ns) {
        const Eigen::MatrixXcd a = builder(n);
        Eigen::MatrixXcd power = a;
        for (int i = 1; i < r; ++i) power = (power * a).eval();
        rows.push_back({n, power.trace().real() / std::pow(static_cast<double>(n), r)});
    }
    return rows;
}

}  // namespace tanlaw
