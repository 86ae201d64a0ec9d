#include "cpokit/canonical.hpp"

#include <algorithm>
#include <map>

#include "cpokit/errors.hpp"

namespace cpokit {

namespace {

// Iterated degree refinement: colors elements by (down-set size, up-set size)
// and then repeatedly by the multiset of neighbor colors until stable.
// Permutations are only searched within color classes.
std::vector<int> refine_colors(const FinPoset& p) {
    const int n = p.size();
    std::vector<long long> color(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        color[i] = subset_size(p.down_set(i)) * 100 + subset_size(p.up_set(i));

    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<long long>> sig(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            sig[i].push_back(color[i]);
            std::vector<long long> lows, ups;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                if (p.leq(j, i)) lows.push_back(color[j]);
                if (p.leq(i, j)) ups.push_back(color[j]);
            }
            std::sort(lows.begin(), lows.end());
            std::sort(ups.begin(), ups.end());
            sig[i].push_back(-1);
            sig[i].insert(sig[i].end(), lows.begin(), lows.end());
            sig[i].push_back(-2);
            sig[i].insert(sig[i].end(), ups.begin(), ups.end());
        }
        std::map<std::vector<long long>, long long> dense;
        for (int i = 0; i < n; ++i) dense.emplace(sig[i], 0);
        long long next = 0;
        for (auto& [k, v] : dense) v = next++;
        std::vector<long long> fresh(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) fresh[i] = dense[sig[i]];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = static_cast<int>(color[i]);
    return out;
}

std::string encode(const FinPoset& p, const std::vector<int>& pos) {
    // pos[i] = position of element i in the candidate labeling
    const int n = p.size();
    std::string bits(static_cast<std::size_t>(n) * n, '0');
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) bits[static_cast<std::size_t>(pos[i]) * n + pos[j]] = '1';
    return bits;
}

}  // namespace

CanonicalForm canonicalize(const FinPoset& p) {
    const int n = p.size();
    const std::vector<int> color = refine_colors(p);

    // Candidate labelings assign positions by ascending color, breaking ties
    // by trying every arrangement inside a color class.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (color[a] != color[b]) return color[a] < color[b];
        return a < b;
    });

    std::string best;
    std::vector<int> pos(static_cast<std::size_t>(n));
    auto try_current = [&] {
        for (int k = 0; k < n; ++k) pos[order[k]] = k;
        std::string enc = encode(p, pos);
        if (best.empty() || enc < best) best = std::move(enc);
    };

    // Recursive product of permutations of each color class.
    auto rec = [&](auto&& self, int start) -> void {
        if (start == n) {
            try_current();
            return;
        }
        int end = start;
        while (end < n && color[order[end]] == color[order[start]]) ++end;
        std::vector<int> block(order.begin() + start, order.begin() + end);
        std::sort(block.begin(), block.end());
        do {
            std::copy(block.begin(), block.end(), order.begin() + start);
            self(self, end);
        } while (std::next_permutation(block.begin(), block.end()));
        std::sort(block.begin(), block.end());
        std::copy(block.begin(), block.end(), order.begin() + start);
    };
    rec(rec, 0);

    return CanonicalForm{n, std::move(best)};
}

FinPoset canonical_poset(const FinPoset& p, std::string name) {
    const CanonicalForm cf = canonicalize(p);
    const int n = cf.n;
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    Relation rel(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (cf.bits[static_cast<std::size_t>(i) * n + j] == '1') rel.set(i, j);
    if (name.empty()) name = p.name();
    return FinPoset::make(std::move(name), std::move(labels), std::move(rel));
}

bool isomorphic(const FinPoset& a, const FinPoset& b) {
    if (a.size() != b.size()) return false;
    return canonicalize(a) == canonicalize(b);
}

FinPoset relabel(const FinPoset& p, const std::vector<int>& perm, std::string name) {
    const int n = p.size();
    if (static_cast<int>(perm.size()) != n) throw MathError("relabel: bad permutation size");
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[perm[i]] = p.label(i);
    Relation rel(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.leq(i, j)) rel.set(perm[i], perm[j]);
    if (name.empty()) name = p.name();
    return FinPoset::make(std::move(name), std::move(labels), std::move(rel));
}

}  // namespace cpokit
