#pragma once

// Test-only oracles, independent of the library's enumeration and
// canonicalization routes. Deliberately brute force.

#include <optional>
#include <vector>

#include "cpokit/poset.hpp"

namespace cpokit::oracle {

// Every partial order on n labeled elements, generated by assigning one of
// {incomparable, i<j, j<i} to each unordered pair and keeping the transitive
// outcomes. Independent of the natural-labeling generator in the library.
inline std::vector<Relation> all_labeled_posets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<Relation> out;
    std::vector<int> choice(pairs.size(), 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == pairs.size()) {
            Relation rel(n);
            for (std::size_t t = 0; t < pairs.size(); ++t) {
                if (choice[t] == 1) rel.set(pairs[t].first, pairs[t].second);
                if (choice[t] == 2) rel.set(pairs[t].second, pairs[t].first);
            }
            if (rel.transitive()) out.push_back(rel);
            return;
        }
        for (int c = 0; c < 3; ++c) {
            choice[k] = c;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Backtracking isomorphism search; no invariants, no canonical forms.
inline std::optional<std::vector<int>> find_isomorphism(const FinPoset& a, const FinPoset& b) {
    const int n = a.size();
    if (n != b.size()) return std::nullopt;
    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    Subset used = 0;
    auto rec = [&](auto&& self, int i) -> std::optional<std::vector<int>> {
        if (i == n) return perm;
        for (int v = 0; v < n; ++v) {
            if (subset_has(used, v)) continue;
            bool ok = true;
            for (int j = 0; j <= i && ok; ++j) {
                if (perm[j] < 0) continue;
                if (a.leq(j, i) != b.leq(perm[j], v)) ok = false;
                if (a.leq(i, j) != b.leq(v, perm[j])) ok = false;
            }
            if (!ok) continue;
            perm[i] = v;
            used = subset_with(used, v);
            auto r = self(self, i + 1);
            if (r) return r;
            used &= ~(Subset{1} << v);
            perm[i] = -1;
        }
        return std::nullopt;
    };
    return rec(rec, 0);
}

// Every monotone bottom-preserving table src -> dst by filtering all
// |dst|^|src| candidate tables. Independent of the backtracking enumerator.
inline std::vector<std::vector<int>> brute_force_hom(const FinPoset& src, const FinPoset& dst) {
    std::vector<std::vector<int>> out;
    const int n = src.size(), m = dst.size();
    std::vector<int> table(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool ok = table[src.bottom()] == dst.bottom();
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (src.leq(i, j) && !dst.leq(table[i], table[j])) ok = false;
        if (ok) out.push_back(table);
        int k = n - 1;
        while (k >= 0 && table[k] == m - 1) table[k--] = 0;
        if (k < 0) break;
        ++table[k];
    }
    return out;
}

// Directed subsets by definition: nonempty, pairwise bounded within.
inline std::vector<Subset> all_directed_subsets(const FinPoset& p, Subset within) {
    auto directed = [&](Subset s) {
        for (int i = 0; i < p.size(); ++i) {
            if (!subset_has(s, i)) continue;
            for (int j = 0; j < p.size(); ++j) {
                if (!subset_has(s, j)) continue;
                bool bounded = false;
                for (int u = 0; u < p.size() && !bounded; ++u)
                    if (subset_has(s, u) && p.leq(i, u) && p.leq(j, u)) bounded = true;
                if (!bounded) return false;
            }
        }
        return true;
    };
    std::vector<Subset> out;
    for (Subset s = within;; s = (s - 1) & within) {
        if (s != 0 && directed(s)) out.push_back(s);
        if (s == 0) break;
    }
    return out;
}

}  // namespace cpokit::oracle
