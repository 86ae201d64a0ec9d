#include "cpokit/enumerate.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "cpokit/errors.hpp"

namespace cpokit {

namespace {

// Naturally labeled generation: element 0 is the bottom and i <= j in the
// order implies i <= j as integers, so it suffices to choose the strictly
// upper pairs 1 <= i < j and keep the transitive candidates. Every pointed
// poset admits such a labeling (any linear extension starts at the bottom).
std::vector<CanonicalForm> canonical_forms_of_size(int n) {
    std::set<CanonicalForm> forms;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);

    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Relation rel(n);
        for (int j = 1; j < n; ++j) rel.set(0, j);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1u) rel.set(pairs[k].first, pairs[k].second);
        if (!rel.transitive()) continue;
        forms.insert(canonicalize(FinPoset::make("", labels, rel)));
    }
    return {forms.begin(), forms.end()};
}

std::vector<FinPoset> materialize(int n, const std::vector<CanonicalForm>& forms) {
    std::vector<FinPoset> out;
    out.reserve(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const CanonicalForm& cf = forms[i];
        std::vector<std::string> labels(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) labels[k] = std::to_string(k);
        Relation rel(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (cf.bits[static_cast<std::size_t>(a) * n + b] == '1') rel.set(a, b);
        out.push_back(FinPoset::make("P" + std::to_string(n) + "_" + std::to_string(i),
                                     std::move(labels), std::move(rel)));
    }
    return out;
}

std::vector<FinPoset> enumerate_unchecked(int n) {
    return materialize(n, canonical_forms_of_size(n));
}

}  // namespace

std::vector<FinPoset> enumerate_posets(int n) {
    if (n < 1) throw BoundTooLarge("poset size must be at least 1");
    if (n > kMaxEnumerationSize)
        throw BoundTooLarge("enumerate_posets is limited to " +
                            std::to_string(kMaxEnumerationSize) + " elements");
    return enumerate_unchecked(n);
}

const std::vector<FinPoset>& pointed_corpus(int max_n) {
    if (max_n < 1 || max_n > kMaxCorpusSize)
        throw BoundTooLarge("corpus bound must be between 1 and " +
                            std::to_string(kMaxCorpusSize));
    static const std::array<std::vector<FinPoset>, kMaxCorpusSize + 1> by_bound = [] {
        std::array<std::vector<FinPoset>, kMaxCorpusSize + 1> table;
        for (int bound = 1; bound <= kMaxCorpusSize; ++bound) {
            std::vector<FinPoset> all;
            for (int n = 1; n <= bound; ++n) {
                auto batch = enumerate_unchecked(n);
                all.insert(all.end(), batch.begin(), batch.end());
            }
            table[static_cast<std::size_t>(bound)] = std::move(all);
        }
        return table;
    }();
    return by_bound[static_cast<std::size_t>(max_n)];
}

}  // namespace cpokit
