#include "cpokit/poset.hpp"

#include <algorithm>
#include <unordered_set>

#include "cpokit/errors.hpp"

namespace cpokit {

FinPoset FinPoset::make(std::string name, std::vector<std::string> labels, Relation leq) {
    if (static_cast<int>(labels.size()) != leq.size())
        throw MathError("label count does not match relation size");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw DuplicateElement("duplicate element label: " + l);
    if (!leq.reflexive()) throw MathError("relation is not reflexive");
    if (!leq.antisymmetric()) throw CycleDetected("relation is not antisymmetric");
    if (!leq.transitive()) throw MathError("relation is not transitive");
    auto least = leq.least();
    if (!least) throw NoBottom("poset has no least element");
    return FinPoset(std::move(name), std::move(labels), std::move(leq), *least);
}

FinPoset FinPoset::from_covers(std::string name, std::vector<std::string> labels,
                               const std::string& bottom,
                               std::span<const std::pair<std::string, std::string>> covers) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw DuplicateElement("duplicate element label: " + l);
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw NoBottom("poset needs at least the bottom element");
    if (n > 64) throw BoundTooLarge("posets are limited to 64 elements");

    auto find = [&](const std::string& l) -> int {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw MathError("unknown element label: " + l);
        return static_cast<int>(it - labels.begin());
    };

    Relation rel(n);
    for (const auto& [a, b] : covers) rel.set(find(a), find(b));
    rel = rel.transitive_closure();
    if (!rel.antisymmetric()) throw CycleDetected("cover relation has a directed cycle");

    const int bot = find(bottom);
    if (rel.row(bot) != full_subset(n))
        throw NoBottom("declared bottom '" + bottom + "' is not below every element");
    return FinPoset(std::move(name), std::move(labels), std::move(rel), bot);
}

std::optional<int> FinPoset::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

bool FinPoset::is_chain(Subset s) const {
    for (int i = 0; i < size(); ++i) {
        if (!subset_has(s, i)) continue;
        for (int j = i + 1; j < size(); ++j)
            if (subset_has(s, j) && !leq(i, j) && !leq(j, i)) return false;
    }
    return true;
}

bool FinPoset::is_directed(Subset s) const {
    if (s == 0) return false;
    for (int i = 0; i < size(); ++i) {
        if (!subset_has(s, i)) continue;
        for (int j = i; j < size(); ++j) {
            if (!subset_has(s, j)) continue;
            if ((upper_bounds(subset_with(Subset{0}, i) | subset_with(Subset{0}, j)) & s) == 0)
                return false;
        }
    }
    return true;
}

Subset FinPoset::upper_bounds(Subset s) const {
    Subset ub = carrier();
    for (int i = 0; i < size(); ++i)
        if (subset_has(s, i)) ub &= leq_.above(i);
    return ub;
}

std::optional<int> FinPoset::join_of(Subset s) const {
    const Subset ub = upper_bounds(s);
    for (int b = 0; b < size(); ++b)
        if (subset_has(ub, b) && (leq_.above(b) & ub) == ub) return b;
    return std::nullopt;
}

Subset FinPoset::maximal_elements(Subset s) const {
    Subset out = 0;
    for (int i = 0; i < size(); ++i) {
        if (!subset_has(s, i)) continue;
        bool maximal = true;
        for (int j = 0; j < size() && maximal; ++j)
            if (j != i && subset_has(s, j) && leq(i, j)) maximal = false;
        if (maximal) out = subset_with(out, i);
    }
    return out;
}

IsCpoReport is_cpo(const Relation& leq) {
    const int n = leq.size();
    if (!leq.is_partial_order()) throw MathError("is_cpo: relation is not a partial order");
    if (n > 20) throw BoundTooLarge("is_cpo enumerates all chains; limited to 20 elements");
    IsCpoReport r{};
    r.via_least = leq.least().has_value();
    r.via_chains = true;

    // Direct route: enumerate every subset, keep the chains, ask for a join.
    // The empty chain is included; its join must be a least element.
    auto upper_bounds = [&](Subset s) {
        Subset ub = full_subset(n);
        for (int i = 0; i < n; ++i)
            if (subset_has(s, i)) ub &= leq.above(i);
        return ub;
    };
    auto has_join = [&](Subset s) {
        const Subset ub = upper_bounds(s);
        for (int b = 0; b < n; ++b)
            if (subset_has(ub, b) && (leq.above(b) & ub) == ub) return true;
        return false;
    };
    auto is_chain = [&](Subset s) {
        for (int i = 0; i < n; ++i) {
            if (!subset_has(s, i)) continue;
            for (int j = i + 1; j < n; ++j)
                if (subset_has(s, j) && !leq.at(i, j) && !leq.at(j, i)) return false;
        }
        return true;
    };
    for (Subset s = 0; s < (Subset{1} << n); ++s) {
        if (!is_chain(s)) continue;
        if (!has_join(s)) {
            r.via_chains = false;
            r.chain_without_join = s;
            break;
        }
    }
    // For finite posets the two routes are provably equivalent.
    if (r.via_chains != r.via_least)
        throw MathError("is_cpo: chain-enumeration and least-element verdicts disagree");
    return r;
}

IsCpoReport is_cpo(const FinPoset& p) { return is_cpo(p.relation()); }

FinPoset renamed(const FinPoset& p, std::string name) {
    return FinPoset::make(std::move(name), p.labels(), p.relation());
}

FinPoset chain_poset(int n, std::string name) {
    if (n < 1) throw MathError("chain needs at least one element");
    if (name.empty()) name = "chain" + std::to_string(n);
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    Relation rel(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) rel.set(i, j);
    return FinPoset::make(std::move(name), std::move(labels), std::move(rel));
}

FinPoset antichain_plus_bottom(int atoms, std::string name) {
    if (name.empty()) name = "flat" + std::to_string(atoms);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(atoms) + 1);
    for (int i = 0; i <= atoms; ++i) labels.push_back(std::to_string(i));
    Relation rel(atoms + 1);
    for (int i = 1; i <= atoms; ++i) rel.set(0, i);
    return FinPoset::make(std::move(name), std::move(labels), std::move(rel));
}

FinPoset one_point_poset(std::string name) {
    return FinPoset::make(std::move(name), {"0"}, Relation(1));
}

FinPoset remark_three_element_cpo() { return antichain_plus_bottom(2, "A"); }

}  // namespace cpokit
