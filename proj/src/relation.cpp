#include "cpokit/relation.hpp"

#include <stdexcept>

namespace cpokit {

Relation::Relation(int n) : rows_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > 64) throw std::length_error("Relation supports at most 64 elements");
    for (int i = 0; i < n; ++i) rows_[i] = Subset{1} << i;
}

void Relation::set(int i, int j, bool v) {
    if (v)
        rows_[i] |= Subset{1} << j;
    else
        rows_[i] &= ~(Subset{1} << j);
}

Subset Relation::below(int j) const {
    Subset s = 0;
    for (int i = 0; i < size(); ++i)
        if (at(i, j)) s = subset_with(s, i);
    return s;
}

bool Relation::reflexive() const {
    for (int i = 0; i < size(); ++i)
        if (!at(i, i)) return false;
    return true;
}

bool Relation::antisymmetric() const {
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (at(i, j) && at(j, i)) return false;
    return true;
}

bool Relation::transitive() const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        Subset reach = rows_[i];
        Subset want = reach;
        for (int j = 0; j < n; ++j)
            if (subset_has(reach, j)) want |= rows_[j];
        if (want != reach) return false;
    }
    return true;
}

Relation Relation::transitive_closure() const {
    Relation r = *this;
    const int n = size();
    for (int i = 0; i < n; ++i) r.rows_[i] |= Subset{1} << i;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (subset_has(r.rows_[i], k)) r.rows_[i] |= r.rows_[k];
    return r;
}

Relation Relation::transitive_reduction() const {
    // cover pairs of a partial order: i < j with no k strictly between
    const int n = size();
    Relation red(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !at(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (k != i && k != j && at(i, k) && at(k, j)) cover = false;
            if (cover) red.set(i, j);
        }
    }
    for (int i = 0; i < n; ++i) red.set(i, i, false);
    return red;
}

std::optional<int> Relation::least() const {
    const Subset all = full_subset(size());
    for (int i = 0; i < size(); ++i)
        if (rows_[i] == all) return i;
    return std::nullopt;
}

}  // namespace cpokit
