#pragma once

#include <vector>

#include "cpokit/poset.hpp"

namespace cpokit {

// One element added during closure, with the directed subset it is a join of.
struct ClosureWitness {
    int stage;       // the stage at which the element first appears (>= 1)
    int element;
    Subset directed; // nonempty directed subset of the previous stage
};

// Staged record of a directed-join closure computation.
// stages[0] = start; stages[k+1] = stages[k] plus joins of its nonempty
// directed subsets; the last stage is closed under directed joins.
struct ClosureTrace {
    FinPoset ambient;
    Subset start;
    std::vector<Subset> stages;
    std::vector<ClosureWitness> witnesses;

    Subset closure() const { return stages.back(); }
    int length() const { return static_cast<int>(stages.size()); }
};

// Directed subsets are taken nonempty; the empty chain only ever contributes
// the bottom, which every image of a cpo map already contains.
ClosureTrace directed_closure(const FinPoset& p, Subset start);

}  // namespace cpokit
