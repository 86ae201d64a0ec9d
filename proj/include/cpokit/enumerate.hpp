#pragma once

#include <vector>

#include "cpokit/canonical.hpp"
#include "cpokit/poset.hpp"

namespace cpokit {

inline constexpr int kMaxEnumerationSize = 6;

// All pointed posets (posets with a least element) with exactly n elements,
// one per isomorphism class, in ascending canonical-form order. Poset i is
// named "P<n>_<i>". n <= 6.
std::vector<FinPoset> enumerate_posets(int n);

// All pointed posets with 1..max_n elements, cached, ordered by size then
// canonical form. The cache serves the classify/census machinery, which needs
// one size more (7) than the public enumeration bound.
const std::vector<FinPoset>& pointed_corpus(int max_n);

inline constexpr int kMaxCorpusSize = 7;

}  // namespace cpokit
