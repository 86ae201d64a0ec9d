#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cpokit/colimits.hpp"
#include "cpokit/cpomap.hpp"

namespace cpokit {

// One step of the coequalizer-chain normalization: the collapsed pair of
// maps 2 -> A_alpha, the coequalizer step, and the induced map to the target.
struct QuotientChainStep {
    FinCpoMap g, h;        // 2 -> A_alpha, distinct, e_alpha o g = e_alpha o h
    FinCpoMap step;        // f_{alpha,alpha+1} : A_alpha -> A_{alpha+1}
    FinCpoMap induced;     // e_{alpha+1} : A_{alpha+1} -> A
};

// Record of a full normalization run out of kappa * 3.
struct QuotientChainTrace {
    int kappa = 0;
    std::uint64_t seed = 0;          // seed of the synthesized input, when any
    FinPoset a0;                     // kappa * 3
    FinCpoMap e0;                    // the extremal epi being normalized
    std::vector<QuotientChainStep> steps;
    FinCpoMap final_iso;             // e_alpha once it is an isomorphism
    std::vector<int> sizes;          // |A_0|, |A_1|, ...

    // f_{0,alpha} composites, f_{0,0} = id.
    std::vector<FinCpoMap> from_start;
};

// Lexicographically least pair of distinct maps g, h : 2 -> A with
// e o g = e o h; nullopt when e is injective.
std::optional<std::pair<FinCpoMap, FinCpoMap>> find_collapsing_pair(const FinCpoMap& e);

// Theorem-style normalization: repeatedly coequalize a collapsing pair and
// pass to the induced map until it is an isomorphism. Requires the source to
// be kappa * 3 and e0 to be an extremal epimorphism; terminates in at most
// 2*kappa + 1 steps because sizes strictly decrease.
QuotientChainTrace normalize_extremal_epi(const FinCpoMap& e0);

// Number of extremal quotients of kappa * 3 up to isomorphism, found by
// enumerating surjections into the corpus of pointed posets of size
// <= 2*kappa + 1 and keeping the extremal ones. kappa <= 3.
struct QuotientCensus {
    int kappa;
    int count;
    int max_size;                    // largest codomain observed
    std::vector<FinPoset> quotients; // canonical representatives, ordered
};

QuotientCensus quotient_census(int kappa);

// Deterministic pseudo-random extremal epi out of kappa * 3, synthesized by
// composing random surjective collapse steps (each a coequalizer, hence the
// composite is a strong epi). Verified extremal before returning.
FinCpoMap random_extremal_epi(int kappa, std::uint64_t seed);

}  // namespace cpokit
