#pragma once

#include <optional>

#include "cpokit/cpomap.hpp"

namespace cpokit {

// Generator: for each pair of distinct parallel maps f, g : A -> B over the
// corpus of pointed posets with at most n elements, some h : G -> A has
// f o h != g o h.
bool is_generator(const FinPoset& g, int corpus_bound);

// Strong generator: additionally, no proper subobject m : A -> B admits
// factorizations of every map G -> B. A failure returns the witnessing
// proper subobject.
struct ProperSubobject {
    FinPoset sub;   // A
    FinCpoMap mono; // m : A -> B
    FinPoset obj;   // B
};

struct StrongGeneratorResult {
    bool is_strong;
    std::optional<ProperSubobject> witness;  // set when is_strong is false
};

StrongGeneratorResult is_strong_generator(const FinPoset& g, int corpus_bound);

// The constructive separator: for a proper subobject f : A -> B, a map
// s : 3 -> B that does not factorize through f. If f misses an element b,
// s sends 1 and 2 to b; if f is a non-order-reflecting bijection, s sends
// 1, 2 to f(a1) < f(a2) for incomparable a1, a2. Verified by hom search.
FinCpoMap separating_morphism(const FinCpoMap& f);

// Whether s factors through the mono m (i.e. s = m o u for a cpo map u).
bool factors_through_mono(const FinCpoMap& s, const FinCpoMap& m);

}  // namespace cpokit
