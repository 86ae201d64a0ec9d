#pragma once

#include <span>
#include <vector>

#include "cpokit/cpomap.hpp"

namespace cpokit {

// Coproduct in CPO: disjoint union with all bottoms identified.
struct Coproduct {
    FinPoset object;
    std::vector<FinCpoMap> injections;
};

Coproduct coproduct(std::span<const FinPoset> parts);

// Coequalizer of a parallel pair f, g : A -> B. The quotient is computed by
// iterated collapse: merge f(a) ~ g(a), close the induced class relation
// transitively, merge classes on order-cycles, repeat to antisymmetry.
struct Coequalizer {
    FinPoset object;  // Q
    FinCpoMap q;      // B -> Q
};

Coequalizer coequalizer(const FinCpoMap& f, const FinCpoMap& g);

// The unique u : Q -> T with u o q = h, for h coequalizing the pair that
// produced Q. Throws if h does not coequalize it.
FinCpoMap induced_through(const Coequalizer& c, const FinCpoMap& h);

struct Pushout {
    FinPoset object;
    FinCpoMap leg1;  // B1 -> D
    FinCpoMap leg2;  // B2 -> D
};

// Pushout of m1 : A -> B1, m2 : A -> B2, built as the coequalizer of the two
// coproduct injections precomposed with m1, m2.
Pushout pushout(const FinCpoMap& m1, const FinCpoMap& m2);

// Cokernel pair: pushout of m along itself. The legs agree iff m is epi.
struct CokernelPair {
    FinCpoMap of;
    FinPoset object;
    FinCpoMap g, h;  // B -> D
};

CokernelPair cokernel_pair(const FinCpoMap& m);

// kappa copies of the three-element chain, bottoms identified. kappa = 0
// gives the one-point poset.
FinPoset kappa_times_3(int kappa);

// Colimit of an eventually constant chain A_0 -> A_1 -> ... (all maps from
// some index on are isomorphisms): the stationary object with its cocone.
// Honors the limit-ordinal clause of the chain constructions at finite scale.
struct ChainColimit {
    FinPoset object;
    std::vector<FinCpoMap> legs;  // A_i -> object
};

ChainColimit eventually_constant_colimit(std::span<const FinCpoMap> chain);

}  // namespace cpokit
