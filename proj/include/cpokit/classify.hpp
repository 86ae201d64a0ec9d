#pragma once

#include <string>

#include "cpokit/cpomap.hpp"

namespace cpokit {

// Morphism classification per the categorical characterizations:
//   mono         <=> injective
//   epi          <=> closure of the image under directed joins is the codomain
//                    (for finite posets: surjective)
//   iso          <=> order-reflecting bijection
//   strong_mono  <=> order-embedding
//   extremal_epi <=> epi and every mono through which it factors is an iso,
//                    decided by enumerating monos from corpus posets of size
//                    <= |codomain| into the codomain
//   strong_epi   reported equal to extremal_epi (they coincide; the
//                 diagonalization route is checked separately by the sweeps)
struct Classification {
    bool mono = false;
    bool epi = false;
    bool iso = false;
    bool strong_mono = false;
    bool strong_epi = false;
    bool extremal_epi = false;
};

Classification classify(const FinCpoMap& f);

// Stable key=value line for golden-file output.
std::string to_key_value(const Classification& c);

// Second route to extremality: a surjection is an extremal epi iff the
// codomain order is exactly the reflexive-transitive closure of the
// pushforward of the source order. Cross-checked against classify's
// mono-enumeration route on the corpus; used where the inner loop matters.
bool extremal_epi_via_generated_order(const FinCpoMap& f);

// Mono-enumeration route, exposed for the cross-check tests.
bool extremal_epi_via_mono_enumeration(const FinCpoMap& f);

}  // namespace cpokit
