#pragma once

#include <optional>

#include "cpokit/cpomap.hpp"

namespace cpokit {

// (epimorphism, strong monomorphism) factorization f = m o e through the
// closure of the image, with order inherited from the codomain. For finite
// posets the closure is the image itself.
struct Factorization {
    FinCpoMap original;
    FinPoset mid;        // C
    FinCpoMap epi_part;  // e : A -> C, codomain restriction
    FinCpoMap mono_part; // m : C -> B, inclusion
};

Factorization epi_strongmono_factorize(const FinCpoMap& f);

// Commutative square m o u = v o e.
struct Square {
    FinCpoMap u;  // A -> C
    FinCpoMap e;  // A -> B
    FinCpoMap m;  // C -> D
    FinCpoMap v;  // B -> D
};

// Searches hom(B, C) for a diagonal d with d o e = u and m o d = v.
// Returns the lexicographically least one, or nullopt if none exists.
// Throws NotCommuting if the square does not commute.
std::optional<FinCpoMap> diagonal_fill(const Square& square);

}  // namespace cpokit
