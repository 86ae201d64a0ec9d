#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cpokit/poset.hpp"

namespace cpokit {

// Isomorphism-invariant representative: the lexicographically least row-major
// encoding of the order relation over all relabelings. Two finite pointed
// posets are order-isomorphic iff their canonical forms are equal.
struct CanonicalForm {
    int n = 0;
    std::string bits;  // n*n characters, '0'/'1'

    auto operator<=>(const CanonicalForm&) const = default;
    std::string key() const { return std::to_string(n) + ":" + bits; }
};

CanonicalForm canonicalize(const FinPoset& p);

// The same poset relabeled with canonical integer labels "0".."n-1".
FinPoset canonical_poset(const FinPoset& p, std::string name = "");

bool isomorphic(const FinPoset& a, const FinPoset& b);

// Relabel by a permutation: element i of p becomes element perm[i].
FinPoset relabel(const FinPoset& p, const std::vector<int>& perm, std::string name = "");

}  // namespace cpokit
