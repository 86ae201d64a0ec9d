#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cpokit {

using Subset = std::uint64_t;  // bit i set <=> element i belongs

inline bool subset_has(Subset s, int i) { return (s >> i) & 1u; }
inline Subset subset_with(Subset s, int i) { return s | (Subset{1} << i); }
inline Subset full_subset(int n) {
    return n == 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}
inline int subset_size(Subset s) { return __builtin_popcountll(s); }

// Square boolean relation on {0,...,n-1}, rows kept as bitmasks. n <= 64.
class Relation {
  public:
    Relation() = default;
    explicit Relation(int n);  // starts as the identity (diagonal) relation

    int size() const { return static_cast<int>(rows_.size()); }
    bool at(int i, int j) const { return subset_has(rows_[i], j); }
    void set(int i, int j, bool v = true);
    Subset row(int i) const { return rows_[i]; }  // {j : i R j}
    Subset above(int i) const { return rows_[i]; }
    Subset below(int j) const;  // {i : i R j}

    bool reflexive() const;
    bool antisymmetric() const;
    bool transitive() const;
    bool is_partial_order() const {
        return reflexive() && antisymmetric() && transitive();
    }

    Relation transitive_closure() const;    // reflexive-transitive
    Relation transitive_reduction() const;  // valid for partial orders

    // Index of the least element, if one exists.
    std::optional<int> least() const;

    bool operator==(const Relation&) const = default;

  private:
    std::vector<Subset> rows_;
};

}  // namespace cpokit
