#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpokit/relation.hpp"

namespace cpokit {

// Finite pointed poset: a finite partial order with a least element.
// Finiteness makes it a cpo (every chain, including the empty one, has a
// join; the empty chain's join is the bottom).
class FinPoset {
  public:
    // Validates that leq is a partial order with a least element.
    static FinPoset make(std::string name, std::vector<std::string> labels, Relation leq);

    // Builds leq as the reflexive-transitive closure of the cover pairs and
    // validates the declared bottom. Rejects cycles, duplicate labels, and a
    // bottom that is not below every element.
    static FinPoset from_covers(std::string name, std::vector<std::string> labels,
                                const std::string& bottom,
                                std::span<const std::pair<std::string, std::string>> covers);

    int size() const { return leq_.size(); }
    const std::string& name() const { return name_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(const std::string& label) const;

    bool leq(int i, int j) const { return leq_.at(i, j); }
    bool lt(int i, int j) const { return i != j && leq_.at(i, j); }
    int bottom() const { return bottom_; }
    const Relation& relation() const { return leq_; }
    Relation covers() const { return leq_.transitive_reduction(); }

    Subset carrier() const { return full_subset(size()); }
    Subset up_set(int i) const { return leq_.above(i); }
    Subset down_set(int i) const { return leq_.below(i); }

    bool is_chain(Subset s) const;     // totally ordered subset
    bool is_directed(Subset s) const;  // nonempty, pairwise upper bounds within s
    Subset upper_bounds(Subset s) const;
    // Least upper bound in the ambient poset, if it exists.
    std::optional<int> join_of(Subset s) const;
    Subset maximal_elements(Subset s) const;

    bool operator==(const FinPoset&) const = default;

  private:
    FinPoset(std::string name, std::vector<std::string> labels, Relation leq, int bottom)
        : name_(std::move(name)), labels_(std::move(labels)), leq_(std::move(leq)), bottom_(bottom) {}

    std::string name_;
    std::vector<std::string> labels_;
    Relation leq_;
    int bottom_;
};

// Verdict of the chain-completeness check, computed two ways: directly from
// the definition (every chain has a join) and via the finite-poset shortcut
// (a least element exists). The two verdicts are asserted to agree.
struct IsCpoReport {
    bool via_chains;
    bool via_least;
    std::optional<Subset> chain_without_join;  // witness when via_chains is false
    bool is_cpo() const { return via_chains; }
};

// The relation must be a partial order; a bottom is not assumed.
IsCpoReport is_cpo(const Relation& leq);
IsCpoReport is_cpo(const FinPoset& p);

FinPoset renamed(const FinPoset& p, std::string name);

// Common shapes.
FinPoset chain_poset(int n, std::string name = "");              // 0 < 1 < ... < n-1
FinPoset antichain_plus_bottom(int atoms, std::string name = "");  // bottom + atoms
FinPoset one_point_poset(std::string name = "1");
FinPoset remark_three_element_cpo();  // bottom with two incomparable elements

}  // namespace cpokit
