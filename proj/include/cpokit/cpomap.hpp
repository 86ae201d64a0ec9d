#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cpokit/poset.hpp"

namespace cpokit {

// Bottom-preserving monotone map between finite pointed posets. Between
// finite posets these are exactly the cpo maps: every chain of the source
// contains its maximum, so monotonicity plus bottom-preservation already
// gives preservation of all chain joins (asserted by preserves_chain_joins).
class FinCpoMap {
  public:
    static FinCpoMap make(std::string name, FinPoset src, FinPoset dst, std::vector<int> table);
    static FinCpoMap identity(const FinPoset& p);

    const std::string& name() const { return name_; }
    const FinPoset& src() const { return src_; }
    const FinPoset& dst() const { return dst_; }
    const std::vector<int>& table() const { return table_; }
    int apply(int i) const { return table_[i]; }

    Subset image() const;
    bool injective() const;
    bool surjective() const;
    bool order_reflecting() const;  // f(x) <= f(y) implies x <= y
    bool order_embedding() const;   // x <= y iff f(x) <= f(y)

    // Exhaustive check that joins of all chains are preserved.
    bool preserves_chain_joins() const;

    bool same_arrow_as(const FinCpoMap& other) const {
        return src_ == other.src_ && dst_ == other.dst_ && table_ == other.table_;
    }

  private:
    FinCpoMap(std::string name, FinPoset src, FinPoset dst, std::vector<int> table)
        : name_(std::move(name)), src_(std::move(src)), dst_(std::move(dst)), table_(std::move(table)) {}

    std::string name_;
    FinPoset src_, dst_;
    std::vector<int> table_;
};

FinCpoMap compose(const FinCpoMap& g, const FinCpoMap& f);  // g after f

inline constexpr int kMaxHomSize = 8;

// Table-level hom enumeration: calls fn once per bottom-preserving monotone
// table src -> dst, in lexicographic table order. Used by the sweep kernels
// to avoid materializing map objects.
void for_each_hom_table(const FinPoset& src, const FinPoset& dst,
                        const std::function<void(const std::vector<int>&)>& fn);

// All cpo maps src -> dst in lexicographic table order.
std::vector<FinCpoMap> hom_enumerate(const FinPoset& src, const FinPoset& dst);
std::size_t hom_count(const FinPoset& src, const FinPoset& dst);

bool table_monotone(const FinPoset& src, const FinPoset& dst, const std::vector<int>& table);

}  // namespace cpokit
