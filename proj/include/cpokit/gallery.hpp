#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cpokit/report.hpp"
#include "cpokit/symbolic.hpp"

namespace cpokit {

// Eventually periodic infinite binary branch: prefix bits followed by the
// period repeated forever.
struct BranchDescriptor {
    std::vector<int> prefix;
    std::vector<int> period;
    int bit(std::uint64_t pos) const {
        return pos < prefix.size() ? prefix[pos]
                                   : period[(pos - prefix.size()) % period.size()];
    }
};

// Almost-disjoint family of subsets of N realized as binary tree branches:
// member x owns the code set A_x = { encode(x restricted to len) : len >= 1 }
// where encode prepends a leading 1 bit. Distinct branches share exactly
// their common prefixes, so pairwise intersections are finite and equal in
// size to the divergence point.
class AlmostDisjointFamily {
  public:
    // n members, 2 <= n <= 64: member i has the width-padded binary expansion
    // of i as prefix and period "10". Padding keeps the prefixes pairwise
    // distinct as infinite strings.
    static AlmostDisjointFamily build(int n);

    int size() const { return static_cast<int>(members_.size()); }
    const BranchDescriptor& member(int i) const { return members_[static_cast<std::size_t>(i)]; }

    static std::uint64_t encode(const std::vector<int>& bits);
    std::uint64_t code_at(int member, std::uint64_t len) const;  // encode of the len-prefix
    // Length of the longest common prefix of two branches.
    std::uint64_t divergence(int x, int y) const;
    // Code sets truncated at prefix length max_len, ascending.
    std::vector<std::uint64_t> codes_up_to(int member, std::uint64_t max_len) const;
    // Exact intersection of the truncated code sets.
    std::vector<std::uint64_t> intersection(int x, int y, std::uint64_t max_len) const;
    // Does the code's bit string lie on the member's branch?
    bool code_on_branch(int member, std::uint64_t code) const;
    bool code_on_any_branch(std::uint64_t code) const;

  private:
    std::vector<BranchDescriptor> members_;
};

// Remark-style two-step closure example: the antichain (N x N) + 0 included
// into ((N u {inf}) x N) u {inf} u {0} with row chains joining at (inf, n)
// and the inf column joining at Top.
std::shared_ptr<const SymbolicCpo> two_step_source();
std::shared_ptr<const SymbolicCpo> two_step_codomain();
SymbolicCpoMap two_step_inclusion();
StageCertificate two_step_certificate();

// First tower step: K0 = aleph_0 * 2 with atoms the family's branch codes,
// K1 = K0 plus a formal join per member, each branch ordered as an omega
// chain by the natural order of its codes.
std::shared_ptr<const SymbolicCpo> k0_cpo(const AlmostDisjointFamily& fam);
std::shared_ptr<const SymbolicCpo> k1_cpo(const AlmostDisjointFamily& fam);
SymbolicCpoMap k0_to_k1(const AlmostDisjointFamily& fam);
StageCertificate k1_certificate(const AlmostDisjointFamily& fam);

// Executable demos; every assertion the construction promises is a check
// entry, so report.ok() is the demo verdict.
Report demo_generator_2_vs_3();
Report demo_two_step_closure(int fuel = kDefaultFuel);
Report demo_ad_family(int members = 16);
Report demo_ad_quotient_step(int members = 16, int fuel = kDefaultFuel);
Report demo_epi_mono_not_iso();

}  // namespace cpokit
