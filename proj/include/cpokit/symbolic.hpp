#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cpokit/cpomap.hpp"
#include "cpokit/report.hpp"

namespace cpokit {

// Finite term over the constructors used by the shipped countable examples.
// Pair's first coordinate admits the symbol infinity.
struct Term {
    enum class Kind : std::uint8_t { Bottom, Top, Atom, Pair, Join };
    static constexpr std::uint64_t kInf = ~std::uint64_t{0};

    Kind kind = Kind::Bottom;
    std::uint64_t a = 0, b = 0;

    static Term bottom() { return {}; }
    static Term top() { return {Kind::Top, 0, 0}; }
    static Term atom(std::uint64_t n) { return {Kind::Atom, n, 0}; }
    static Term pair(std::uint64_t m, std::uint64_t n) { return {Kind::Pair, m, n}; }
    static Term join(std::uint64_t family_member) { return {Kind::Join, family_member, 0}; }

    auto operator<=>(const Term&) const = default;
    std::string str() const;
};

// Decidable stage predicate on terms, carried by name so example-supplied
// containment tests can recognize the stages they know exactly.
struct StagePredicate {
    std::string id;
    std::function<bool(const Term&)> contains;
};

// Parametric omega-chain: for each parameter p the terms at(p, 0) < at(p, 1)
// < ... with join(p) their least upper bound. The containment test decides
// whether the whole chain lies inside a stage; the default samples up to
// fuel, examples override it with exact knowledge of their stages.
struct ChainFamily {
    std::string id;
    std::function<std::vector<std::uint64_t>(int fuel)> params;
    std::function<Term(std::uint64_t p, std::uint64_t i)> at;
    std::function<Term(std::uint64_t p)> join;
    std::function<bool(std::uint64_t p, const StagePredicate&, int fuel)> contained_in;
    std::uint64_t max_index = ~std::uint64_t{0};  // sampling cap for at()

    std::uint64_t index_cap(int fuel) const {
        const std::uint64_t f = static_cast<std::uint64_t>(fuel);
        return f < max_index ? f : max_index;
    }
};

// Term-presented countable cpo. The chain families form the declared basis:
// the adequacy note records the (per-example) claim that every nontrivial
// directed supremum is the join of a basis chain cofinal in it. All verdicts
// downstream are sound relative to that declaration.
struct SymbolicCpo {
    std::string name;
    Term bottom;
    std::function<bool(const Term&)> well_formed;
    std::function<bool(const Term&, const Term&)> leq;
    std::function<std::vector<Term>(int fuel)> enumerate;  // deterministic
    std::vector<ChainFamily> families;
    std::string adequacy_note;

    const ChainFamily& family(const std::string& id) const;
};

// Map between symbolic cpos with an image resolution per source basis chain:
// either its image is cofinal in a target chain, or eventually constant.
struct SymbolicCpoMap {
    struct TargetChain {
        std::string dst_family;
        std::function<std::uint64_t(std::uint64_t)> param_map;
    };
    struct EventuallyConstant {
        std::function<Term(std::uint64_t p)> value;
    };

    std::string name;
    std::shared_ptr<const SymbolicCpo> src, dst;
    std::function<Term(const Term&)> apply;
    std::map<std::string, std::variant<TargetChain, EventuallyConstant>> family_images;
};

// Certificate for a staged closure computation S_0 c= S_1 c= ... c= S_n.
// Witnesses justify the elements added at each stage; refutations certify
// claimed non-memberships by a case analysis over every basis family.
struct StageWitness {
    int stage;           // the stage whose new elements the family produces
    std::string family;
};

struct RefutationCase {
    enum Kind { NoInstanceContained, AllJoinsDiffer } kind;
};

struct Refutation {
    Term non_member;
    int stage;  // claimed: non_member not in S_stage
    std::map<std::string, RefutationCase> cases;  // one per basis family
};

struct StageCertificate {
    std::vector<StagePredicate> stages;
    std::vector<StageWitness> witnesses;
    std::vector<Refutation> refutations;
};

// Sampled validation of the order oracle and all chain families.
Report validate_symbolic(const SymbolicCpo& c, int fuel);

struct ClosureVerdict {
    bool stages_valid = false;
    bool refutations_valid = false;
    bool closed = false;             // final stage closed under basis joins
    int closure_stage = -1;          // index of the first closed stage
    bool full_carrier = false;       // final stage covers all enumerated terms
    Report report;
};

// Verifies the certificate up to fuel: stage growth is witnessed, the final
// stage is closed under basis-chain joins, refutation case analyses cover
// every family and are consistent with sampled instances. The verdict is
// sound relative to the declared chain-basis adequacy.
ClosureVerdict symbolic_closure_verify(const SymbolicCpo& c, const StagePredicate& start,
                                       const StageCertificate& cert, int fuel);

struct EpiVerdict {
    bool epi = false;  // closure of the image reaches the full carrier
    bool mono_sampled = false;
    bool surjective_sampled = false;
    bool order_reflecting_sampled = false;
    bool iso_sampled = false;
    ClosureVerdict closure;
    Report report;
};

// Epi check per the closure characterization, on the certificate whose S_0
// is the image predicate. Also reports sampled mono/iso flags.
EpiVerdict symbolic_is_epi(const SymbolicCpoMap& f, const StageCertificate& cert, int fuel);

// Finite tier embedding: a FinPoset as a SymbolicCpo with empty chain basis,
// and a FinCpoMap as a SymbolicCpoMap, with the matching one-stage image
// certificate. symbolic_is_epi then agrees with classify's epi flag.
std::shared_ptr<const SymbolicCpo> lift(const FinPoset& p);
SymbolicCpoMap lift(const FinCpoMap& f, std::shared_ptr<const SymbolicCpo> src,
                    std::shared_ptr<const SymbolicCpo> dst);
StageCertificate image_certificate(const SymbolicCpoMap& f, int fuel);

inline constexpr int kDefaultFuel = 64;
inline constexpr std::uint64_t kDefaultSeed = 42;

}  // namespace cpokit
