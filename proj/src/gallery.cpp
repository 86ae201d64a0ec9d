#include "cpokit/gallery.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "cpokit/canonical.hpp"
#include "cpokit/classify.hpp"
#include "cpokit/colimits.hpp"
#include "cpokit/enumerate.hpp"
#include "cpokit/errors.hpp"
#include "cpokit/factorize.hpp"
#include "cpokit/generators.hpp"

namespace cpokit {

AlmostDisjointFamily AlmostDisjointFamily::build(int n) {
    if (n < 2 || n > 64) throw BoundTooLarge("family size must be between 2 and 64");
    int width = 1;
    while ((1 << width) < n) ++width;
    AlmostDisjointFamily fam;
    for (int i = 0; i < n; ++i) {
        BranchDescriptor b;
        for (int k = width - 1; k >= 0; --k) b.prefix.push_back((i >> k) & 1);
        b.period = {1, 0};
        fam.members_.push_back(std::move(b));
    }
    return fam;
}

std::uint64_t AlmostDisjointFamily::encode(const std::vector<int>& bits) {
    if (bits.size() > 62) throw BoundTooLarge("bit string too long to encode");
    std::uint64_t code = 1;
    for (int b : bits) code = (code << 1) | static_cast<std::uint64_t>(b);
    return code;
}

std::uint64_t AlmostDisjointFamily::code_at(int member, std::uint64_t len) const {
    if (len < 1 || len > 62) throw BoundTooLarge("prefix length out of range");
    const BranchDescriptor& b = members_[static_cast<std::size_t>(member)];
    std::uint64_t code = 1;
    for (std::uint64_t p = 0; p < len; ++p)
        code = (code << 1) | static_cast<std::uint64_t>(b.bit(p));
    return code;
}

std::uint64_t AlmostDisjointFamily::divergence(int x, int y) const {
    const BranchDescriptor& bx = members_[static_cast<std::size_t>(x)];
    const BranchDescriptor& by = members_[static_cast<std::size_t>(y)];
    // Equal-width prefixes with a common period: branches agree forever once
    // they agree through the prefix, and the build keeps prefixes distinct.
    const std::uint64_t horizon = bx.prefix.size() + by.prefix.size() + 4;
    for (std::uint64_t p = 0; p < horizon; ++p)
        if (bx.bit(p) != by.bit(p)) return p;
    throw MathError("branches do not diverge (family members must be distinct)");
}

std::vector<std::uint64_t> AlmostDisjointFamily::codes_up_to(int member,
                                                             std::uint64_t max_len) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t len = 1; len <= max_len; ++len) out.push_back(code_at(member, len));
    return out;
}

std::vector<std::uint64_t> AlmostDisjointFamily::intersection(int x, int y,
                                                              std::uint64_t max_len) const {
    const auto a = codes_up_to(x, max_len);
    const auto b = codes_up_to(y, max_len);
    std::vector<std::uint64_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool AlmostDisjointFamily::code_on_branch(int member, std::uint64_t code) const {
    if (code < 2) return false;  // codes of nonempty prefixes start at 2
    const int len = std::bit_width(code) - 1;
    const BranchDescriptor& b = members_[static_cast<std::size_t>(member)];
    for (int p = 0; p < len; ++p) {
        const int bit = static_cast<int>((code >> (len - 1 - p)) & 1);
        if (bit != b.bit(static_cast<std::uint64_t>(p))) return false;
    }
    return true;
}

bool AlmostDisjointFamily::code_on_any_branch(std::uint64_t code) const {
    for (int m = 0; m < size(); ++m)
        if (code_on_branch(m, code)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Two-step closure example (the one-step-closure refutation).

namespace {

constexpr std::uint64_t kInf = Term::kInf;

bool two_step_pair_leq(const Term& x, const Term& y) {
    // rows: same n, m grows up to inf; inf column: climbs in n
    if (x.b == y.b && (y.a == kInf || (x.a != kInf && x.a <= y.a))) return true;
    if (y.a == kInf && x.b <= y.b) return true;
    return x == y;
}

}  // namespace

std::shared_ptr<const SymbolicCpo> two_step_source() {
    auto c = std::make_shared<SymbolicCpo>();
    c->name = "NxN+0";
    c->bottom = Term::bottom();
    auto wf = [](const Term& t) {
        return t.kind == Term::Kind::Bottom || (t.kind == Term::Kind::Pair && t.a != kInf);
    };
    c->well_formed = wf;
    c->leq = [wf](const Term& x, const Term& y) {
        if (!wf(x) || !wf(y)) throw IllFormedTerm("term outside the antichain cpo");
        if (x == y) return true;
        return x.kind == Term::Kind::Bottom;  // the nonzero part is an antichain
    };
    c->enumerate = [](int fuel) {
        std::vector<Term> ts{Term::bottom()};
        for (std::uint64_t w = 0; static_cast<int>(ts.size()) < fuel; ++w)
            for (std::uint64_t m = 0; m <= w && static_cast<int>(ts.size()) < fuel; ++m)
                ts.push_back(Term::pair(m, w - m));
        return ts;
    };
    c->adequacy_note = "antichain plus bottom: no nontrivial directed suprema";
    return c;
}

std::shared_ptr<const SymbolicCpo> two_step_codomain() {
    auto c = std::make_shared<SymbolicCpo>();
    c->name = "(N+inf)xN+Top+0";
    c->bottom = Term::bottom();
    auto wf = [](const Term& t) {
        return t.kind == Term::Kind::Bottom || t.kind == Term::Kind::Top ||
               t.kind == Term::Kind::Pair;
    };
    c->well_formed = wf;
    c->leq = [wf](const Term& x, const Term& y) {
        if (!wf(x) || !wf(y)) throw IllFormedTerm("term outside the two-step codomain");
        if (x == y || x.kind == Term::Kind::Bottom || y.kind == Term::Kind::Top) return true;
        if (x.kind == Term::Kind::Top || y.kind == Term::Kind::Bottom) return false;
        return two_step_pair_leq(x, y);
    };
    c->enumerate = [](int fuel) {
        std::vector<Term> ts{Term::bottom(), Term::top()};
        for (std::uint64_t w = 0; static_cast<int>(ts.size()) < fuel; ++w) {
            ts.push_back(Term::pair(kInf, w));
            for (std::uint64_t m = 0; m <= w && static_cast<int>(ts.size()) < fuel; ++m)
                ts.push_back(Term::pair(m, w - m));
        }
        if (static_cast<int>(ts.size()) > fuel) ts.resize(static_cast<std::size_t>(fuel));
        return ts;
    };

    ChainFamily row;
    row.id = "row";
    row.params = [](int fuel) {
        std::vector<std::uint64_t> ps;
        for (int n = 0; n < fuel; ++n) ps.push_back(static_cast<std::uint64_t>(n));
        return ps;
    };
    row.at = [](std::uint64_t n, std::uint64_t i) { return Term::pair(i, n); };
    row.join = [](std::uint64_t n) { return Term::pair(kInf, n); };
    row.contained_in = [](std::uint64_t, const StagePredicate& s, int) {
        // every row lies inside the image, hence inside every stage
        return s.id == "image" || s.id == "one-step" || s.id == "all";
    };

    ChainFamily column;
    column.id = "column";
    column.params = [](int) { return std::vector<std::uint64_t>{0}; };
    column.at = [](std::uint64_t, std::uint64_t i) { return Term::pair(kInf, i); };
    column.join = [](std::uint64_t) { return Term::top(); };
    column.contained_in = [](std::uint64_t, const StagePredicate& s, int) {
        return s.id == "one-step" || s.id == "all";  // not inside the image
    };

    c->families = {std::move(row), std::move(column)};
    c->adequacy_note =
        "directed sets without maxima are cofinal in a row or in the inf column";
    return c;
}

SymbolicCpoMap two_step_inclusion() {
    SymbolicCpoMap m;
    m.name = "iota";
    m.src = two_step_source();
    m.dst = two_step_codomain();
    m.apply = [](const Term& t) { return t; };
    return m;
}

StageCertificate two_step_certificate() {
    StageCertificate cert;
    cert.stages.push_back(StagePredicate{"image", [](const Term& t) {
        return t.kind == Term::Kind::Bottom ||
               (t.kind == Term::Kind::Pair && t.a != kInf);
    }});
    cert.stages.push_back(StagePredicate{"one-step", [](const Term& t) {
        return t.kind == Term::Kind::Bottom || t.kind == Term::Kind::Pair;
    }});
    cert.stages.push_back(StagePredicate{"all", [](const Term&) { return true; }});
    cert.witnesses.push_back({1, "row"});
    cert.witnesses.push_back({2, "column"});

    Refutation top_not_one_step;
    top_not_one_step.non_member = Term::top();
    top_not_one_step.stage = 1;
    top_not_one_step.cases["row"] = {RefutationCase::AllJoinsDiffer};
    top_not_one_step.cases["column"] = {RefutationCase::NoInstanceContained};
    cert.refutations.push_back(std::move(top_not_one_step));
    return cert;
}

// ---------------------------------------------------------------------------
// First almost-disjoint tower step K0 -> K1.

namespace {

// Is the bit string of `small` a (weak) prefix of the bit string of `big`?
bool code_prefix(std::uint64_t small, std::uint64_t big) {
    if (small < 1 || big < small) return false;
    const int ls = std::bit_width(small) - 1;
    const int lb = std::bit_width(big) - 1;
    if (ls > lb) return false;
    return (big >> (lb - ls)) == small;
}

std::vector<std::uint64_t> atom_universe(const AlmostDisjointFamily& fam, int count) {
    // ascending branch codes, deduplicated
    std::set<std::uint64_t> codes;
    std::uint64_t len = 1;
    while (static_cast<int>(codes.size()) < count && len <= 40) {
        for (int m = 0; m < fam.size(); ++m) codes.insert(fam.code_at(m, len));
        ++len;
    }
    std::vector<std::uint64_t> out(codes.begin(), codes.end());
    if (static_cast<int>(out.size()) > count) out.resize(static_cast<std::size_t>(count));
    return out;
}

}  // namespace

std::shared_ptr<const SymbolicCpo> k0_cpo(const AlmostDisjointFamily& fam) {
    auto c = std::make_shared<SymbolicCpo>();
    c->name = "K0";
    c->bottom = Term::bottom();
    auto wf = [fam](const Term& t) {
        return t.kind == Term::Kind::Bottom ||
               (t.kind == Term::Kind::Atom && fam.code_on_any_branch(t.a));
    };
    c->well_formed = wf;
    c->leq = [wf](const Term& x, const Term& y) {
        if (!wf(x) || !wf(y)) throw IllFormedTerm("term outside K0");
        if (x == y) return true;
        return x.kind == Term::Kind::Bottom;
    };
    c->enumerate = [fam](int fuel) {
        std::vector<Term> ts{Term::bottom()};
        for (std::uint64_t code : atom_universe(fam, fuel - 1)) ts.push_back(Term::atom(code));
        return ts;
    };
    c->adequacy_note = "antichain plus bottom: no nontrivial directed suprema";
    return c;
}

std::shared_ptr<const SymbolicCpo> k1_cpo(const AlmostDisjointFamily& fam) {
    auto c = std::make_shared<SymbolicCpo>();
    c->name = "K1";
    c->bottom = Term::bottom();
    const int n = fam.size();
    auto wf = [fam, n](const Term& t) {
        switch (t.kind) {
            case Term::Kind::Bottom: return true;
            case Term::Kind::Atom: return fam.code_on_any_branch(t.a);
            case Term::Kind::Join: return t.a < static_cast<std::uint64_t>(n);
            default: return false;
        }
    };
    c->well_formed = wf;
    c->leq = [fam, wf](const Term& x, const Term& y) {
        if (!wf(x) || !wf(y)) throw IllFormedTerm("term outside K1");
        if (x == y || x.kind == Term::Kind::Bottom) return true;
        if (y.kind == Term::Kind::Bottom) return false;
        if (x.kind == Term::Kind::Atom && y.kind == Term::Kind::Atom)
            return code_prefix(x.a, y.a);  // branch chains ordered by extension
        if (x.kind == Term::Kind::Atom && y.kind == Term::Kind::Join)
            return fam.code_on_branch(static_cast<int>(y.a), x.a);
        return false;  // distinct formal joins are incomparable; joins sit on top
    };
    c->enumerate = [fam, n](int fuel) {
        std::vector<Term> ts{Term::bottom()};
        for (int m = 0; m < n && static_cast<int>(ts.size()) < fuel; ++m)
            ts.push_back(Term::join(static_cast<std::uint64_t>(m)));
        const int room = fuel - static_cast<int>(ts.size());
        for (std::uint64_t code : atom_universe(fam, std::max(room, 0)))
            ts.push_back(Term::atom(code));
        return ts;
    };

    ChainFamily branch;
    branch.id = "branch";
    branch.params = [n](int fuel) {
        std::vector<std::uint64_t> ps;
        for (int m = 0; m < std::min(n, fuel); ++m) ps.push_back(static_cast<std::uint64_t>(m));
        return ps;
    };
    branch.at = [fam](std::uint64_t m, std::uint64_t i) {
        return Term::atom(fam.code_at(static_cast<int>(m), i + 1));
    };
    branch.join = [](std::uint64_t m) { return Term::join(m); };
    branch.max_index = 40;  // codes of longer prefixes would overflow 64 bits
    branch.contained_in = [](std::uint64_t, const StagePredicate& s, int) {
        return s.id == "image" || s.id == "all";  // branch chains are atoms
    };
    c->families = {std::move(branch)};
    c->adequacy_note =
        "directed sets without maxima are cofinal in a branch chain of the family";
    return c;
}

SymbolicCpoMap k0_to_k1(const AlmostDisjointFamily& fam) {
    SymbolicCpoMap m;
    m.name = "f01";
    m.src = k0_cpo(fam);
    m.dst = k1_cpo(fam);
    m.apply = [](const Term& t) { return t; };
    return m;
}

StageCertificate k1_certificate(const AlmostDisjointFamily&) {
    StageCertificate cert;
    cert.stages.push_back(StagePredicate{"image", [](const Term& t) {
        return t.kind == Term::Kind::Bottom || t.kind == Term::Kind::Atom;
    }});
    cert.stages.push_back(StagePredicate{"all", [](const Term&) { return true; }});
    cert.witnesses.push_back({1, "branch"});
    return cert;
}

// ---------------------------------------------------------------------------
// Demos.

Report demo_generator_2_vs_3() {
    Report r;
    const FinPoset a = remark_three_element_cpo();
    const FinPoset three = chain_poset(3);
    const FinPoset two = chain_poset(2);
    const FinCpoMap id_map = FinCpoMap::make("id", a, three, {0, 1, 2});

    const Classification c = classify(id_map);
    r.check("id-mono", c.mono);
    r.check("id-epi", c.epi);
    r.check("id-not-iso", !c.iso);

    const auto probes = hom_enumerate(two, three);
    r.add("hom-2-3-count", probes.size());
    r.check("hom-2-3-count-is-3", probes.size() == 3);
    bool all_factor = true;
    for (const FinCpoMap& s : probes)
        if (!factors_through_mono(s, id_map)) all_factor = false;
    r.check("all-maps-2-3-factor-through-id", all_factor);

    const FinCpoMap sep = separating_morphism(id_map);
    r.add("separator-table", sep.dst().label(sep.apply(1)) + "," + sep.dst().label(sep.apply(2)));
    r.check("separator-exists-for-id", true);  // construction verifies non-factorization

    const StrongGeneratorResult g3 = is_strong_generator(three, 4);
    r.check("3-strong-generator", g3.is_strong);
    const StrongGeneratorResult g2 = is_strong_generator(two, 4);
    r.check("2-not-strong-generator", !g2.is_strong);
    if (g2.witness) {
        r.check("witness-object-is-3", isomorphic(g2.witness->obj, three));
        r.check("witness-subobject-is-A", isomorphic(g2.witness->sub, a));
        const FinCpoMap& m = g2.witness->mono;
        r.check("witness-mono-bijective-not-reflecting",
                m.injective() && m.surjective() && !m.order_reflecting());
    } else {
        r.check("witness-present", false);
    }

    // Lemma-style constructive separators exist for every proper subobject.
    bool separators_ok = true;
    long long subobjects = 0;
    for (const FinPoset& obj : pointed_corpus(4)) {
        for (const FinPoset& sub : pointed_corpus(obj.size())) {
            if (sub.size() > obj.size()) continue;
            for (const FinCpoMap& m : hom_enumerate(sub, obj)) {
                if (!m.injective()) continue;
                if (m.surjective() && m.order_reflecting()) continue;  // iso
                ++subobjects;
                try {
                    (void)separating_morphism(m);
                } catch (const MathError&) {
                    separators_ok = false;
                }
            }
        }
    }
    r.add("proper-subobjects-checked", subobjects);
    r.check("separator-for-every-proper-subobject", separators_ok);
    return r;
}

Report demo_two_step_closure(int fuel) {
    Report r;
    auto cod = two_step_codomain();
    r.absorb(validate_symbolic(*cod, fuel));

    const SymbolicCpoMap iota = two_step_inclusion();
    const StageCertificate cert = two_step_certificate();
    const EpiVerdict v = symbolic_is_epi(iota, cert, fuel);
    r.absorb(v.report);
    r.check("iota-epi", v.epi);
    r.check("iota-not-surjective", !v.surjective_sampled);
    r.check("closure-at-stage-2", v.closure.closure_stage == 2);
    r.check("top-refuted-at-stage-1", v.closure.refutations_valid);
    return r;
}

Report demo_ad_family(int members) {
    Report r;
    const AlmostDisjointFamily fam = AlmostDisjointFamily::build(members);
    r.add("members", members);

    bool distinct = true;
    for (int x = 0; x < fam.size() && distinct; ++x)
        for (int y = x + 1; y < fam.size() && distinct; ++y)
            if (fam.member(x).prefix == fam.member(y).prefix) distinct = false;
    r.check("members-distinct", distinct);

    long long pairs = 0;
    bool sizes_match = true, all_finite = true;
    for (int x = 0; x < fam.size(); ++x) {
        for (int y = x + 1; y < fam.size(); ++y) {
            ++pairs;
            const std::uint64_t d = fam.divergence(x, y);
            const auto inter = fam.intersection(x, y, d + 8);
            // Exactly the common prefixes: d of them, none beyond divergence.
            if (inter.size() != d) sizes_match = false;
            for (std::uint64_t code : inter)
                if (static_cast<std::uint64_t>(std::bit_width(code)) - 1 > d) all_finite = false;
        }
    }
    r.add("pairs", pairs);
    r.check("intersections-exactly-common-prefixes", sizes_match);
    r.check("intersections-finite", all_finite);

    // A member against itself keeps growing: sampled unboundedness.
    const auto self = fam.intersection(0, 0, 24);
    r.check("self-intersection-grows", self.size() == 24);
    return r;
}

Report demo_ad_quotient_step(int members, int fuel) {
    Report r;
    const AlmostDisjointFamily fam = AlmostDisjointFamily::build(members);
    r.add("members", members);

    auto k1 = k1_cpo(fam);
    r.absorb(validate_symbolic(*k1, fuel));

    const SymbolicCpoMap f01 = k0_to_k1(fam);
    const EpiVerdict v = symbolic_is_epi(f01, k1_certificate(fam), fuel);
    r.absorb(v.report);
    r.check("f01-mono", v.mono_sampled);
    r.check("f01-epi", v.epi);
    r.check("closure-at-stage-1", v.closure.closure_stage == 1);
    r.check("f01-not-iso", !v.iso_sampled);
    r.check("f01-not-order-reflecting", !v.order_reflecting_sampled);

    // x_A pairwise distinct, witnessed by an atom beyond the divergence point.
    bool joins_distinct = true;
    for (int x = 0; x < fam.size() && joins_distinct; ++x) {
        for (int y = 0; y < fam.size() && joins_distinct; ++y) {
            if (x == y) continue;
            const std::uint64_t d = fam.divergence(x, y);
            const Term witness = Term::atom(fam.code_at(x, d + 1));
            if (!k1->leq(witness, Term::join(static_cast<std::uint64_t>(x))) ||
                k1->leq(witness, Term::join(static_cast<std::uint64_t>(y))))
                joins_distinct = false;
        }
    }
    r.check("formal-joins-pairwise-distinct", joins_distinct);

    // Maximal elements of K1 are exactly the formal joins.
    const auto terms = k1->enumerate(fuel);
    bool joins_maximal = true, others_not_maximal = true;
    for (const Term& t : terms) {
        if (t.kind == Term::Kind::Join) {
            for (const Term& u : terms)
                if (!(u == t) && k1->leq(t, u)) joins_maximal = false;
        } else {
            // every atom lies on a branch, so its formal join sits above
            bool above = false;
            for (int m = 0; m < fam.size() && !above; ++m)
                if (k1->leq(t, Term::join(static_cast<std::uint64_t>(m)))) above = true;
            if (!above) others_not_maximal = false;
        }
    }
    r.check("maximal-elements-exactly-joins", joins_maximal && others_not_maximal);
    return r;
}

Report demo_epi_mono_not_iso() {
    Report r;
    const FinPoset a = remark_three_element_cpo();
    const FinPoset three = chain_poset(3);
    const FinCpoMap id_map = FinCpoMap::make("id", a, three, {0, 1, 2});

    const Classification c = classify(id_map);
    r.add("classification", to_key_value(c));
    r.check("mono", c.mono);
    r.check("epi", c.epi);
    r.check("not-iso", !c.iso);
    r.check("not-strong-epi", !c.strong_epi);
    r.check("not-extremal-epi", !c.extremal_epi);

    const Factorization f = epi_strongmono_factorize(id_map);
    r.add("factorization-mid-size", f.mid.size());
    r.check("mid-object-is-3", isomorphic(f.mid, three));
    r.check("mono-part-iso", classify(f.mono_part).iso);
    return r;
}

}  // namespace cpokit
