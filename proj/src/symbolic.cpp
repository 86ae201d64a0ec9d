#include "cpokit/symbolic.hpp"

#include <algorithm>
#include <set>

#include "cpokit/errors.hpp"

namespace cpokit {

std::string Term::str() const {
    switch (kind) {
        case Kind::Bottom: return "0";
        case Kind::Top: return "Top";
        case Kind::Atom: return "a" + std::to_string(a);
        case Kind::Pair: {
            const std::string m = (a == kInf) ? "inf" : std::to_string(a);
            return "(" + m + "," + std::to_string(b) + ")";
        }
        case Kind::Join: return "x" + std::to_string(a);
    }
    return "?";
}

const ChainFamily& SymbolicCpo::family(const std::string& id) const {
    for (const auto& f : families)
        if (f.id == id) return f;
    throw CertificateGap("unknown chain family: " + id);
}

namespace {

std::vector<Term> enumerated(const SymbolicCpo& c, int fuel) {
    std::vector<Term> ts = c.enumerate(fuel);
    if (static_cast<int>(ts.size()) > fuel) ts.resize(static_cast<std::size_t>(fuel));
    return ts;
}

}  // namespace

Report validate_symbolic(const SymbolicCpo& c, int fuel) {
    Report r;
    if (fuel < 1) throw MathError("fuel must be at least 1");
    const std::vector<Term> ts = enumerated(c, fuel);
    const int n = static_cast<int>(ts.size());
    r.add("cpo", c.name);
    r.add("fuel", fuel);
    r.add("terms", static_cast<long long>(n));

    bool wf = std::all_of(ts.begin(), ts.end(), [&](const Term& t) { return c.well_formed(t); });
    wf = wf && std::find(ts.begin(), ts.end(), c.bottom) != ts.end();
    r.check("well-formed", wf);

    // Precompute the sampled order matrix once.
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) le[i][j] = c.leq(ts[i], ts[j]);

    bool refl = true, antisym = true, trans = true, least = true;
    for (int i = 0; i < n; ++i) {
        if (!le[i][i]) refl = false;
        if (!c.leq(c.bottom, ts[i])) least = false;
    }
    for (int i = 0; i < n && antisym; ++i)
        for (int j = 0; j < n && antisym; ++j)
            if (i != j && le[i][j] && le[j][i]) antisym = false;
    for (int i = 0; i < n && trans; ++i)
        for (int j = 0; j < n && trans; ++j) {
            if (!le[i][j]) continue;
            for (int k = 0; k < n; ++k)
                if (le[j][k] && !le[i][k]) {
                    trans = false;
                    break;
                }
        }
    r.check("reflexive", refl);
    r.check("antisymmetric", antisym);
    r.check("transitive", trans);
    r.check("bottom-least", least);

    for (const ChainFamily& fam : c.families) {
        const auto params = fam.params(fuel);
        const std::uint64_t cap = fam.index_cap(fuel);
        bool monotone = true, upper = true, least_ub = true, wf_chain = true;
        for (std::uint64_t p : params) {
            const Term jn = fam.join(p);
            wf_chain = wf_chain && c.well_formed(jn);
            for (std::uint64_t i = 0; i < cap; ++i) {
                const Term cur = fam.at(p, i);
                wf_chain = wf_chain && c.well_formed(cur);
                if (i + 1 < cap) {
                    const Term nxt = fam.at(p, i + 1);
                    if (!(c.leq(cur, nxt) && !(cur == nxt))) monotone = false;
                }
                if (!c.leq(cur, jn)) upper = false;
            }
            // Leastness among sampled candidate upper bounds.
            for (const Term& b : ts) {
                bool bounds_all = true;
                for (std::uint64_t i = 0; i < cap && bounds_all; ++i)
                    if (!c.leq(fam.at(p, i), b)) bounds_all = false;
                if (bounds_all && !c.leq(jn, b)) least_ub = false;
            }
        }
        r.check("family." + fam.id + ".well-formed", wf_chain);
        r.check("family." + fam.id + ".strictly-monotone", monotone);
        r.check("family." + fam.id + ".join-upper-bound", upper);
        r.check("family." + fam.id + ".join-least", least_ub);
    }
    return r;
}

namespace {

bool stage_contains_chain_sampled(const SymbolicCpo& c, const ChainFamily& fam, std::uint64_t p,
                                  const StagePredicate& s, int fuel) {
    const std::uint64_t cap = fam.index_cap(fuel);
    for (std::uint64_t i = 0; i < cap; ++i)
        if (!s.contains(fam.at(p, i))) return false;
    (void)c;
    return true;
}

}  // namespace

ClosureVerdict symbolic_closure_verify(const SymbolicCpo& c, const StagePredicate& start,
                                       const StageCertificate& cert, int fuel) {
    if (cert.stages.empty()) throw CertificateGap("certificate has no stages");
    ClosureVerdict v;
    Report& r = v.report;
    const std::vector<Term> ts = enumerated(c, fuel);
    const int n_stages = static_cast<int>(cert.stages.size());
    r.add("cpo", c.name);
    r.add("fuel", fuel);
    r.add("stages", n_stages);

    bool start_ok = true;
    for (const Term& t : ts)
        if (cert.stages[0].contains(t) != start.contains(t)) start_ok = false;
    r.check("stage0-equals-start", start_ok);

    bool monotone = true;
    for (int k = 0; k + 1 < n_stages; ++k)
        for (const Term& t : ts)
            if (cert.stages[k].contains(t) && !cert.stages[k + 1].contains(t)) monotone = false;
    r.check("stages-monotone", monotone);

    // Witness soundness: each listed witness family must send contained
    // chains to joins inside its stage, and the containment tests must agree
    // with the sampled instances.
    for (const StageWitness& w : cert.witnesses) {
        if (w.stage < 1 || w.stage >= n_stages)
            throw CertificateGap("witness stage out of range");
        const ChainFamily& fam = c.family(w.family);
        const StagePredicate& prev = cert.stages[w.stage - 1];
        const StagePredicate& here = cert.stages[w.stage];
        for (std::uint64_t p : fam.params(fuel)) {
            const bool claimed = fam.contained_in(p, prev, fuel);
            const bool sampled = stage_contains_chain_sampled(c, fam, p, prev, fuel);
            if (claimed && !sampled)
                throw WitnessInvalid("family " + fam.id + " containment test contradicts " +
                                     "sampled instances at parameter " + std::to_string(p));
            if (claimed && !here.contains(fam.join(p)))
                throw WitnessInvalid("witnessed join " + fam.join(p).str() +
                                     " missing from stage " + std::to_string(w.stage));
        }
    }
    r.check("witnesses-sound", true);

    // Completeness of the stage description: every enumerated element new at
    // stage k must be the join of a witnessed chain contained one stage down.
    bool new_witnessed = true;
    for (int k = 1; k < n_stages && new_witnessed; ++k) {
        for (const Term& t : ts) {
            if (!cert.stages[k].contains(t) || cert.stages[k - 1].contains(t)) continue;
            bool witnessed = false;
            for (const StageWitness& w : cert.witnesses) {
                if (w.stage != k) continue;
                const ChainFamily& fam = c.family(w.family);
                for (std::uint64_t p : fam.params(fuel)) {
                    if (fam.join(p) == t && fam.contained_in(p, cert.stages[k - 1], fuel)) {
                        witnessed = true;
                        break;
                    }
                }
                if (witnessed) break;
            }
            if (!witnessed) {
                new_witnessed = false;
                break;
            }
        }
    }
    r.check("new-elements-witnessed", new_witnessed);

    // Closure under basis joins, per stage; the first closed stage is where
    // the closure is reached (relative to basis adequacy).
    v.closure_stage = -1;
    bool final_closed = false;
    for (int k = 0; k < n_stages; ++k) {
        bool closed = true;
        for (const ChainFamily& fam : c.families) {
            for (std::uint64_t p : fam.params(fuel)) {
                if (fam.contained_in(p, cert.stages[k], fuel) &&
                    !cert.stages[k].contains(fam.join(p))) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed && v.closure_stage < 0) v.closure_stage = k;
        if (k == n_stages - 1) final_closed = closed;
    }
    r.check("final-stage-closed", final_closed);
    r.add("closure-stage", v.closure_stage);
    v.closed = final_closed;

    // Refutations: case analysis over every declared family.
    for (const Refutation& ref : cert.refutations) {
        if (ref.stage < 1 || ref.stage >= n_stages)
            throw CertificateGap("refutation stage out of range");
        if (cert.stages[ref.stage].contains(ref.non_member))
            throw WitnessInvalid("refuted term " + ref.non_member.str() +
                                 " is inside stage " + std::to_string(ref.stage));
        for (const ChainFamily& fam : c.families)
            if (!ref.cases.count(fam.id))
                throw CertificateGap("refutation of " + ref.non_member.str() +
                                     " does not cover family " + fam.id);
        const StagePredicate& prev = cert.stages[ref.stage - 1];
        for (const auto& [fam_id, rc] : ref.cases) {
            const ChainFamily& fam = c.family(fam_id);
            for (std::uint64_t p : fam.params(fuel)) {
                const bool contained = fam.contained_in(p, prev, fuel);
                if (rc.kind == RefutationCase::NoInstanceContained) {
                    if (contained)
                        throw WitnessInvalid("refutation case for family " + fam_id +
                                             " claims no contained instance, but parameter " +
                                             std::to_string(p) + " is contained");
                } else {  // AllJoinsDiffer
                    if (contained && fam.join(p) == ref.non_member)
                        throw WitnessInvalid("refutation case for family " + fam_id +
                                             " defeated: join equals " + ref.non_member.str());
                }
            }
        }
        r.check("refuted." + ref.non_member.str() + ".stage" + std::to_string(ref.stage), true);
    }
    v.refutations_valid = true;

    bool full = true;
    for (const Term& t : ts)
        if (!cert.stages[n_stages - 1].contains(t)) full = false;
    v.full_carrier = full;
    r.add("full-carrier", full);

    v.stages_valid = start_ok && monotone && new_witnessed;
    r.add("soundness", std::string("relative-to-declared-chain-basis-adequacy"));
    return v;
}

EpiVerdict symbolic_is_epi(const SymbolicCpoMap& f, const StageCertificate& cert, int fuel) {
    EpiVerdict v;
    Report& r = v.report;
    const SymbolicCpo& src = *f.src;
    const SymbolicCpo& dst = *f.dst;
    const std::vector<Term> sts = enumerated(src, fuel);
    const std::vector<Term> dts = enumerated(dst, fuel);
    r.add("map", f.name);
    r.add("fuel", fuel);

    // Sampled cpo-map invariants.
    bool monotone = true, bottom_ok = f.apply(src.bottom) == dst.bottom;
    for (const Term& x : sts)
        for (const Term& y : sts)
            if (src.leq(x, y) && !dst.leq(f.apply(x), f.apply(y))) monotone = false;
    r.check("map-monotone", monotone);
    r.check("map-bottom", bottom_ok);

    // Image resolution per source basis chain.
    bool resolution_ok = true;
    for (const ChainFamily& fam : src.families) {
        auto it = f.family_images.find(fam.id);
        if (it == f.family_images.end()) {
            resolution_ok = false;
            continue;
        }
        const std::uint64_t cap = fam.index_cap(fuel);
        for (std::uint64_t p : fam.params(fuel)) {
            if (const auto* tc = std::get_if<SymbolicCpoMap::TargetChain>(&it->second)) {
                const ChainFamily& dfam = dst.family(tc->dst_family);
                const std::uint64_t q = tc->param_map(p);
                if (!(f.apply(fam.join(p)) == dfam.join(q))) resolution_ok = false;
                const std::uint64_t dcap = dfam.index_cap(fuel);
                for (std::uint64_t i = 0; i < cap; ++i)
                    if (!dst.leq(f.apply(fam.at(p, i)), dfam.join(q))) resolution_ok = false;
                // cofinality of the image in the target chain, sampled
                for (std::uint64_t j = 0; j < dcap && resolution_ok; ++j) {
                    bool dominated = false;
                    for (std::uint64_t i = 0; i < cap && !dominated; ++i)
                        if (dst.leq(dfam.at(q, j), f.apply(fam.at(p, i)))) dominated = true;
                    if (!dominated) resolution_ok = false;
                }
            } else {
                const auto& ec = std::get<SymbolicCpoMap::EventuallyConstant>(it->second);
                const Term val = ec.value(p);
                if (!(f.apply(fam.join(p)) == val)) resolution_ok = false;
                bool settled = false;
                for (std::uint64_t i = 0; i < cap; ++i) {
                    if (f.apply(fam.at(p, i)) == val)
                        settled = true;
                    else if (settled)
                        resolution_ok = false;  // left the constant again
                }
                if (!settled) resolution_ok = false;
            }
        }
    }
    r.check("family-image-resolution", resolution_ok);

    // The certificate's S_0 must be the image predicate, sampled both ways.
    const StagePredicate& s0 = cert.stages.at(0);
    bool image_in_s0 = true;
    for (const Term& t : sts)
        if (!s0.contains(f.apply(t))) image_in_s0 = false;
    std::set<Term> image;
    for (const Term& t : sts) image.insert(f.apply(t));
    bool s0_hit = true;
    for (const Term& d : dts)
        if (s0.contains(d) && !image.count(d)) s0_hit = false;
    r.check("stage0-is-image", image_in_s0 && s0_hit);

    v.closure = symbolic_closure_verify(dst, s0, cert, fuel);
    r.absorb(v.closure.report);

    v.epi = v.closure.stages_valid && v.closure.closed && v.closure.full_carrier &&
            v.closure.refutations_valid && image_in_s0 && s0_hit && monotone && bottom_ok;

    // Sampled mono / iso flags.
    v.mono_sampled = true;
    for (std::size_t i = 0; i < sts.size(); ++i)
        for (std::size_t j = i + 1; j < sts.size(); ++j)
            if (f.apply(sts[i]) == f.apply(sts[j])) v.mono_sampled = false;
    v.order_reflecting_sampled = true;
    for (const Term& x : sts)
        for (const Term& y : sts)
            if (dst.leq(f.apply(x), f.apply(y)) && !src.leq(x, y))
                v.order_reflecting_sampled = false;
    v.surjective_sampled = true;
    for (const Term& d : dts)
        if (!image.count(d)) v.surjective_sampled = false;
    v.iso_sampled = v.mono_sampled && v.order_reflecting_sampled && v.surjective_sampled;

    r.add("epi", v.epi);
    r.add("mono-sampled", v.mono_sampled);
    r.add("surjective-sampled", v.surjective_sampled);
    r.add("order-reflecting-sampled", v.order_reflecting_sampled);
    r.add("iso-sampled", v.iso_sampled);
    return v;
}

std::shared_ptr<const SymbolicCpo> lift(const FinPoset& p) {
    auto c = std::make_shared<SymbolicCpo>();
    c->name = "lift_" + p.name();
    c->bottom = Term::bottom();
    const int bottom = p.bottom();
    auto to_index = [bottom, n = p.size()](const Term& t) -> int {
        if (t.kind == Term::Kind::Bottom) return bottom;
        if (t.kind == Term::Kind::Atom && t.a < static_cast<std::uint64_t>(n) &&
            static_cast<int>(t.a) != bottom)
            return static_cast<int>(t.a);
        return -1;
    };
    c->well_formed = [to_index](const Term& t) { return to_index(t) >= 0; };
    c->leq = [p, to_index](const Term& x, const Term& y) {
        const int i = to_index(x), j = to_index(y);
        if (i < 0 || j < 0) throw IllFormedTerm("term outside the lifted poset");
        return p.leq(i, j);
    };
    c->enumerate = [p, bottom](int fuel) {
        std::vector<Term> ts;
        ts.push_back(Term::bottom());
        for (int i = 0; i < p.size() && static_cast<int>(ts.size()) < fuel; ++i)
            if (i != bottom) ts.push_back(Term::atom(static_cast<std::uint64_t>(i)));
        return ts;
    };
    c->adequacy_note = "finite poset: every directed set has a maximum, no joins to add";
    return c;
}

SymbolicCpoMap lift(const FinCpoMap& f, std::shared_ptr<const SymbolicCpo> src,
                    std::shared_ptr<const SymbolicCpo> dst) {
    SymbolicCpoMap m;
    m.name = "lift_" + f.name();
    m.src = std::move(src);
    m.dst = std::move(dst);
    const int src_bottom = f.src().bottom();
    const int dst_bottom = f.dst().bottom();
    std::vector<int> table = f.table();
    m.apply = [table, src_bottom, dst_bottom](const Term& t) {
        const int i = (t.kind == Term::Kind::Bottom) ? src_bottom : static_cast<int>(t.a);
        const int v = table[static_cast<std::size_t>(i)];
        return v == dst_bottom ? Term::bottom() : Term::atom(static_cast<std::uint64_t>(v));
    };
    return m;
}

StageCertificate image_certificate(const SymbolicCpoMap& f, int fuel) {
    std::set<Term> image;
    for (const Term& t : enumerated(*f.src, fuel)) image.insert(f.apply(t));
    StageCertificate cert;
    cert.stages.push_back(StagePredicate{
        "image", [image](const Term& t) { return image.count(t) > 0; }});
    return cert;
}

}  // namespace cpokit
