#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpokit/canonical.hpp"
#include "cpokit/classify.hpp"
#include "cpokit/colimits.hpp"
#include "cpokit/enumerate.hpp"
#include "cpokit/errors.hpp"

using namespace cpokit;

TEST_CASE("coproduct: kappa copies of 3 has 2*kappa + 1 elements") {
    for (int kappa = 1; kappa <= 3; ++kappa) {
        std::vector<FinPoset> parts(static_cast<std::size_t>(kappa), chain_poset(3));
        const Coproduct cp = coproduct(parts);
        CHECK(cp.object.size() == 2 * kappa + 1);
        CHECK(cp.injections.size() == static_cast<std::size_t>(kappa));
        for (const FinCpoMap& inj : cp.injections) CHECK(inj.order_embedding());
    }
    CHECK(kappa_times_3(0).size() == 1);
    CHECK(kappa_times_3(2).size() == 5);
}

TEST_CASE("coproduct of a single object is isomorphic to it") {
    for (const FinPoset& p : pointed_corpus(4)) {
        const Coproduct cp = coproduct(std::vector<FinPoset>{p});
        CHECK(isomorphic(cp.object, p));
        CHECK(classify(cp.injections[0]).iso);
    }
}

TEST_CASE("coproduct of 2 and 2 is the three-element cpo with incomparable elements") {
    const std::vector<FinPoset> parts{chain_poset(2), chain_poset(2)};
    CHECK(isomorphic(coproduct(parts).object, remark_three_element_cpo()));
}

TEST_CASE("coproduct universal property on the corpus") {
    const auto& corpus = pointed_corpus(3);
    const std::vector<FinPoset> parts{chain_poset(2), remark_three_element_cpo()};
    const Coproduct cp = coproduct(parts);
    for (const FinPoset& t : corpus) {
        for (const FinCpoMap& f0 : hom_enumerate(parts[0], t)) {
            for (const FinCpoMap& f1 : hom_enumerate(parts[1], t)) {
                int mediators = 0;
                for (const FinCpoMap& u : hom_enumerate(cp.object, t)) {
                    if (compose(u, cp.injections[0]).same_arrow_as(f0) &&
                        compose(u, cp.injections[1]).same_arrow_as(f1))
                        ++mediators;
                }
                CHECK(mediators == 1);
            }
        }
    }
}

TEST_CASE("coequalizer: equal maps give an isomorphism") {
    const FinPoset a = chain_poset(2), b = remark_three_element_cpo();
    for (const FinCpoMap& f : hom_enumerate(a, b)) {
        const Coequalizer ce = coequalizer(f, f);
        CHECK(classify(ce.q).iso);
    }
}

TEST_CASE("coequalizer: merging the two incomparable elements of 3 gives chain 2") {
    const FinPoset two = chain_poset(2), three = chain_poset(3);
    SUBCASE("inside the chain 3") {
        const FinCpoMap f = FinCpoMap::make("f", two, three, {0, 1});
        const FinCpoMap g = FinCpoMap::make("g", two, three, {0, 2});
        const Coequalizer ce = coequalizer(f, g);
        CHECK(isomorphic(ce.object, two));
        CHECK(ce.q.surjective());
    }
    SUBCASE("inside the incomparable-pair cpo") {
        const FinPoset a = remark_three_element_cpo();
        const FinCpoMap f = FinCpoMap::make("f", two, a, {0, 1});
        const FinCpoMap g = FinCpoMap::make("g", two, a, {0, 2});
        const Coequalizer ce = coequalizer(f, g);
        CHECK(isomorphic(ce.object, two));
        // iterated collapse by hand: classes {0}, {1,2}; order [0] < [12]
        CHECK(ce.object.size() == 2);
        CHECK(ce.q.apply(1) == ce.q.apply(2));
        CHECK(ce.q.apply(0) != ce.q.apply(1));
    }
}

TEST_CASE("coequalizer handles order-cycles between classes") {
    // f, g : 2 -> 3 with f(1) = 0 forces the class {0,1}; then [01] and
    // class {2}... collapsing 1 with 0 in the chain 0<1<2 leaves 0' < 2 fine;
    // instead collapse 0 with 2 to force a genuine cycle: [02] <= [1] <= [02].
    const FinPoset two = chain_poset(2), three = chain_poset(3);
    const FinCpoMap f = FinCpoMap::make("f", two, three, {0, 0});
    const FinCpoMap g = FinCpoMap::make("g", two, three, {0, 2});
    const Coequalizer ce = coequalizer(f, g);
    CHECK(ce.object.size() == 1);  // all classes merge through the cycle
    CHECK(classify(ce.q).epi);
}

TEST_CASE("coequalizer universal property, small exhaustive sweep") {
    const auto& sources = pointed_corpus(2);
    const auto& targets = pointed_corpus(3);
    for (const FinPoset& a : sources) {
        for (const FinPoset& b : sources) {
            const auto maps = hom_enumerate(a, b);
            for (const FinCpoMap& f : maps) {
                for (const FinCpoMap& g : maps) {
                    const Coequalizer ce = coequalizer(f, g);
                    CHECK(compose(ce.q, f).same_arrow_as(compose(ce.q, g)));
                    for (const FinPoset& t : targets) {
                        for (const FinCpoMap& h : hom_enumerate(b, t)) {
                            if (!compose(h, f).same_arrow_as(compose(h, g))) continue;
                            int found = 0;
                            FinCpoMap last = h;
                            for (const FinCpoMap& u : hom_enumerate(ce.object, t))
                                if (compose(u, ce.q).same_arrow_as(h)) {
                                    ++found;
                                    last = u;
                                }
                            CHECK(found == 1);
                            CHECK(induced_through(ce, h).same_arrow_as(last));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("cokernel pair of an identity has equal legs") {
    for (const FinPoset& p : pointed_corpus(3)) {
        const CokernelPair ck = cokernel_pair(FinCpoMap::identity(p));
        CHECK(ck.g.same_arrow_as(ck.h));
        CHECK(isomorphic(ck.object, p));
    }
}

TEST_CASE("cokernel pair of the inclusion 2 into 3 differs outside the image") {
    const FinCpoMap m = FinCpoMap::make("m", chain_poset(2), chain_poset(3), {0, 1});
    const CokernelPair ck = cokernel_pair(m);
    CHECK(compose(ck.g, m).same_arrow_as(compose(ck.h, m)));
    CHECK(ck.g.apply(0) == ck.h.apply(0));
    CHECK(ck.g.apply(1) == ck.h.apply(1));
    CHECK(ck.g.apply(2) != ck.h.apply(2));  // the element outside the image
}

TEST_CASE("epi iff cokernel-pair legs agree, exhaustive at small size") {
    const auto& corpus = pointed_corpus(3);
    for (const FinPoset& a : corpus)
        for (const FinPoset& b : corpus)
            for (const FinCpoMap& f : hom_enumerate(a, b)) {
                const CokernelPair ck = cokernel_pair(f);
                CHECK((ck.g.table() == ck.h.table()) == f.surjective());
            }
}

TEST_CASE("pushout universal property spot check") {
    const FinPoset two = chain_poset(2);
    const FinPoset a = remark_three_element_cpo();
    const FinCpoMap m1 = FinCpoMap::make("m1", two, a, {0, 1});
    const FinCpoMap m2 = FinCpoMap::make("m2", two, chain_poset(3), {0, 2});
    const Pushout po = pushout(m1, m2);
    CHECK(compose(po.leg1, m1).same_arrow_as(compose(po.leg2, m2)));
    for (const FinPoset& t : pointed_corpus(3)) {
        for (const FinCpoMap& f1 : hom_enumerate(a, t)) {
            for (const FinCpoMap& f2 : hom_enumerate(chain_poset(3), t)) {
                if (!compose(f1, m1).same_arrow_as(compose(f2, m2))) continue;
                int mediators = 0;
                for (const FinCpoMap& u : hom_enumerate(po.object, t))
                    if (compose(u, po.leg1).same_arrow_as(f1) &&
                        compose(u, po.leg2).same_arrow_as(f2))
                        ++mediators;
                CHECK(mediators == 1);
            }
        }
    }
}

TEST_CASE("eventually constant colimit returns the stationary object") {
    const FinPoset p = remark_three_element_cpo();
    const FinCpoMap id = FinCpoMap::identity(p);
    const std::vector<FinCpoMap> chain{id, id, id};
    const ChainColimit cl = eventually_constant_colimit(chain);
    CHECK(cl.object == p);
    CHECK(cl.legs.size() == 4);
    for (const FinCpoMap& leg : cl.legs) CHECK(classify(leg).iso);

    // a chain that keeps collapsing is rejected
    const FinCpoMap collapse =
        FinCpoMap::make("c", chain_poset(3), chain_poset(2), {0, 1, 1});
    CHECK_THROWS_AS(eventually_constant_colimit(std::vector<FinCpoMap>{collapse}), MathError);
}
