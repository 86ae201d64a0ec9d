#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpokit/canonical.hpp"
#include "cpokit/classify.hpp"
#include "cpokit/enumerate.hpp"
#include "cpokit/errors.hpp"
#include "cpokit/quotient.hpp"

using namespace cpokit;

TEST_CASE("find_collapsing_pair: injective maps have none") {
    const FinCpoMap id = FinCpoMap::identity(kappa_times_3(2));
    CHECK(!find_collapsing_pair(id).has_value());
}

TEST_CASE("find_collapsing_pair: the least colliding pair is returned") {
    const FinCpoMap e = FinCpoMap::make("e", chain_poset(3), chain_poset(2), {0, 1, 1});
    const auto pair = find_collapsing_pair(e);
    REQUIRE(pair.has_value());
    CHECK(pair->first.apply(1) == 1);
    CHECK(pair->second.apply(1) == 2);
    CHECK(!pair->first.same_arrow_as(pair->second));
    CHECK(compose(e, pair->first).same_arrow_as(compose(e, pair->second)));
}

TEST_CASE("normalize: an isomorphism needs zero steps") {
    const FinPoset a0 = kappa_times_3(1);
    const QuotientChainTrace t = normalize_extremal_epi(FinCpoMap::identity(a0));
    CHECK(t.steps.empty());
    CHECK(t.sizes == std::vector<int>{3});
    CHECK(classify(t.final_iso).iso);
}

TEST_CASE("normalize: kappa = 1, collapsing 1 and 2 of the chain takes one step") {
    const FinPoset a0 = kappa_times_3(1);
    const FinPoset two = chain_poset(2);
    const FinCpoMap e0 = FinCpoMap::make("e0", a0, two, {0, 1, 1});
    const QuotientChainTrace t = normalize_extremal_epi(e0);
    CHECK(t.steps.size() == 1);
    CHECK(t.sizes == std::vector<int>{3, 2});
    CHECK(isomorphic(t.steps[0].step.dst(), two));
    CHECK(classify(t.final_iso).iso);
}

TEST_CASE("normalize rejects wrong sources") {
    // the antichain-with-bottom is not a coproduct of copies of 3
    CHECK_THROWS_AS(
        normalize_extremal_epi(FinCpoMap::identity(remark_three_element_cpo())),
        NotExtremalEpi);
}

TEST_CASE("normalize rejects non-extremal epis out of 2*3") {
    // bijective surjection of 2*3 onto the chain 5: the chain order is
    // strictly larger than the pushforward closure, so the map is an epi
    // and a mono but not extremal.
    const FinPoset a0 = kappa_times_3(2);
    const FinCpoMap skew = FinCpoMap::make("s", a0, chain_poset(5), {0, 1, 2, 3, 4});
    CHECK(skew.surjective());
    CHECK(!classify(skew).extremal_epi);
    CHECK_THROWS_AS(normalize_extremal_epi(skew), NotExtremalEpi);
}

TEST_CASE("normalize traces: seeded runs satisfy the chain laws") {
    for (int kappa = 1; kappa <= 3; ++kappa) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const FinCpoMap e0 = random_extremal_epi(kappa, seed);
            const QuotientChainTrace t = normalize_extremal_epi(e0);

            // sizes strictly decrease and respect the 2*kappa + 1 bound
            for (std::size_t i = 0; i + 1 < t.sizes.size(); ++i)
                CHECK(t.sizes[i] > t.sizes[i + 1]);
            for (int s : t.sizes) CHECK(s <= 2 * kappa + 1);
            CHECK(t.steps.size() <= static_cast<std::size_t>(2 * kappa + 1));

            // cocone equations e_0 = e_alpha o f_{0,alpha}, exactly
            for (std::size_t a = 0; a < t.steps.size(); ++a) {
                const FinCpoMap& e_alpha = t.steps[a].induced;
                CHECK(compose(e_alpha, t.from_start[a + 1]).same_arrow_as(t.e0));
            }
            // composite law f_{0,alpha+1} = f_{alpha,alpha+1} o f_{0,alpha}
            for (std::size_t a = 0; a < t.steps.size(); ++a)
                CHECK(compose(t.steps[a].step, t.from_start[a])
                          .same_arrow_as(t.from_start[a + 1]));

            // each step map is a strong epi; composites too
            for (const auto& step : t.steps) CHECK(classify(step.step).strong_epi);
            for (const auto& f0a : t.from_start) CHECK(classify(f0a).strong_epi);

            // no new elements: every element of every A_alpha has a
            // representative in A_0 (the step maps are surjective)
            for (const auto& f0a : t.from_start) CHECK(f0a.surjective());

            CHECK(classify(t.final_iso).iso);
        }
    }
}

TEST_CASE("census: kappa 0 has exactly the one-point quotient") {
    const QuotientCensus c = quotient_census(0);
    CHECK(c.count == 1);
    CHECK(c.max_size == 1);
    CHECK(isomorphic(c.quotients[0], one_point_poset()));
}

TEST_CASE("census: quotients of the chain 3 are the chains 1, 2, 3") {
    const QuotientCensus c = quotient_census(1);
    CHECK(c.count == 3);
    CHECK(c.max_size == 3);
    bool has1 = false, has2 = false, has3 = false;
    for (const FinPoset& q : c.quotients) {
        has1 = has1 || isomorphic(q, one_point_poset());
        has2 = has2 || isomorphic(q, chain_poset(2));
        has3 = has3 || isomorphic(q, chain_poset(3));
    }
    CHECK(has1);
    CHECK(has2);
    CHECK(has3);
}

TEST_CASE("census: the identity attains the maximal size 2*kappa + 1") {
    for (int kappa = 1; kappa <= 3; ++kappa) {
        const QuotientCensus c = quotient_census(kappa);
        CHECK(c.max_size == 2 * kappa + 1);
        bool has_a0 = false;
        for (const FinPoset& q : c.quotients)
            if (isomorphic(q, kappa_times_3(kappa))) has_a0 = true;
        CHECK(has_a0);
        for (const FinPoset& q : c.quotients) CHECK(q.size() <= 2 * kappa + 1);
    }
    CHECK_THROWS_AS(quotient_census(4), BoundTooLarge);
}

TEST_CASE("census extremality route is validated by classify on every kappa=1 surjection") {
    // dual-route check backing the census inner loop
    const FinPoset a0 = kappa_times_3(1);
    for (const FinPoset& b : pointed_corpus(3)) {
        for (const FinCpoMap& f : hom_enumerate(a0, b)) {
            if (!f.surjective()) continue;
            CHECK(extremal_epi_via_generated_order(f) ==
                  extremal_epi_via_mono_enumeration(f));
        }
    }
}

TEST_CASE("random_extremal_epi is deterministic per seed") {
    const FinCpoMap a = random_extremal_epi(2, 7);
    const FinCpoMap b = random_extremal_epi(2, 7);
    CHECK(a.table() == b.table());
    CHECK(a.dst().relation() == b.dst().relation());
    CHECK(classify(a).extremal_epi);
}
