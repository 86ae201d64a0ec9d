#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpokit/cpomap.hpp"
#include "cpokit/enumerate.hpp"
#include "cpokit/errors.hpp"
#include "cpokit/text_io.hpp"
#include "oracles.hpp"

using namespace cpokit;

TEST_CASE("map validation") {
    const FinPoset two = chain_poset(2), three = chain_poset(3);
    CHECK_NOTHROW(FinCpoMap::make("f", two, three, {0, 2}));
    // not bottom-preserving
    CHECK_THROWS_AS(FinCpoMap::make("f", two, three, {1, 2}), NotCpoMap);
    // not monotone
    const FinPoset a = remark_three_element_cpo();
    CHECK_THROWS_AS(FinCpoMap::make("f", three, a, {0, 2, 1}), NotCpoMap);
    // wrong arity
    CHECK_THROWS_AS(FinCpoMap::make("f", two, three, {0}), NotCpoMap);
}

TEST_CASE("hom counts at small sizes") {
    const FinPoset two = chain_poset(2), three = chain_poset(3);
    CHECK(hom_count(two, three) == 3);  // 1 maps to 0, 1, or 2
    CHECK(hom_count(three, two) == 3);  // nondecreasing pairs over {0,1}
    for (const FinPoset& p : pointed_corpus(4))
        CHECK(hom_count(p, one_point_poset()) == 1);  // terminal object
}

TEST_CASE("hom enumeration agrees with the brute-force table filter") {
    const auto& corpus = pointed_corpus(3);
    for (const FinPoset& a : corpus) {
        for (const FinPoset& b : corpus) {
            const auto brute = oracle::brute_force_hom(a, b);
            std::vector<std::vector<int>> fast;
            for_each_hom_table(a, b, [&](const std::vector<int>& t) { fast.push_back(t); });
            CHECK(fast == brute);  // same maps, same lexicographic order
        }
    }
}

TEST_CASE("hom enumeration respects the size bound") {
    const FinPoset big = chain_poset(9);
    CHECK_THROWS_AS(hom_count(big, chain_poset(2)), BoundTooLarge);
}

TEST_CASE("monotone bottom-preserving maps preserve all chain joins") {
    // In the finite tier the two invariants already force join preservation.
    const auto& corpus = pointed_corpus(4);
    for (const FinPoset& a : corpus)
        for (const FinPoset& b : corpus)
            for (const FinCpoMap& f : hom_enumerate(a, b)) CHECK(f.preserves_chain_joins());
}

TEST_CASE("map text round trip") {
    const FinPoset a = remark_three_element_cpo();
    const FinPoset three = chain_poset(3, "three");
    const FinPoset renamed_a = renamed(a, "A");
    const FinCpoMap f = FinCpoMap::make("idf", renamed_a, three, {0, 1, 2});
    const std::vector<FinPoset> ctx{renamed_a, three};
    const FinCpoMap g = parse_map_string(format_map(f), ctx);
    CHECK(g.table() == f.table());
    CHECK(g.name() == f.name());
}

TEST_CASE("map parse errors") {
    const std::vector<FinPoset> ctx{chain_poset(2, "two"), chain_poset(3, "three")};
    CHECK_THROWS_AS(parse_map_string("map f : two -> nowhere\n0 -> 0\n1 -> 1\n", ctx),
                    ParseError);
    CHECK_THROWS_AS(parse_map_string("map f : two -> three\n0 -> 0\n", ctx), ParseError);
    // valid parse but not a cpo map: monotonicity violation caught as math error
    CHECK_THROWS_AS(
        parse_map_string("map f : three -> three\n0 -> 0\n1 -> 2\n2 -> 1\n",
                         std::vector<FinPoset>{chain_poset(3, "three")}),
        NotCpoMap);
}
