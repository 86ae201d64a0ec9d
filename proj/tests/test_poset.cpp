#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cpokit/canonical.hpp"
#include "cpokit/enumerate.hpp"
#include "cpokit/errors.hpp"
#include "cpokit/poset.hpp"
#include "cpokit/text_io.hpp"
#include "oracles.hpp"

using namespace cpokit;

namespace {

FinPoset from_text(const std::string& text) { return parse_poset_string(text); }

}  // namespace

TEST_CASE("validate: one-point poset") {
    const FinPoset p = from_text("poset one\nelements: a\nbottom: a\ncovers:\n");
    CHECK(p.size() == 1);
    CHECK(p.bottom() == 0);
    CHECK(is_cpo(p).is_cpo());
}

TEST_CASE("validate: the three-element cpo with two incomparable elements") {
    const FinPoset p = from_text("poset A\nelements: a b c\nbottom: a\ncovers: a<b a<c\n");
    CHECK(p.size() == 3);
    CHECK(p.leq(0, 1));
    CHECK(p.leq(0, 2));
    CHECK(!p.leq(1, 2));
    CHECK(!p.leq(2, 1));
    CHECK(isomorphic(p, remark_three_element_cpo()));
}

TEST_CASE("validate: cover cycle is rejected") {
    CHECK_THROWS_AS(from_text("poset bad\nelements: a b\nbottom: a\ncovers: a<b b<a\n"),
                    CycleDetected);
}

TEST_CASE("validate: duplicate labels and missing bottom are rejected") {
    CHECK_THROWS_AS(from_text("poset bad\nelements: a a\nbottom: a\ncovers:\n"),
                    DuplicateElement);
    CHECK_THROWS_AS(from_text("poset bad\nelements: a b c\nbottom: b\ncovers: a<b a<c\n"),
                    NoBottom);
}

TEST_CASE("validate: leq is the reflexive-transitive closure of the covers") {
    const FinPoset p = from_text("poset c3\nelements: x y z\nbottom: x\ncovers: x<y y<z\n");
    CHECK(p.leq(0, 2));  // transitivity filled in
    CHECK(p.leq(1, 1));
}

TEST_CASE("is_cpo: chains and antichains") {
    CHECK(is_cpo(chain_poset(3)).is_cpo());

    // two-element antichain without a bottom: the empty chain has no join
    Relation r(2);
    const IsCpoReport rep = is_cpo(r);
    CHECK(!rep.is_cpo());
    CHECK(!rep.via_least);
    CHECK(rep.chain_without_join.has_value());
    CHECK(*rep.chain_without_join == 0);  // the empty chain
}

TEST_CASE("is_cpo: chain-enumeration verdict equals least-element verdict on all posets up to 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Relation& rel : oracle::all_labeled_posets(n)) {
            const IsCpoReport rep = is_cpo(rel);  // throws if the two routes disagree
            CHECK(rep.via_chains == rep.via_least);
        }
    }
}

TEST_CASE("enumerate: counts at small sizes") {
    CHECK(enumerate_posets(1).size() == 1);
    CHECK(enumerate_posets(2).size() == 1);
    CHECK(enumerate_posets(3).size() == 2);
    CHECK_THROWS_AS(enumerate_posets(7), BoundTooLarge);
    CHECK_THROWS_AS(enumerate_posets(0), BoundTooLarge);
}

TEST_CASE("enumerate: pointed posets on n elements match unlabeled posets on n-1") {
    // Removing the bottom is a bijection; the right side is generated by the
    // independent three-state pair assignment oracle.
    for (int n = 2; n <= 5; ++n) {
        std::set<CanonicalForm> unlabeled;
        for (const Relation& rel : oracle::all_labeled_posets(n - 1)) {
            std::vector<std::string> labels(static_cast<std::size_t>(n - 1));
            for (int i = 0; i < n - 1; ++i) labels[i] = std::to_string(i);
            // attach a fresh bottom so canonicalize (pointed) applies
            std::vector<std::string> plabels = labels;
            plabels.insert(plabels.begin(), "bot");
            Relation prel(n);
            for (int j = 1; j < n; ++j) prel.set(0, j);
            for (int i = 0; i < n - 1; ++i)
                for (int j = 0; j < n - 1; ++j)
                    if (rel.at(i, j)) prel.set(i + 1, j + 1);
            unlabeled.insert(canonicalize(FinPoset::make("o", plabels, prel)));
        }
        CHECK(enumerate_posets(n).size() == unlabeled.size());
    }
}

TEST_CASE("enumerate: deterministic order and distinct canonical forms") {
    const auto a = enumerate_posets(4);
    const auto b = enumerate_posets(4);
    REQUIRE(a.size() == b.size());
    std::vector<CanonicalForm> forms;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].relation() == b[i].relation());
        forms.push_back(canonicalize(a[i]));
    }
    CHECK(std::is_sorted(forms.begin(), forms.end()));
    CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
}

TEST_CASE("canonicalize: invariant under every relabeling") {
    for (const FinPoset& p : pointed_corpus(4)) {
        const CanonicalForm cf = canonicalize(p);
        std::vector<int> perm(static_cast<std::size_t>(p.size()));
        for (int i = 0; i < p.size(); ++i) perm[i] = i;
        do {
            CHECK(canonicalize(relabel(p, perm)) == cf);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("canonicalize: chain 3 and the incomparable-pair cpo differ") {
    CHECK(canonicalize(chain_poset(3)) != canonicalize(remark_three_element_cpo()));
}

TEST_CASE("canonicalize: equality agrees with backtracking isomorphism search") {
    const auto& corpus = pointed_corpus(4);
    for (const FinPoset& a : corpus) {
        for (const FinPoset& b : corpus) {
            const bool canon_eq = canonicalize(a) == canonicalize(b);
            const bool iso = oracle::find_isomorphism(a, b).has_value();
            CHECK(canon_eq == iso);
        }
    }
}

TEST_CASE("canonicalize: idempotent on the canonical representative") {
    for (const FinPoset& p : pointed_corpus(4)) {
        const FinPoset c = canonical_poset(p);
        CHECK(canonicalize(c) == canonicalize(p));
    }
}

TEST_CASE("covers: leq equals the closure of the transitive reduction") {
    for (const FinPoset& p : pointed_corpus(5)) {
        Relation red = p.covers();
        CHECK(red.transitive_closure() == p.relation());
    }
}

TEST_CASE("dot: one-point poset") {
    const std::string dot = emit_dot(one_point_poset("pt"));
    CHECK(dot.find("digraph \"pt\"") != std::string::npos);
    CHECK(dot.find("->") == std::string::npos);
}

TEST_CASE("dot: chain 3 has two edges, no transitive edge") {
    const std::string dot = emit_dot(chain_poset(3, "c3"));
    CHECK(dot.find("\"0\" -> \"1\"") != std::string::npos);
    CHECK(dot.find("\"1\" -> \"2\"") != std::string::npos);
    CHECK(dot.find("\"0\" -> \"2\"") == std::string::npos);
}

TEST_CASE("dot: diamond has exactly 4 edges") {
    const FinPoset diamond = parse_poset_string(
        "poset d\nelements: b l r t\nbottom: b\ncovers: b<l b<r l<t r<t\n");
    // brute-force cover count: i<j with nothing strictly between
    int covers = 0;
    for (int i = 0; i < diamond.size(); ++i)
        for (int j = 0; j < diamond.size(); ++j) {
            if (i == j || !diamond.leq(i, j)) continue;
            bool between = false;
            for (int k = 0; k < diamond.size() && !between; ++k)
                if (k != i && k != j && diamond.leq(i, k) && diamond.leq(k, j)) between = true;
            if (!between) ++covers;
        }
    CHECK(covers == 4);
    const std::string dot = emit_dot(diamond);
    std::size_t edges = 0, pos = 0;
    while ((pos = dot.find("->", pos)) != std::string::npos) {
        ++edges;
        pos += 2;
    }
    CHECK(edges == 4);
}

TEST_CASE("poset text round trip") {
    for (const FinPoset& p : pointed_corpus(4)) {
        const FinPoset q = parse_poset_string(format_poset(p));
        CHECK(q.relation() == p.relation());
        CHECK(q.labels() == p.labels());
    }
}

TEST_CASE("poset parse errors carry line numbers") {
    try {
        parse_poset_string("poset x\nelements: a\nbottom: a\nbogus:\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}
