#include "cpokit/generators.hpp"

#include "cpokit/classify.hpp"
#include "cpokit/enumerate.hpp"
#include "cpokit/errors.hpp"

namespace cpokit {

bool factors_through_mono(const FinCpoMap& s, const FinCpoMap& m) {
    if (!(s.dst() == m.dst())) throw NotCpoMap("factors_through_mono: codomain mismatch");
    // m injective: u = m^{-1} o s is the only candidate.
    std::vector<int> inverse(static_cast<std::size_t>(m.dst().size()), -1);
    for (int i = 0; i < m.src().size(); ++i) inverse[m.apply(i)] = i;
    std::vector<int> u(static_cast<std::size_t>(s.src().size()));
    for (int x = 0; x < s.src().size(); ++x) {
        const int pre = inverse[s.apply(x)];
        if (pre < 0) return false;
        u[x] = pre;
    }
    return table_monotone(s.src(), m.src(), u);
}

namespace {

// Visits every mono m : sub -> obj for sub drawn from the corpus, smallest
// subs first, tables in lexicographic order.
template <typename Fn>
void for_each_proper_subobject(const FinPoset& obj, int corpus_bound, Fn&& fn) {
    for (const FinPoset& sub : pointed_corpus(std::min(corpus_bound, obj.size()))) {
        if (sub.size() > obj.size()) continue;
        for (const FinCpoMap& m : hom_enumerate(sub, obj)) {
            if (!m.injective()) continue;
            if (m.injective() && m.surjective() && m.order_reflecting()) continue;  // iso
            if (fn(sub, m)) return;
        }
    }
}

}  // namespace

bool is_generator(const FinPoset& g, int corpus_bound) {
    if (corpus_bound > kMaxEnumerationSize) throw BoundTooLarge("corpus bound too large");
    const auto& corpus = pointed_corpus(corpus_bound);
    for (const FinPoset& a : corpus) {
        // f o h != g o h for some probe h iff f and g differ somewhere on the
        // union of the probe images.
        Subset probe_union = 0;
        for_each_hom_table(g, a, [&](const std::vector<int>& h) {
            for (int v : h) probe_union = subset_with(probe_union, v);
        });
        for (const FinPoset& b : corpus) {
            std::vector<std::vector<int>> maps;
            for_each_hom_table(a, b, [&](const std::vector<int>& t) { maps.push_back(t); });
            for (std::size_t i = 0; i < maps.size(); ++i) {
                for (std::size_t j = i + 1; j < maps.size(); ++j) {
                    Subset diff = 0;
                    for (int x = 0; x < a.size(); ++x)
                        if (maps[i][x] != maps[j][x]) diff = subset_with(diff, x);
                    if ((diff & probe_union) == 0) return false;
                }
            }
        }
    }
    return true;
}

StrongGeneratorResult is_strong_generator(const FinPoset& g, int corpus_bound) {
    if (corpus_bound > kMaxEnumerationSize) throw BoundTooLarge("corpus bound too large");
    if (!is_generator(g, corpus_bound)) return {false, std::nullopt};

    StrongGeneratorResult result{true, std::nullopt};
    for (const FinPoset& obj : pointed_corpus(corpus_bound)) {
        const auto probes = hom_enumerate(g, obj);
        for_each_proper_subobject(obj, corpus_bound, [&](const FinPoset& sub, const FinCpoMap& m) {
            bool all_factor = true;
            for (const FinCpoMap& s : probes) {
                if (!factors_through_mono(s, m)) {
                    all_factor = false;
                    break;
                }
            }
            if (all_factor) {
                result.is_strong = false;
                result.witness = ProperSubobject{sub, m, obj};
                return true;
            }
            return false;
        });
        if (!result.is_strong) break;
    }
    return result;
}

FinCpoMap separating_morphism(const FinCpoMap& f) {
    if (!f.injective()) throw NotProperSubobject("map is not a monomorphism");
    const bool iso = f.injective() && f.surjective() && f.order_reflecting();
    if (iso) throw NotProperSubobject("map is an isomorphism, not a proper subobject");

    const FinPoset& b = f.dst();
    const FinPoset three = chain_poset(3);
    std::vector<int> table(3);
    table[0] = b.bottom();

    if (!f.surjective()) {
        const Subset img = f.image();
        int missing = -1;
        for (int i = 0; i < b.size() && missing < 0; ++i)
            if (!subset_has(img, i)) missing = i;
        table[1] = table[2] = missing;
    } else {
        // Surjective, not order-reflecting: find incomparable a1, a2 with
        // f(a1) < f(a2) and separate along that strictness.
        const FinPoset& a = f.src();
        int a1 = -1, a2 = -1;
        for (int x = 0; x < a.size() && a1 < 0; ++x)
            for (int y = 0; y < a.size() && a1 < 0; ++y)
                if (b.leq(f.apply(x), f.apply(y)) && !a.leq(x, y) && !a.leq(y, x)) {
                    a1 = x;
                    a2 = y;
                }
        if (a1 < 0) throw NotProperSubobject("no order-reflection failure found");
        table[1] = f.apply(a1);
        table[2] = f.apply(a2);
    }

    FinCpoMap s = FinCpoMap::make("sep_" + f.name(), three, b, std::move(table));
    // The construction promises non-factorization; verify by hom search.
    for (const FinCpoMap& u : hom_enumerate(three, f.src()))
        if (compose(f, u).same_arrow_as(s))
            throw MathError("separating morphism unexpectedly factorizes");
    return s;
}

}  // namespace cpokit
