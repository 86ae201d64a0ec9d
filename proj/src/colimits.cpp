#include "cpokit/colimits.hpp"

#include <algorithm>
#include <numeric>

#include "cpokit/classify.hpp"
#include "cpokit/errors.hpp"

namespace cpokit {

Coproduct coproduct(std::span<const FinPoset> parts) {
    if (parts.empty()) throw MathError("coproduct of an empty list");
    int total = 1;
    for (const auto& p : parts) total += p.size() - 1;
    if (total > 64) throw BoundTooLarge("coproduct would exceed 64 elements");

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(total));
    labels.push_back("0");
    // offset[k][i] = index of part k's element i in the coproduct
    std::vector<std::vector<int>> at(parts.size());
    std::string name;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const FinPoset& p = parts[k];
        name += (k ? "+" : "") + p.name();
        at[k].assign(static_cast<std::size_t>(p.size()), 0);
        for (int i = 0; i < p.size(); ++i) {
            if (i == p.bottom()) continue;
            at[k][i] = static_cast<int>(labels.size());
            labels.push_back(std::to_string(k) + "." + p.label(i));
        }
    }

    Relation rel(total);
    for (int j = 0; j < total; ++j) rel.set(0, j);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const FinPoset& p = parts[k];
        for (int i = 0; i < p.size(); ++i)
            for (int j = 0; j < p.size(); ++j)
                if (p.leq(i, j)) rel.set(at[k][i], at[k][j]);
    }
    FinPoset object = FinPoset::make(std::move(name), std::move(labels), std::move(rel));

    Coproduct out{std::move(object), {}};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::vector<int> table(at[k].begin(), at[k].end());
        out.injections.push_back(FinCpoMap::make("inj" + std::to_string(k), parts[k],
                                                 out.object, std::move(table)));
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);  // keep the least index as representative
        parent[b] = a;
    }
};

}  // namespace

Coequalizer coequalizer(const FinCpoMap& f, const FinCpoMap& g) {
    if (!(f.src() == g.src()) || !(f.dst() == g.dst()))
        throw NotCpoMap("coequalizer needs a parallel pair");
    const FinPoset& b = f.dst();
    const int n = b.size();

    UnionFind uf(n);
    for (int a = 0; a < f.src().size(); ++a) uf.unite(f.apply(a), g.apply(a));

    std::vector<int> cls(static_cast<std::size_t>(n));
    std::vector<int> reps;
    Relation order(0);
    for (;;) {
        // dense class ids in order of least member
        reps.clear();
        for (int i = 0; i < n; ++i)
            if (uf.find(i) == i) reps.push_back(i);
        for (int i = 0; i < n; ++i)
            cls[i] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), uf.find(i)) -
                                      reps.begin());
        const int k = static_cast<int>(reps.size());

        Relation rel(k);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (b.leq(x, y)) rel.set(cls[x], cls[y]);
        rel = rel.transitive_closure();

        bool merged = false;
        for (int c = 0; c < k && !merged; ++c)
            for (int d = c + 1; d < k && !merged; ++d)
                if (rel.at(c, d) && rel.at(d, c)) {
                    uf.unite(reps[c], reps[d]);
                    merged = true;
                }
        if (!merged) {
            order = std::move(rel);
            break;
        }
    }

    std::vector<std::string> labels;
    labels.reserve(reps.size());
    for (int r : reps) labels.push_back(b.label(r));
    FinPoset q_obj = FinPoset::make("coeq_" + f.name() + "_" + g.name(), std::move(labels),
                                    std::move(order));
    std::vector<int> table(cls.begin(), cls.end());
    FinCpoMap q = FinCpoMap::make("q", b, q_obj, std::move(table));
    return Coequalizer{std::move(q_obj), std::move(q)};
}

FinCpoMap induced_through(const Coequalizer& c, const FinCpoMap& h) {
    if (!(h.src() == c.q.src())) throw NotCpoMap("induced_through: wrong source");
    const int k = c.object.size();
    std::vector<int> table(static_cast<std::size_t>(k), -1);
    for (int x = 0; x < h.src().size(); ++x) {
        const int q_of_x = c.q.apply(x);
        if (table[q_of_x] == -1)
            table[q_of_x] = h.apply(x);
        else if (table[q_of_x] != h.apply(x))
            throw NotCpoMap("map does not coequalize the collapsed pair");
    }
    return FinCpoMap::make("u_" + h.name(), c.object, h.dst(), std::move(table));
}

Pushout pushout(const FinCpoMap& m1, const FinCpoMap& m2) {
    if (!(m1.src() == m2.src())) throw NotCpoMap("pushout needs a shared source");
    const FinPoset parts[2] = {m1.dst(), m2.dst()};
    Coproduct cp = coproduct(parts);
    Coequalizer ce = coequalizer(compose(cp.injections[0], m1), compose(cp.injections[1], m2));
    FinCpoMap leg1 = compose(ce.q, cp.injections[0]);
    FinCpoMap leg2 = compose(ce.q, cp.injections[1]);
    return Pushout{std::move(ce.object), std::move(leg1), std::move(leg2)};
}

CokernelPair cokernel_pair(const FinCpoMap& m) {
    Pushout po = pushout(m, m);
    return CokernelPair{m, std::move(po.object), std::move(po.leg1), std::move(po.leg2)};
}

FinPoset kappa_times_3(int kappa) {
    if (kappa < 0) throw MathError("kappa must be nonnegative");
    if (kappa == 0) return one_point_poset("0x3");
    std::vector<FinPoset> parts(static_cast<std::size_t>(kappa), chain_poset(3));
    FinPoset p = coproduct(parts).object;
    return FinPoset::make(std::to_string(kappa) + "x3", p.labels(), p.relation());
}

ChainColimit eventually_constant_colimit(std::span<const FinCpoMap> chain) {
    if (chain.empty()) throw MathError("colimit of an empty chain");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!(chain[i].dst() == chain[i + 1].src()))
            throw NotCpoMap("chain maps do not compose");

    // The chain must become stationary: its final map must be an iso.
    if (!classify(chain.back()).iso)
        throw MathError("chain is not eventually constant (last map is not an iso)");

    // Colimit object: the stationary object; legs are the forward composites.
    ChainColimit out{chain.back().dst(), {}};
    std::vector<FinCpoMap> legs;
    FinCpoMap acc = FinCpoMap::identity(out.object);
    legs.push_back(acc);
    for (std::size_t i = chain.size(); i-- > 0;) {
        acc = compose(acc, chain[i]);
        legs.push_back(acc);
    }
    std::reverse(legs.begin(), legs.end());
    out.legs = std::move(legs);
    return out;
}

}  // namespace cpokit
