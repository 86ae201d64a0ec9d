#include "cpokit/factorize.hpp"

#include "cpokit/closure.hpp"
#include "cpokit/errors.hpp"

namespace cpokit {

Factorization epi_strongmono_factorize(const FinCpoMap& f) {
    const FinPoset& b = f.dst();
    const Subset carrier = directed_closure(b, f.image()).closure();

    std::vector<std::string> labels;
    std::vector<int> members;  // mid index -> b index
    for (int i = 0; i < b.size(); ++i) {
        if (!subset_has(carrier, i)) continue;
        members.push_back(i);
        labels.push_back(b.label(i));
    }
    const int k = static_cast<int>(members.size());
    Relation rel(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (b.leq(members[i], members[j])) rel.set(i, j);
    FinPoset mid = FinPoset::make(f.name() + "_image", std::move(labels), std::move(rel));

    std::vector<int> into(static_cast<std::size_t>(b.size()), -1);
    for (int i = 0; i < k; ++i) into[members[i]] = i;
    std::vector<int> e_table(static_cast<std::size_t>(f.src().size()));
    for (int x = 0; x < f.src().size(); ++x) e_table[x] = into[f.apply(x)];

    FinCpoMap e = FinCpoMap::make("e_" + f.name(), f.src(), mid, std::move(e_table));
    FinCpoMap m = FinCpoMap::make("m_" + f.name(), mid, b, std::move(members));
    return Factorization{f, std::move(mid), std::move(e), std::move(m)};
}

std::optional<FinCpoMap> diagonal_fill(const Square& square) {
    const auto& [u, e, m, v] = square;
    if (!(u.src() == e.src()) || !(m.src() == u.dst()) || !(v.src() == e.dst()) ||
        !(m.dst() == v.dst()))
        throw NotCommuting("square arrows do not line up");
    if (!compose(m, u).same_arrow_as(compose(v, e)))
        throw NotCommuting("square does not commute: m o u != v o e");

    const FinPoset& b = e.dst();
    const FinPoset& c = u.dst();
    std::optional<FinCpoMap> found;

    if (e.surjective()) {
        // d o e = u pins d on all of B; check well-definedness and the laws.
        std::vector<int> table(static_cast<std::size_t>(b.size()), -1);
        for (int x = 0; x < e.src().size(); ++x) {
            const int bx = e.apply(x);
            if (table[bx] == -1)
                table[bx] = u.apply(x);
            else if (table[bx] != u.apply(x))
                return std::nullopt;
        }
        if (!table_monotone(b, c, table)) return std::nullopt;
        if (table[b.bottom()] != c.bottom()) return std::nullopt;
        FinCpoMap d = FinCpoMap::make("d", b, c, std::move(table));
        if (!compose(d, e).same_arrow_as(u)) return std::nullopt;
        if (!compose(m, d).same_arrow_as(v)) return std::nullopt;
        return d;
    }

    for_each_hom_table(b, c, [&](const std::vector<int>& t) {
        if (found) return;
        for (int x = 0; x < e.src().size(); ++x)
            if (t[e.apply(x)] != u.apply(x)) return;
        for (int y = 0; y < b.size(); ++y)
            if (m.apply(t[y]) != v.apply(y)) return;
        found = FinCpoMap::make("d", b, c, t);
    });
    return found;
}

}  // namespace cpokit
