#include "cpokit/cpomap.hpp"

#include "cpokit/errors.hpp"

namespace cpokit {

FinCpoMap FinCpoMap::make(std::string name, FinPoset src, FinPoset dst, std::vector<int> table) {
    if (static_cast<int>(table.size()) != src.size())
        throw NotCpoMap("map table must assign every source element");
    for (int v : table)
        if (v < 0 || v >= dst.size()) throw NotCpoMap("map table entry out of range");
    if (table[src.bottom()] != dst.bottom())
        throw NotCpoMap("map does not preserve the bottom element");
    for (int i = 0; i < src.size(); ++i)
        for (int j = 0; j < src.size(); ++j)
            if (src.leq(i, j) && !dst.leq(table[i], table[j]))
                throw NotCpoMap("map is not monotone on " + src.label(i) + " <= " + src.label(j));
    return FinCpoMap(std::move(name), std::move(src), std::move(dst), std::move(table));
}

FinCpoMap FinCpoMap::identity(const FinPoset& p) {
    std::vector<int> t(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) t[i] = i;
    return FinCpoMap("id_" + p.name(), p, p, std::move(t));
}

Subset FinCpoMap::image() const {
    Subset s = 0;
    for (int v : table_) s = subset_with(s, v);
    return s;
}

bool FinCpoMap::injective() const {
    return subset_size(image()) == src_.size();
}

bool FinCpoMap::surjective() const {
    return image() == dst_.carrier();
}

bool FinCpoMap::order_reflecting() const {
    for (int i = 0; i < src_.size(); ++i)
        for (int j = 0; j < src_.size(); ++j)
            if (dst_.leq(table_[i], table_[j]) && !src_.leq(i, j)) return false;
    return true;
}

bool FinCpoMap::order_embedding() const {
    for (int i = 0; i < src_.size(); ++i)
        for (int j = 0; j < src_.size(); ++j)
            if (src_.leq(i, j) != dst_.leq(table_[i], table_[j])) return false;
    return true;
}

bool FinCpoMap::preserves_chain_joins() const {
    const int n = src_.size();
    for (Subset c = 0; c < (Subset{1} << n); ++c) {
        if (!src_.is_chain(c)) continue;
        auto join = src_.join_of(c);
        if (!join) return false;  // source is a cpo, cannot happen
        Subset img = 0;
        for (int i = 0; i < n; ++i)
            if (subset_has(c, i)) img = subset_with(img, table_[i]);
        if (img == 0) img = subset_with(img, dst_.bottom());  // empty chain
        auto dst_join = dst_.join_of(img);
        if (!dst_join || *dst_join != table_[*join]) return false;
    }
    return true;
}

FinCpoMap compose(const FinCpoMap& g, const FinCpoMap& f) {
    if (!(f.dst() == g.src())) throw NotCpoMap("compose: codomain/domain mismatch");
    std::vector<int> t(static_cast<std::size_t>(f.src().size()));
    for (int i = 0; i < f.src().size(); ++i) t[i] = g.apply(f.apply(i));
    return FinCpoMap::make(g.name() + "." + f.name(), f.src(), g.dst(), std::move(t));
}

bool table_monotone(const FinPoset& src, const FinPoset& dst, const std::vector<int>& table) {
    for (int i = 0; i < src.size(); ++i)
        for (int j = 0; j < src.size(); ++j)
            if (src.leq(i, j) && !dst.leq(table[i], table[j])) return false;
    return true;
}

void for_each_hom_table(const FinPoset& src, const FinPoset& dst,
                        const std::function<void(const std::vector<int>&)>& fn) {
    if (src.size() > kMaxHomSize || dst.size() > kMaxHomSize)
        throw BoundTooLarge("hom enumeration is limited to posets of size " +
                            std::to_string(kMaxHomSize));
    const int n = src.size();
    std::vector<int> table(static_cast<std::size_t>(n), -1);

    // Backtracking in source-index order; monotonicity is checked against
    // all previously assigned comparable elements, so the emitted tables
    // come out in lexicographic order.
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            fn(table);
            return;
        }
        if (i == src.bottom()) {
            table[i] = dst.bottom();
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (src.leq(j, i) && !dst.leq(table[j], table[i])) ok = false;
                if (src.leq(i, j) && !dst.leq(table[i], table[j])) ok = false;
            }
            if (ok) self(self, i + 1);
            table[i] = -1;
            return;
        }
        for (int v = 0; v < dst.size(); ++v) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (src.leq(j, i) && !dst.leq(table[j], v)) ok = false;
                if (src.leq(i, j) && !dst.leq(v, table[j])) ok = false;
            }
            if (!ok) continue;
            table[i] = v;
            self(self, i + 1);
            table[i] = -1;
        }
    };
    rec(rec, 0);
}

std::vector<FinCpoMap> hom_enumerate(const FinPoset& src, const FinPoset& dst) {
    std::vector<FinCpoMap> out;
    int k = 0;
    for_each_hom_table(src, dst, [&](const std::vector<int>& t) {
        out.push_back(FinCpoMap::make("h" + std::to_string(k++), src, dst, t));
    });
    return out;
}

std::size_t hom_count(const FinPoset& src, const FinPoset& dst) {
    std::size_t n = 0;
    for_each_hom_table(src, dst, [&](const std::vector<int>&) { ++n; });
    return n;
}

}  // namespace cpokit
