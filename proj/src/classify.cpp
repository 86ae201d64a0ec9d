#include "cpokit/classify.hpp"

#include <sstream>

#include "cpokit/closure.hpp"
#include "cpokit/enumerate.hpp"

namespace cpokit {

namespace {

// Enumerate injective monotone tables C -> B by backtracking.
void for_each_mono_table(const FinPoset& c, const FinPoset& b,
                         const std::function<void(const std::vector<int>&)>& fn) {
    const int n = c.size();
    std::vector<int> table(static_cast<std::size_t>(n), -1);
    Subset used = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            fn(table);
            return;
        }
        const int lo = (i == c.bottom()) ? b.bottom() : 0;
        const int hi = (i == c.bottom()) ? b.bottom() + 1 : b.size();
        for (int v = lo; v < hi; ++v) {
            if (subset_has(used, v)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (c.leq(j, i) && !b.leq(table[j], v)) ok = false;
                if (c.leq(i, j) && !b.leq(v, table[j])) ok = false;
            }
            if (!ok) continue;
            table[i] = v;
            used = subset_with(used, v);
            self(self, i + 1);
            used &= ~(Subset{1} << v);
            table[i] = -1;
        }
    };
    rec(rec, 0);
}

bool table_is_iso(const FinPoset& c, const FinPoset& b, const std::vector<int>& table) {
    if (c.size() != b.size()) return false;
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j)
            if (c.leq(i, j) != b.leq(table[i], table[j])) return false;
    return true;
}

}  // namespace

bool extremal_epi_via_mono_enumeration(const FinCpoMap& f) {
    const FinPoset& b = f.dst();
    const ClosureTrace t = directed_closure(b, f.image());
    if (t.closure() != b.carrier()) return false;  // not an epi

    // Any mono through which f factors has at most |B| elements in its
    // source, so corpus posets up to that size cover all candidates.
    for (const FinPoset& c : pointed_corpus(b.size())) {
        bool refuted = false;
        for_each_mono_table(c, b, [&](const std::vector<int>& m) {
            if (refuted) return;
            // A factorization through an injective m is unique if it exists:
            // u = m^{-1} o f, demanding im(f) within im(m) and monotonicity.
            std::vector<int> inverse(static_cast<std::size_t>(b.size()), -1);
            for (int i = 0; i < c.size(); ++i) inverse[m[i]] = i;
            std::vector<int> u(static_cast<std::size_t>(f.src().size()));
            for (int x = 0; x < f.src().size(); ++x) {
                const int pre = inverse[f.apply(x)];
                if (pre < 0) return;
                u[x] = pre;
            }
            if (!table_monotone(f.src(), c, u)) return;
            if (!table_is_iso(c, b, m)) refuted = true;
        });
        if (refuted) return false;
    }
    return true;
}

bool extremal_epi_via_generated_order(const FinCpoMap& f) {
    if (!f.surjective()) return false;
    const FinPoset& a = f.src();
    const FinPoset& b = f.dst();
    Relation generated(b.size());
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < a.size(); ++y)
            if (a.leq(x, y)) generated.set(f.apply(x), f.apply(y));
    return generated.transitive_closure() == b.relation();
}

Classification classify(const FinCpoMap& f) {
    Classification c;
    c.mono = f.injective();
    const ClosureTrace t = directed_closure(f.dst(), f.image());
    c.epi = t.closure() == f.dst().carrier();
    c.iso = f.injective() && f.surjective() && f.order_reflecting();
    c.strong_mono = f.order_embedding();
    c.extremal_epi = c.epi && extremal_epi_via_mono_enumeration(f);
    c.strong_epi = c.extremal_epi;
    return c;
}

std::string to_key_value(const Classification& c) {
    std::ostringstream out;
    auto b = [](bool v) { return v ? "true" : "false"; };
    out << "mono=" << b(c.mono) << " epi=" << b(c.epi) << " iso=" << b(c.iso)
        << " strong_mono=" << b(c.strong_mono) << " strong_epi=" << b(c.strong_epi)
        << " extremal_epi=" << b(c.extremal_epi);
    return out.str();
}

}  // namespace cpokit
