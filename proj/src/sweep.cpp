#include "cpokit/sweep.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "cpokit/classify.hpp"
#include "cpokit/closure.hpp"
#include "cpokit/colimits.hpp"
#include "cpokit/enumerate.hpp"
#include "cpokit/errors.hpp"
#include "cpokit/factorize.hpp"

namespace cpokit {

namespace {

constexpr std::size_t kMaxCounterexamples = 8;

void finalize(SweepResult& r) {
    std::sort(r.counterexamples.begin(), r.counterexamples.end());
    if (r.counterexamples.size() > kMaxCounterexamples)
        r.counterexamples.resize(kMaxCounterexamples);
}

void merge_into(SweepResult& into, SweepResult&& part) {
    into.checked += part.checked;
    into.mismatches += part.mismatches;
    into.counterexamples.insert(into.counterexamples.end(),
                                std::make_move_iterator(part.counterexamples.begin()),
                                std::make_move_iterator(part.counterexamples.end()));
}

// Runs per_item(i, local) for i in [0, count) either serially or under
// OpenMP, merging thread-local results. Identical output either way.
template <typename Fn>
SweepResult run_indexed(std::size_t count, Execution exec, Fn&& per_item) {
    SweepResult total;
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < count; ++i) per_item(i, total);
    } else {
#pragma omp parallel
        {
            SweepResult local;
#pragma omp for schedule(dynamic, 8) nowait
            for (long long i = 0; i < static_cast<long long>(count); ++i)
                per_item(static_cast<std::size_t>(i), local);
#pragma omp critical(cpokit_sweep_merge)
            merge_into(total, std::move(local));
        }
    }
    finalize(total);
    return total;
}

std::string arrow_name(const MapCorpus& mc, const MapCorpus::Entry& e) {
    std::ostringstream out;
    out << mc.posets[e.src].name() << "->" << mc.posets[e.dst].name() << "[";
    for (std::size_t k = 0; k < e.table.size(); ++k) out << (k ? "," : "") << e.table[k];
    out << "]";
    return out.str();
}

Subset image_of(const std::vector<int>& table) {
    Subset s = 0;
    for (int v : table) s = subset_with(s, v);
    return s;
}

FinCpoMap materialize(const MapCorpus& mc, const MapCorpus::Entry& e) {
    return FinCpoMap::make("f", mc.posets[e.src], mc.posets[e.dst], e.table);
}

}  // namespace

const MapCorpus& MapCorpus::of(int bound) {
    if (bound < 1 || bound > 5) throw BoundTooLarge("map corpus bound must be 1..5");
    static const std::array<MapCorpus, 6> cache = [] {
        std::array<MapCorpus, 6> all;
        for (int b = 1; b <= 5; ++b) {
            MapCorpus mc;
            mc.posets = pointed_corpus(b);
            for (int s = 0; s < static_cast<int>(mc.posets.size()); ++s)
                for (int d = 0; d < static_cast<int>(mc.posets.size()); ++d)
                    for_each_hom_table(mc.posets[s], mc.posets[d],
                                       [&](const std::vector<int>& t) {
                                           mc.maps.push_back({s, d, t});
                                       });
            all[static_cast<std::size_t>(b)] = std::move(mc);
        }
        return all;
    }();
    return cache[static_cast<std::size_t>(bound)];
}

SweepResult epi_quadruple_sweep(int bound, Execution exec) {
    const MapCorpus& mc = MapCorpus::of(bound);
    return run_indexed(mc.size(), exec, [&](std::size_t idx, SweepResult& r) {
        const auto& e = mc.maps[idx];
        const FinPoset& b = mc.posets[e.dst];
        ++r.checked;

        const bool surjective = image_of(e.table) == b.carrier();
        const bool closed = directed_closure(b, image_of(e.table)).closure() == b.carrier();

        const FinCpoMap f = materialize(mc, e);
        const CokernelPair ck = cokernel_pair(f);
        const bool legs_equal = ck.g.table() == ck.h.table();

        // Right cancellation: u o f = v o f forces u = v, i.e. every map out
        // of B is determined by its values on the image.
        bool cancellable = true;
        const Subset img = image_of(e.table);
        for (const FinPoset& t : mc.posets) {
            if (!cancellable) break;
            std::map<std::vector<int>, int> by_restriction;
            for_each_hom_table(b, t, [&](const std::vector<int>& u) {
                if (!cancellable) return;
                std::vector<int> restricted;
                for (int i = 0; i < b.size(); ++i)
                    if (subset_has(img, i)) restricted.push_back(u[i]);
                if (++by_restriction[restricted] > 1) cancellable = false;
            });
        }

        if (surjective != closed || closed != legs_equal || legs_equal != cancellable) {
            ++r.mismatches;
            std::ostringstream why;
            why << arrow_name(mc, e) << " surj=" << surjective << " closure=" << closed
                << " legs=" << legs_equal << " cancel=" << cancellable;
            r.counterexamples.push_back(why.str());
        }
    });
}

SweepResult mono_iso_sweep(int bound, Execution exec) {
    const MapCorpus& mc = MapCorpus::of(bound);
    return run_indexed(mc.size(), exec, [&](std::size_t idx, SweepResult& r) {
        const auto& e = mc.maps[idx];
        const FinPoset& a = mc.posets[e.src];
        const FinPoset& b = mc.posets[e.dst];
        ++r.checked;

        const bool injective = subset_size(image_of(e.table)) == a.size();

        // Left cancellation: f o u = f o v forces u = v over corpus sources.
        bool left_cancellable = true;
        for (const FinPoset& c : mc.posets) {
            if (!left_cancellable) break;
            std::map<std::vector<int>, int> composed;
            for_each_hom_table(c, a, [&](const std::vector<int>& u) {
                if (!left_cancellable) return;
                std::vector<int> fu(u.size());
                for (std::size_t i = 0; i < u.size(); ++i) fu[i] = e.table[u[i]];
                if (++composed[fu] > 1) left_cancellable = false;
            });
        }

        bool order_reflecting = true;
        for (int i = 0; i < a.size() && order_reflecting; ++i)
            for (int j = 0; j < a.size() && order_reflecting; ++j)
                if (b.leq(e.table[i], e.table[j]) && !a.leq(i, j)) order_reflecting = false;
        const bool bijective = injective && image_of(e.table) == b.carrier();
        const bool iso_characterized = bijective && order_reflecting;

        // Invertibility: search hom(B, A) for a two-sided inverse.
        bool invertible = false;
        for_each_hom_table(b, a, [&](const std::vector<int>& ginv) {
            if (invertible) return;
            for (int i = 0; i < a.size(); ++i)
                if (ginv[e.table[i]] != i) return;
            for (int j = 0; j < b.size(); ++j)
                if (e.table[ginv[j]] != j) return;
            invertible = true;
        });

        if (injective != left_cancellable || iso_characterized != invertible) {
            ++r.mismatches;
            std::ostringstream why;
            why << arrow_name(mc, e) << " inj=" << injective << " lcancel=" << left_cancellable
                << " orbij=" << iso_characterized << " inv=" << invertible;
            r.counterexamples.push_back(why.str());
        }
    });
}

namespace {

// Diagonalization failure for the square family (e, m): some u : A -> C with
// a commuting square (v is forced by surjectivity of e) that has no diagonal.
bool square_family_fails(const FinPoset& a, const FinPoset& b, const std::vector<int>& e,
                         const FinPoset& c, const FinPoset& d, const std::vector<int>& m) {
    bool fails = false;
    for_each_hom_table(a, c, [&](const std::vector<int>& u) {
        if (fails) return;
        // v : B -> D with v o e = m o u; e is surjective so v is forced.
        std::vector<int> v(static_cast<std::size_t>(b.size()), -1);
        for (int x = 0; x < a.size(); ++x) {
            const int bx = e[x];
            const int val = m[u[x]];
            if (v[bx] == -1)
                v[bx] = val;
            else if (v[bx] != val)
                return;  // no commuting square for this u
        }
        for (int i = 0; i < b.size(); ++i)
            if (v[i] == -1) return;  // unreachable for surjective e
        if (!table_monotone(b, d, v)) return;

        // diagonal d0 : B -> C with d0 o e = u is likewise forced.
        std::vector<int> diag(static_cast<std::size_t>(b.size()), -1);
        for (int x = 0; x < a.size(); ++x) {
            const int bx = e[x];
            if (diag[bx] == -1)
                diag[bx] = u[x];
            else if (diag[bx] != u[x])
                return;  // cannot happen: m injective and v well-defined
        }
        if (!table_monotone(b, c, diag)) {
            fails = true;
            return;
        }
        // m o diag = v holds by construction when diag is monotone.
    });
    return fails;
}

}  // namespace

StrongCoincidence strong_coincidence_sweep(int bound, Execution exec) {
    const MapCorpus& mc = MapCorpus::of(bound);

    // Partition the corpus once.
    std::vector<std::size_t> epis, monos;
    for (std::size_t i = 0; i < mc.size(); ++i) {
        const auto& e = mc.maps[i];
        if (image_of(e.table) == mc.posets[e.dst].carrier()) epis.push_back(i);
        if (subset_size(image_of(e.table)) == mc.posets[e.src].size()) monos.push_back(i);
    }

    StrongCoincidence out;
    out.epis = run_indexed(epis.size(), exec, [&](std::size_t k, SweepResult& r) {
        const auto& e = mc.maps[epis[k]];
        ++r.checked;
        bool diag_ok = true;
        for (std::size_t mi : monos) {
            const auto& m = mc.maps[mi];
            if (square_family_fails(mc.posets[e.src], mc.posets[e.dst], e.table,
                                    mc.posets[m.src], mc.posets[m.dst], m.table)) {
                diag_ok = false;
                break;
            }
        }
        const bool extremal = extremal_epi_via_mono_enumeration(materialize(mc, e));
        if (diag_ok != extremal) {
            ++r.mismatches;
            r.counterexamples.push_back(arrow_name(mc, e) + " diag=" +
                                        std::to_string(diag_ok) + " extremal=" +
                                        std::to_string(extremal));
        }
    });

    out.monos = run_indexed(monos.size(), exec, [&](std::size_t k, SweepResult& r) {
        const auto& m = mc.maps[monos[k]];
        ++r.checked;
        bool diag_ok = true;
        for (std::size_t ei : epis) {
            const auto& e = mc.maps[ei];
            if (square_family_fails(mc.posets[e.src], mc.posets[e.dst], e.table,
                                    mc.posets[m.src], mc.posets[m.dst], m.table)) {
                diag_ok = false;
                break;
            }
        }
        const bool embedding = materialize(mc, m).order_embedding();
        if (diag_ok != embedding) {
            ++r.mismatches;
            r.counterexamples.push_back(arrow_name(mc, m) + " diag=" +
                                        std::to_string(diag_ok) + " embedding=" +
                                        std::to_string(embedding));
        }
    });
    return out;
}

SweepResult factorization_sweep(int bound, Execution exec) {
    const MapCorpus& mc = MapCorpus::of(bound);
    return run_indexed(mc.size(), exec, [&](std::size_t idx, SweepResult& r) {
        const auto& entry = mc.maps[idx];
        ++r.checked;
        const FinCpoMap f = materialize(mc, entry);
        const Factorization fac = epi_strongmono_factorize(f);

        bool ok = compose(fac.mono_part, fac.epi_part).same_arrow_as(f);
        ok = ok && fac.epi_part.surjective();  // epi in the finite tier
        ok = ok && fac.mono_part.order_embedding();
        // mid is the image with inherited order
        ok = ok && subset_size(f.image()) == fac.mid.size();
        for (int i = 0; i < fac.mid.size() && ok; ++i)
            for (int j = 0; j < fac.mid.size() && ok; ++j)
                if (fac.mid.leq(i, j) !=
                    f.dst().leq(fac.mono_part.apply(i), fac.mono_part.apply(j)))
                    ok = false;
        if (!ok) {
            ++r.mismatches;
            r.counterexamples.push_back(arrow_name(mc, entry) + " factorization law failed");
        }
    });
}

SweepResult coequalizer_universal_sweep(int src_bound, int tgt_bound, Execution exec) {
    const MapCorpus& tgt_mc = MapCorpus::of(tgt_bound);
    const auto& sources = pointed_corpus(src_bound);

    // Work units: parallel pairs (f, g) between source-bounded posets.
    struct Pair {
        FinCpoMap f, g;
    };
    std::vector<Pair> pairs;
    for (const FinPoset& a : sources) {
        for (const FinPoset& b : sources) {
            const auto maps = hom_enumerate(a, b);
            for (std::size_t i = 0; i < maps.size(); ++i)
                for (std::size_t j = 0; j < maps.size(); ++j)
                    pairs.push_back({maps[i], maps[j]});
        }
    }

    return run_indexed(pairs.size(), exec, [&](std::size_t idx, SweepResult& r) {
        const auto& [f, g] = pairs[idx];
        ++r.checked;
        const Coequalizer ce = coequalizer(f, g);
        bool ok = compose(ce.q, f).same_arrow_as(compose(ce.q, g));
        const std::vector<int>& q = ce.q.table();

        for (const FinPoset& t : tgt_mc.posets) {
            if (!ok) break;
            for_each_hom_table(f.dst(), t, [&](const std::vector<int>& h) {
                if (!ok) return;
                for (int x = 0; x < f.src().size(); ++x)
                    if (h[f.apply(x)] != h[g.apply(x)]) return;  // h does not coequalize
                // existence and uniqueness of u with u o q = h
                int found = 0;
                for_each_hom_table(ce.object, t, [&](const std::vector<int>& u) {
                    for (int bx = 0; bx < f.dst().size(); ++bx)
                        if (u[q[bx]] != h[bx]) return;
                    ++found;
                });
                if (found != 1) ok = false;
            });
        }
        if (!ok) {
            ++r.mismatches;
            r.counterexamples.push_back("coequalizer universal property failed for pair " +
                                        std::to_string(idx));
        }
    });
}

SweepResult extremal_route_sweep(int bound, Execution exec) {
    const MapCorpus& mc = MapCorpus::of(bound);
    return run_indexed(mc.size(), exec, [&](std::size_t idx, SweepResult& r) {
        const auto& entry = mc.maps[idx];
        ++r.checked;
        const FinCpoMap f = materialize(mc, entry);
        const bool via_generated = extremal_epi_via_generated_order(f);
        const bool via_monos =
            f.surjective() ? extremal_epi_via_mono_enumeration(f) : false;
        if (via_generated != via_monos) {
            ++r.mismatches;
            r.counterexamples.push_back(arrow_name(mc, entry) + " generated=" +
                                        std::to_string(via_generated) + " monos=" +
                                        std::to_string(via_monos));
        }
    });
}

}  // namespace cpokit
